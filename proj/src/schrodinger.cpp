#include "cmhopf/schrodinger.hpp"

#include "cmhopf/family.hpp"
#include "cmhopf/hopf.hpp"

#include <sstream>
#include <vector>

namespace cmhopf {

namespace {

bool is_kind(Letter l, Kind k) { return kind_of(l) == k; }

int x_count(const Word& w) {
  int n = 0;
  for (Letter l : w) n += (l == kX);
  return n;
}

NCPoly act_word(const SchrodingerData& D, const Word& u, const Word& phi);

// g |> phi for a single actor letter g and a (possibly non-normal) word phi.
NCPoly act_letter(const SchrodingerData& D, Letter g, const Word& phi) {
  if (phi.empty()) return NCPoly::scalar(counit_word(*D.actor, Word{g}));
  if (phi.size() == 1) return D.space->normalize(D.table(g, phi[0]));
  const Word head(phi.begin(), phi.end() - 1);
  const Word last{phi.back()};
  NCPoly out;
  for (const auto& [k, c] : coproduct_word(*D.actor, Word{g}).terms) {
    NCPoly a = act_word(D, k[0], head);
    if (a.is_zero()) continue;
    NCPoly b = act_word(D, k[1], last);
    if (b.is_zero()) continue;
    out += D.space->mul(a, b) * c;
  }
  return out;
}

NCPoly act_word(const SchrodingerData& D, const Word& u, const Word& phi) {
  if (u.empty()) return D.space->normalize(phi);
  auto key = std::make_pair(u, phi);
  auto hit = D.cache_->act.find(key);
  if (hit != D.cache_->act.end()) return hit->second;
  const Word rest(u.begin() + 1, u.end());
  NCPoly inner = act_word(D, rest, phi);
  NCPoly out;
  for (const auto& [w, c] : inner.terms) out += act_letter(D, u[0], w) * c;
  D.cache_->act.emplace(key, out);
  return out;
}

NCPoly ubplus_table(const Q& lambda, Letter u, Letter phi, const Q& z_coeff, const Q& beta_x) {
  const bool x = phi == kX;
  if (is_kind(u, Kind::Z) || is_kind(u, Kind::SmallZ)) {
    int n = is_kind(u, Kind::SmallZ) ? 2 : static_cast<int>(index_of(u));
    return (x && n == 2) ? NCPoly::gen(kY, z_coeff) : NCPoly{};
  }
  if (u == kAlpha) return x ? NCPoly::gen(kX) : NCPoly::gen(kY) + NCPoly::scalar(lambda);
  if (u == kAlphaInv) return x ? NCPoly::gen(kX) : NCPoly::gen(kY) - NCPoly::scalar(lambda);
  if (u == kBeta) return x ? NCPoly::scalar(beta_x) : NCPoly{};
  throw UnknownGenerator(letter_name(u));
}

std::vector<Word> actor_words(const Algebra& A, int length) {
  std::vector<Word> out;
  for (Letter g : A.gens) out.push_back({g});
  if (length >= 2)
    for (Letter a : A.gens)
      for (Letter b : A.gens)
        if (A.is_normal({a, b})) out.push_back({a, b});
  return out;
}

}  // namespace

SchrodingerData schrodinger_ucm(const Q& lambda, int N) {
  SchrodingerData D;
  D.name = "schrodinger:UCM(" + qstr(lambda) + ")";
  D.actor = build({Family::UCM, lambda, N});
  D.space = build({Family::Ubplus, lambda, N});
  D.coactor = build({Family::HCM, lambda, N});
  D.pairing = pairing_ucm_hcm(D.actor, D.coactor);
  D.table = [lambda](Letter u, Letter phi) { return ubplus_table(lambda, u, phi, Q(2), Q(1)); };
  return D;
}

SchrodingerData schrodinger_uheis(const Q& lambda) {
  if (is_zero(lambda)) throw OutOfHypothesis("U_lambda(heis) action needs lambda != 0");
  SchrodingerData D;
  D.name = "schrodinger:UHeis(" + qstr(lambda) + ")";
  D.actor = build({Family::UHeis, lambda, 8});
  D.space = build({Family::Ubplus, lambda, 8});
  D.coactor = build({Family::KHeis, lambda, 8});
  D.pairing = pairing_uheis_kheis(D.actor, D.coactor);
  D.table = [lambda](Letter u, Letter phi) { return ubplus_table(lambda, u, phi, Q(2), Q(1)); };
  return D;
}

SchrodingerData schrodinger_uheis_scaled_table(const Q& lambda) {
  SchrodingerData D = schrodinger_uheis(lambda);
  D.name = "schrodinger:UHeis(" + qstr(lambda) + ")scaled";
  D.table = [lambda](Letter u, Letter phi) {
    return ubplus_table(lambda, u, phi, Q(2) * lambda, lambda);
  };
  D.x_scale = lambda;
  return D;
}

NCPoly schrodinger_act(const SchrodingerData& D, const NCPoly& u, const NCPoly& phi) {
  NCPoly nu = D.actor->normalize(u);
  NCPoly out;
  for (const auto& [a, ca] : nu.terms)
    for (const auto& [w, cw] : phi.terms) out += act_word(D, a, w) * (ca * cw);
  return out;
}

TensorPoly schrodinger_coact(const SchrodingerData& D, const NCPoly& phi) {
  TensorPoly out({D.space.get(), D.coactor.get()});
  const NCPoly nphi = D.space->normalize(phi);
  for (const auto& [w, c] : nphi.terms) {
    const Q scale = qpow(D.x_scale, x_count(w));
    for (const auto& [k, ck] : coproduct_word(*D.coactor, w).terms) {
      for (Letter l : k[0])
        if (!D.space->contains(l))
          throw std::logic_error("coaction leaves the space: " + letter_name(l));
      out.add(k, c * ck * scale * qpow(D.x_scale, -x_count(k[0])));
    }
  }
  return out;
}

NCPoly act_through_coaction(const SchrodingerData& D, const NCPoly& u, const NCPoly& phi) {
  NCPoly out;
  for (const auto& [k, c] : schrodinger_coact(D, phi).terms) {
    Q p = D.pairing->pair(u, NCPoly::of(k[1]));
    if (!is_zero(p)) out += D.space->normalize(k[0]) * (c * p);
  }
  return out;
}

Report check_schrodinger(const SchrodingerData& D, const SchrodingerCheckOptions& opt,
                         const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? D.name : suite;
  const Algebra& A = *D.actor;
  const Algebra& B = *D.space;
  const auto space_words = B.basis(opt.grade_bound);
  const auto words = actor_words(A, opt.actor_length);
  std::map<std::string, int> counts;

  auto guarded = [&](const std::string& axiom, const std::string& id,
                     const std::function<std::string()>& body) {
    try {
      ++counts[axiom];
      std::string w = body();
      if (!w.empty()) rep.fail(s, axiom + ":" + id, w);
    } catch (const TruncationOverflow& e) {
      rep.add(s, axiom + ":" + id, Status::Skip, e.what());
    }
  };
  auto differ = [](const std::string& l, const NCPoly& a, const std::string& r, const NCPoly& b) {
    return a == b ? std::string() : l + " = " + render(a) + ", " + r + " = " + render(b);
  };

  // Actor relations act as zero.
  for (auto [a, b] : A.rule_pairs()) {
    const RuleOut& ro = A.rule_at(a, b);
    for (const Word& phi : space_words) {
      const std::string id = letter_name(a) + letter_name(b) + "|" + render_word(phi);
      if (ro.kind == RuleOut::Overflow) {
        rep.add(s, "actor-relation:" + id, Status::Skip, "truncation overflow");
        continue;
      }
      guarded("actor-relation", id, [&]() {
        return differ("(ab)|>phi", act_word(D, {a, b}, phi), "rhs|>phi",
                      schrodinger_act(D, ro.rhs, NCPoly::of(phi)));
      });
    }
  }

  // Space relations are preserved by each generator.
  for (auto [p, q] : B.rule_pairs()) {
    const RuleOut& ro = B.rule_at(p, q);
    for (Letter g : A.gens)
      guarded("space-relation", letter_name(g) + "|" + letter_name(p) + letter_name(q), [&]() {
        return differ("u|>(pq)", act_letter(D, g, {p, q}), "u|>rhs",
                      schrodinger_act(D, NCPoly::gen(g), ro.rhs));
      });
  }

  for (const Word& u : words) {
    guarded("unit", render_word(u), [&]() {
      return differ("u|>1", act_word(D, u, {}), "eps(u)", NCPoly::scalar(counit_word(A, u)));
    });
    for (const Word& phi : space_words)
      for (const Word& psi : space_words) {
        if (phi.empty() || psi.empty() || word_grade(phi) + word_grade(psi) > opt.grade_bound) continue;
        guarded("module-algebra", render_word(u) + "|" + render_word(phi) + "|" + render_word(psi), [&]() {
          NCPoly lhs = schrodinger_act(D, NCPoly::of(u), B.mul(NCPoly::of(phi), NCPoly::of(psi)));
          NCPoly rhs;
          for (const auto& [k, c] : coproduct_word(A, u).terms)
            rhs += B.mul(act_word(D, k[0], phi), act_word(D, k[1], psi)) * c;
          return differ("u|>(phi psi)", lhs, "(u1|>phi)(u2|>psi)", rhs);
        });
      }
    if (opt.duality)
      for (const Word& phi : space_words)
        guarded("duality", render_word(u) + "|" + render_word(phi), [&]() {
          return differ("u|>phi", act_word(D, u, phi), "phi(1)<u,phi(2)>",
                        act_through_coaction(D, NCPoly::of(u), NCPoly::of(phi)));
        });
  }

  for (const Word& phi : space_words) {
    guarded("coassociativity", render_word(phi), [&]() -> std::string {
      TensorPoly dr = schrodinger_coact(D, NCPoly::of(phi));
      TensorPoly lhs = map_leg(dr, 0, [&](const Word& w) { return schrodinger_coact(D, NCPoly::of(w)); });
      TensorPoly rhs = coproduct_on_leg(dr, 1);
      return lhs == rhs ? std::string() : "(DR x id)DR = " + render(lhs) + ", (id x D)DR = " + render(rhs);
    });
    guarded("coaction-counit", render_word(phi), [&]() {
      return differ("(id x eps)DR", counit_on_leg(schrodinger_coact(D, NCPoly::of(phi)), 1).to_poly(),
                    "phi", B.normalize(phi));
    });
    for (const Word& psi : space_words) {
      if (phi.empty() || psi.empty() || word_grade(phi) + word_grade(psi) > opt.grade_bound) continue;
      guarded("coaction-multiplicative", render_word(phi) + "|" + render_word(psi), [&]() -> std::string {
        TensorPoly lhs = schrodinger_coact(D, B.mul(NCPoly::of(phi), NCPoly::of(psi)));
        TensorPoly rhs = tensor_mul(schrodinger_coact(D, NCPoly::of(phi)), schrodinger_coact(D, NCPoly::of(psi)));
        return lhs == rhs ? std::string() : "DR(phi psi) = " + render(lhs) + ", DR(phi)DR(psi) = " + render(rhs);
      });
    }
  }

  for (const auto& [axiom, n] : counts) rep.pass(s, "summary:" + axiom, std::to_string(n) + " cases");
  return rep;
}

Report check_quotient_restriction(const Q& lambda, int N, int grade_bound, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "schrodinger:quotient(" + qstr(lambda) + ")" : suite;
  auto H = build({Family::HCM, lambda, N});
  HeisQuotient q = heis_quotient(H);
  auto B = build({Family::Ubplus, lambda, N});
  int n = 0;
  for (const Word& phi : B->basis(grade_bound)) {
    ++n;
    TensorPoly pushed = map_leg(coproduct_word(*H, phi), 1, [&](const Word& w) {
      return TensorPoly::from_poly(q.quotient_map.apply(NCPoly::of(w)), q.kheis.get());
    });
    TensorPoly direct = coproduct_word(*q.kheis, phi);
    if (pushed != direct)
      rep.fail(s, "restrict:" + render_word(phi), "(id x q)DR = " + render(pushed) + ", DR = " + render(direct));
  }
  rep.pass(s, "summary:restrict", std::to_string(n) + " cases");
  return rep;
}

Report check_table_scaling(const Q& lambda, int N, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "schrodinger:scaling(" + qstr(lambda) + ")" : suite;
  if (is_zero(lambda)) {
    rep.add(s, "scaling", Status::Skip, "scaling maps need lambda != 0");
    return rep;
  }
  const SchrodingerData base = schrodinger_ucm(Q(1), N);
  auto U = build({Family::UCM, lambda, N});
  HopfMorphism sigma = ucm_scaling(base.actor, U, lambda);

  struct Target {
    SchrodingerData data;
    int x_power;
  };
  std::vector<Target> targets;
  targets.push_back({schrodinger_ucm(lambda, N), -2});
  targets.push_back({schrodinger_uheis(lambda), -2});
  targets.push_back({schrodinger_uheis_scaled_table(lambda), -3});

  for (const auto& target : targets) {
    const SchrodingerData& T = target.data;
    const int xp = target.x_power;
    // sigma_B : U(b+) -> U_lambda(b+), X -> lambda^xp X, Y -> lambda^-1 Y.
    auto sigma_b = [&](const NCPoly& p, int dir) {
      NCPoly out;
      for (const auto& [w, c] : p.terms) {
        long e = 0;
        for (Letter l : w) e += (l == kX) ? xp : -1;
        out.add(w, c * qpow(lambda, dir * e));
      }
      return out;
    };
    for (Letter g : T.actor->gens) {
      Letter g1 = is_kind(g, Kind::SmallZ) ? zgen(2) : g;
      Q c(1);
      auto it = sigma.images.find(g1);
      if (it != sigma.images.end()) c = it->second.coeff(Word{g1});
      for (Letter phi : {kX, kY}) {
        NCPoly pre = sigma_b(NCPoly::gen(phi), -1);
        NCPoly moved = sigma_b(schrodinger_act(base, NCPoly::gen(g1), pre), 1) * (Q(1) / c);
        NCPoly want = schrodinger_act(T, NCPoly::gen(g), NCPoly::gen(phi));
        const std::string id = T.name + ":" + letter_name(g) + "|" + letter_name(phi);
        if (moved == want)
          rep.pass(s, id);
        else
          rep.fail(s, id, "transported = " + render(moved) + ", table = " + render(want));
      }
    }
  }
  return rep;
}

}  // namespace cmhopf
