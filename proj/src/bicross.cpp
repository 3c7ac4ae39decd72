#include "cmhopf/bicross.hpp"

#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/hopf.hpp"
#include "cmhopf/rewrite.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cmhopf {

namespace {

bool lr(const BicrossData& D) { return D.orientation == Orientation::LR; }

TensorPoly operator*(TensorPoly t, const Q& c) {
  t *= c;
  return t;
}

// Leg order of the coaction tensor.
std::vector<const Algebra*> coaction_legs(const BicrossData& D) {
  if (lr(D)) return {D.H.get(), D.A.get()};
  return {D.A.get(), D.H.get()};
}

NCPoly act_letter(const BicrossData& D, Letter h, const Word& a);

// Action of an H-word on an A-word, memoized per data set.
NCPoly act_words(const BicrossData& D, const Word& h, const Word& a) {
  if (h.empty()) return D.A->normalize(a);
  auto key = std::make_pair(h, a);
  auto& memo = D.cache_->act;
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  NCPoly r;
  if (h.size() == 1) {
    r = act_letter(D, h[0], a);
  } else if (lr(D)) {
    // (g h') |> a = g |> (h' |> a)
    const Word rest(h.begin() + 1, h.end());
    for (const auto& [w, c] : act_words(D, rest, a).terms) r += act_letter(D, h[0], w) * c;
  } else {
    // a <| (g h') = (a <| g) <| h'
    const Word rest(h.begin() + 1, h.end());
    for (const auto& [w, c] : act_letter(D, h[0], a).terms) r += act_words(D, rest, w) * c;
  }
  memo.emplace(std::move(key), r);
  return r;
}

NCPoly act_poly_word(const BicrossData& D, const Word& h, const NCPoly& a) {
  NCPoly r;
  for (const auto& [w, c] : a.terms) r += act_words(D, h, w) * c;
  return r;
}

NCPoly act_letter(const BicrossData& D, Letter g, const Word& a) {
  if (a.empty()) return NCPoly::scalar(counit_word(*D.H, {g}));
  if (a.size() == 1) {
    auto img = D.action(g, a[0]);
    if (img) return D.A->normalize(*img);
    return NCPoly::gen(a[0], counit_word(*D.H, {g}));
  }
  // g |> (a1 a') = (g(1) |> a1)(g(2) |> a'), and the same for the right action.
  const Word head{a[0]};
  const Word rest(a.begin() + 1, a.end());
  NCPoly r;
  for (const auto& [k, c] : coproduct_word(*D.H, {g}).terms) {
    NCPoly x = act_words(D, k[0], head);
    if (x.is_zero()) continue;
    r += D.A->mul(x, act_words(D, k[1], rest)) * c;
  }
  return r;
}

TensorPoly coact_word(const BicrossData& D, const Word& h);

TensorPoly coact_letter(const BicrossData& D, Letter g) {
  if (auto img = D.coaction(g)) {
    TensorPoly t = *img;
    t.legs = coaction_legs(D);
    TensorPoly r(t.legs);
    for (const auto& [k, c] : t.terms)
      r += tensor(t.legs[0]->normalize(k[0]), t.legs[0],
                  t.legs[1]->normalize(k[1]), t.legs[1]) * c;
    return r;
  }
  if (lr(D)) return tensor(NCPoly::gen(g), D.H.get(), NCPoly::one(), D.A.get());
  return tensor(NCPoly::one(), D.A.get(), NCPoly::gen(g), D.H.get());
}

TensorPoly coact_word(const BicrossData& D, const Word& h) {
  auto& memo = D.cache_->coact;
  if (auto it = memo.find(h); it != memo.end()) return it->second;
  TensorPoly r(coaction_legs(D));
  if (h.empty()) {
    r.add({Word{}, Word{}}, Q(1));
  } else if (h.size() == 1) {
    r = coact_letter(D, h[0]);
  } else if (lr(D)) {
    // Delta_R(g h') = g(1)^(1) h'^(1) (x) g(1)^(2) (g(2) |> h'^(2))
    const Word rest(h.begin() + 1, h.end());
    const TensorPoly cr = coact_word(D, rest);
    for (const auto& [k, c] : coproduct_word(*D.H, {h[0]}).terms) {
      const TensorPoly cg = coact_word(D, k[0]);
      for (const auto& [kg, cgc] : cg.terms)
        for (const auto& [kr, crc] : cr.terms) {
          NCPoly hp = D.H->mul(NCPoly::of(kg[0]), NCPoly::of(kr[0]));
          NCPoly ap = D.A->mul(NCPoly::of(kg[1]), act_words(D, k[1], kr[1]));
          r += tensor(hp, D.H.get(), ap, D.A.get()) * (c * cgc * crc);
        }
    }
  } else {
    // Delta_L(g h') = (g^(1) <| h'(1)) h'(2)^(1) (x) g^(2) h'(2)^(2)
    const Word rest(h.begin() + 1, h.end());
    const TensorPoly cg = coact_word(D, {h[0]});
    for (const auto& [k, c] : coproduct_word(*D.H, rest).terms) {
      const TensorPoly cr = coact_word(D, k[1]);
      for (const auto& [kg, cgc] : cg.terms) {
        NCPoly moved = act_words(D, k[0], kg[0]);
        if (moved.is_zero()) continue;
        for (const auto& [kr, crc] : cr.terms) {
          NCPoly ap = D.A->mul(moved, NCPoly::of(kr[0]));
          NCPoly hp = D.H->mul(NCPoly::of(kg[1]), NCPoly::of(kr[1]));
          r += tensor(ap, D.A.get(), hp, D.H.get()) * (c * cgc * crc);
        }
      }
    }
  }
  memo.emplace(h, r);
  return r;
}

}  // namespace

BicrossData BicrossData::with_action(Letter h, Letter a, const NCPoly& image) const {
  BicrossData d = *this;
  d.cache_ = std::make_shared<Cache>();
  auto base = action;
  d.action = [base, h, a, image](Letter x, Letter y) -> std::optional<NCPoly> {
    if (x == h && y == a) return image;
    return base(x, y);
  };
  return d;
}

BicrossData BicrossData::with_coaction(Letter h, const TensorPoly& image) const {
  BicrossData d = *this;
  d.cache_ = std::make_shared<Cache>();
  auto base = coaction;
  d.coaction = [base, h, image](Letter x) -> std::optional<TensorPoly> {
    if (x == h) return image;
    return base(x);
  };
  return d;
}

NCPoly extend_action(const BicrossData& D, const NCPoly& h, const NCPoly& a) {
  NCPoly r;
  for (const auto& [w, c] : h.terms) r += act_poly_word(D, w, a) * c;
  return r;
}

TensorPoly extend_coaction(const BicrossData& D, const NCPoly& h) {
  TensorPoly r(coaction_legs(D));
  for (const auto& [w, c] : h.terms) r += coact_word(D, w) * c;
  return r;
}

// ---- compatibility ----

namespace {

std::string both_sides(const TensorPoly& l, const TensorPoly& r) {
  return "lhs = " + render(l) + " ; rhs = " + render(r);
}
std::string both_sides(const NCPoly& l, const NCPoly& r) {
  return "lhs = " + render(l) + " ; rhs = " + render(r);
}

TensorPoly tpoly(const NCPoly& a, const Algebra* la, const NCPoly& b, const Algebra* lb) {
  return tensor(a, la, b, lb);
}

// Normal H-elements to test: generators and normal products of two generators.
std::vector<Word> h_samples(const Algebra& H) {
  std::vector<Word> out;
  for (Letter g : H.gens) out.push_back({g});
  for (Letter g : H.gens)
    for (Letter k : H.gens)
      if (H.rule_at(g, k).kind == RuleOut::None) out.push_back({g, k});
  return out;
}

std::vector<Word> a_samples(const Algebra& A, int grade_bound) {
  auto b = A.basis(grade_bound);
  const size_t cap = 80;
  if (b.size() > cap) b.resize(cap);
  return b;
}

}  // namespace

Report check_compatibility(const BicrossData& D, int grade_bound, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "compat:" + D.name : suite;
  const Algebra& A = *D.A;
  const Algebra& H = *D.H;
  const Algebra* pA = D.A.get();
  const Algebra* pH = D.H.get();
  const auto hs = h_samples(H);
  const auto as = a_samples(A, grade_bound);
  std::map<std::string, int> counts;

  auto run = [&](const std::string& cond, const std::string& id, const std::function<std::string()>& body) {
    ++counts[cond];
    try {
      std::string w = body();
      if (!w.empty()) rep.fail(s, cond + ":" + id, w);
    } catch (const TruncationOverflow& e) {
      rep.add(s, cond + ":" + id, Status::Skip, e.what());
    }
  };

  // Module-algebra law is used to extend the action; it must respect the relations of A and H.
  for (Letter g : H.gens)
    for (auto [a, b] : A.rule_pairs())
      run("module-algebra", letter_name(g) + "|" + render_word({a, b}), [&]() -> std::string {
        NCPoly lhs = act_words(D, {g}, {a, b});
        NCPoly rhs = act_poly_word(D, {g}, A.normalize(Word{a, b}));
        return lhs == rhs ? std::string() : both_sides(lhs, rhs);
      });
  for (auto [g, k] : H.rule_pairs())
    for (Letter a : A.gens)
      run("module-algebra", render_word({g, k}) + "|" + letter_name(a), [&]() -> std::string {
        NCPoly lhs = act_words(D, {g, k}, {a});
        NCPoly rhs = extend_action(D, H.normalize(Word{g, k}), NCPoly::gen(a));
        return lhs == rhs ? std::string() : both_sides(lhs, rhs);
      });

  // Condition 2: the product rule for the coaction is compatible with the relations of H.
  for (auto [g, k] : H.rule_pairs())
    run("cond2", render_word({g, k}), [&]() -> std::string {
      TensorPoly lhs = coact_word(D, {g, k});
      TensorPoly rhs = extend_coaction(D, H.normalize(Word{g, k}));
      return lhs == rhs ? std::string() : both_sides(lhs, rhs);
    });

  for (const Word& h : hs) {
    const std::string hid = render_word(h);
    TensorPoly ch, dh;
    try {
      ch = coact_word(D, h);
      dh = coproduct_word(H, h);
    } catch (const TruncationOverflow& e) {
      rep.add(s, "element:" + hid, Status::Skip, e.what());
      continue;
    }

    run("comodule", hid, [&]() -> std::string {
      // coassociativity and counit of the coaction
      TensorPoly lhs, rhs;
      if (lr(D)) {
        lhs = coproduct_on_leg(ch, 1);
        rhs = map_leg(ch, 0, [&](const Word& w) { return coact_word(D, w); });
      } else {
        lhs = coproduct_on_leg(ch, 0);
        rhs = map_leg(ch, 1, [&](const Word& w) { return coact_word(D, w); });
      }
      if (lhs != rhs) return "coassociativity: " + both_sides(lhs, rhs);
      TensorPoly counit = counit_on_leg(ch, lr(D) ? 1 : 0);
      TensorPoly id = TensorPoly::from_poly(NCPoly::of(h), pH);
      if (counit != id) return "counit: " + both_sides(counit, id);
      return {};
    });

    run("comodule-coalgebra", hid, [&]() -> std::string {
      TensorPoly lhs, rhs(lr(D) ? std::vector<const Algebra*>{pH, pH, pA}
                                : std::vector<const Algebra*>{pA, pH, pH});
      if (lr(D)) {
        // h^(1)(1) (x) h^(1)(2) (x) h^(2) = h(1)^(1) (x) h(2)^(1) (x) h(1)^(2) h(2)^(2)
        lhs = coproduct_on_leg(ch, 0);
        for (const auto& [k, c] : dh.terms) {
          TensorPoly c1 = coact_word(D, k[0]), c2 = coact_word(D, k[1]);
          for (const auto& [k1, x1] : c1.terms)
            for (const auto& [k2, x2] : c2.terms) {
              TensorPoly t = tensor(tpoly(NCPoly::of(k1[0]), pH, NCPoly::of(k2[0]), pH),
                                    TensorPoly::from_poly(A.mul(NCPoly::of(k1[1]), NCPoly::of(k2[1])), pA));
              rhs += t * (c * x1 * x2);
            }
        }
      } else {
        // h^(1) (x) h^(2)(1) (x) h^(2)(2) = h(1)^(1) h(2)^(1) (x) h(1)^(2) (x) h(2)^(2)
        lhs = coproduct_on_leg(ch, 1);
        for (const auto& [k, c] : dh.terms) {
          TensorPoly c1 = coact_word(D, k[0]), c2 = coact_word(D, k[1]);
          for (const auto& [k1, x1] : c1.terms)
            for (const auto& [k2, x2] : c2.terms) {
              TensorPoly t = tensor(TensorPoly::from_poly(A.mul(NCPoly::of(k1[0]), NCPoly::of(k2[0])), pA),
                                    tpoly(NCPoly::of(k1[1]), pH, NCPoly::of(k2[1]), pH));
              rhs += t * (c * x1 * x2);
            }
        }
      }
      if (lhs != rhs) return both_sides(lhs, rhs);
      TensorPoly ec = counit_on_leg(ch, lr(D) ? 0 : 1);
      TensorPoly unit = TensorPoly::from_poly(NCPoly::scalar(counit_word(H, h)), pA);
      if (ec != unit) return "counit: " + both_sides(ec, unit);
      return {};
    });

    for (const Word& a : as) {
      const std::string id = hid + "|" + render_word(a);
      run("cond1", id, [&]() -> std::string {
        NCPoly act = act_words(D, h, a);
        Q e1 = counit(A, act), e2 = counit_word(H, h) * counit_word(A, a);
        if (e1 != e2) return "counit: lhs = " + qstr(e1) + " ; rhs = " + qstr(e2);
        TensorPoly lhs = coproduct(A, act);
        TensorPoly rhs({pA, pA});
        const TensorPoly da = coproduct_word(A, a);
        for (const auto& [k, c] : dh.terms) {
          if (lr(D)) {
            // h(1)^(1) |> a(1) (x) h(1)^(2) (h(2) |> a(2))
            const TensorPoly cc = coact_word(D, k[0]);
            for (const auto& [ka, ca] : da.terms)
              for (const auto& [kc, cq] : cc.terms) {
                NCPoly left = act_words(D, kc[0], ka[0]);
                if (left.is_zero()) continue;
                NCPoly right = A.mul(NCPoly::of(kc[1]), act_words(D, k[1], ka[1]));
                rhs += tpoly(left, pA, right, pA) * (c * ca * cq);
              }
          } else {
            // (a(1) <| h(1)) h(2)^(1) (x) a(2) <| h(2)^(2)
            const TensorPoly cc = coact_word(D, k[1]);
            for (const auto& [ka, ca] : da.terms) {
              NCPoly left0 = act_words(D, k[0], ka[0]);
              if (left0.is_zero()) continue;
              for (const auto& [kc, cq] : cc.terms) {
                NCPoly left = A.mul(left0, NCPoly::of(kc[0]));
                NCPoly right = act_words(D, kc[1], ka[1]);
                rhs += tpoly(left, pA, right, pA) * (c * ca * cq);
              }
            }
          }
        }
        return lhs == rhs ? std::string() : both_sides(lhs, rhs);
      });

      run("cond3", id, [&]() -> std::string {
        TensorPoly lhs(coaction_legs(D)), rhs(coaction_legs(D));
        for (const auto& [k, c] : dh.terms) {
          if (lr(D)) {
            // h(2)^(1) (x) (h(1) |> a) h(2)^(2) = h(1)^(1) (x) h(1)^(2) (h(2) |> a)
            NCPoly act1 = act_words(D, k[0], a);
            for (const auto& [kc, cq] : coact_word(D, k[1]).terms)
              lhs += tpoly(NCPoly::of(kc[0]), pH, A.mul(act1, NCPoly::of(kc[1])), pA) * (c * cq);
            NCPoly act2 = act_words(D, k[1], a);
            for (const auto& [kc, cq] : coact_word(D, k[0]).terms)
              rhs += tpoly(NCPoly::of(kc[0]), pH, A.mul(NCPoly::of(kc[1]), act2), pA) * (c * cq);
          } else {
            // h(1)^(1) (a <| h(2)) (x) h(1)^(2) = (a <| h(1)) h(2)^(1) (x) h(2)^(2)
            NCPoly act2 = act_words(D, k[1], a);
            for (const auto& [kc, cq] : coact_word(D, k[0]).terms)
              lhs += tpoly(A.mul(NCPoly::of(kc[0]), act2), pA, NCPoly::of(kc[1]), pH) * (c * cq);
            NCPoly act1 = act_words(D, k[0], a);
            for (const auto& [kc, cq] : coact_word(D, k[1]).terms)
              rhs += tpoly(A.mul(act1, NCPoly::of(kc[0])), pA, NCPoly::of(kc[1]), pH) * (c * cq);
          }
        }
        return lhs == rhs ? std::string() : both_sides(lhs, rhs);
      });
    }
  }

  for (const auto& [cond, n] : counts) rep.pass(s, "summary:" + cond, std::to_string(n) + " cases");
  return rep;
}

// ---- construction ----

namespace {

TensorPoly retarget(TensorPoly t, const Algebra* self) {
  for (auto& l : t.legs) l = self;
  if (t.legs.empty()) t.legs = {self, self};
  return t;
}

NCPoly concat_words(const Word& a, const Word& b, const Q& c) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return NCPoly::of(w, c);
}

}  // namespace

AlgebraPtr build_bicrossproduct(const BicrossData& D, int grade_bound) {
  Report pre = check_compatibility(D, grade_bound);
  if (const Check* f = pre.first_failure()) throw IncompatibleData(f->id + ": " + f->witness);

  auto B = std::make_shared<Algebra>();
  B->name = D.name.empty() ? "bicross" : D.name;
  B->lambda = D.H->lambda;
  B->N = std::max(D.A->N, D.H->N);
  if (lr(D)) {
    B->gens = D.A->gens;
    B->gens.insert(B->gens.end(), D.H->gens.begin(), D.H->gens.end());
  } else {
    B->gens = D.H->gens;
    B->gens.insert(B->gens.end(), D.A->gens.begin(), D.A->gens.end());
  }
  auto data = std::make_shared<BicrossData>(D);
  const Algebra* Ap = D.A.get();
  const Algebra* Hp = D.H.get();
  B->owns_extra = [Ap, Hp](Letter l) {
    return (Ap->owns_extra && Ap->owns_extra(l)) || (Hp->owns_extra && Hp->owns_extra(l));
  };
  B->rule = [data, Ap, Hp](Letter a, Letter b) -> RuleOut {
    const bool aA = Ap->contains(a), bA = Ap->contains(b);
    const bool aH = Hp->contains(a), bH = Hp->contains(b);
    if (aA && bA) return Ap->rule_at(a, b);
    if (aH && bH) return Hp->rule_at(a, b);
    try {
      NCPoly rhs;
      if (lr(*data) && aH && bA) {
        // h a = (h(1) |> a) h(2)
        for (const auto& [k, c] : coproduct_word(*Hp, {a}).terms)
          for (const auto& [w, cw] : act_words(*data, k[0], {b}).terms) rhs += concat_words(w, k[1], c * cw);
        return RuleOut::rewrite(rhs);
      }
      if (!lr(*data) && aA && bH) {
        // a h = h(1) (a <| h(2))
        for (const auto& [k, c] : coproduct_word(*Hp, {b}).terms)
          for (const auto& [w, cw] : act_words(*data, k[1], {a}).terms) rhs += concat_words(k[0], w, c * cw);
        return RuleOut::rewrite(rhs);
      }
    } catch (const TruncationOverflow& e) {
      return RuleOut::over(e.index);
    }
    return RuleOut::none();
  };
  const Algebra* self = B.get();
  B->delta_gen = [data, self, Ap, Hp](Letter l) -> TensorPoly {
    if (Ap->contains(l) && !Hp->contains(l)) return retarget(Ap->delta_gen(l), self);
    TensorPoly r({self, self});
    for (const auto& [k, c] : coproduct_word(*Hp, {l}).terms) {
      if (lr(*data)) {
        // h(1)^(1) (x) h(1)^(2) h(2)
        for (const auto& [kc, cc] : coact_word(*data, k[0]).terms)
          r.add({kc[0], concat_words(kc[1], k[1], Q(1)).terms.begin()->first}, c * cc);
      } else {
        // h(1) h(2)^(1) (x) h(2)^(2)
        for (const auto& [kc, cc] : coact_word(*data, k[1]).terms)
          r.add({concat_words(k[0], kc[0], Q(1)).terms.begin()->first, kc[1]}, c * cc);
      }
    }
    return r;
  };
  B->eps_gen = [Ap, Hp](Letter l) {
    if (Ap->contains(l) && !Hp->contains(l)) return counit_word(*Ap, {l});
    return counit_word(*Hp, {l});
  };
  B->antipode_gen = [data, self, Ap, Hp](Letter l) -> NCPoly {
    if (Ap->contains(l) && !Hp->contains(l)) return antipode_word(*Ap, {l});
    NCPoly r;
    // LR: S(h^(1)) S(h^(2)) with h^(1) in H;  RL: S(h^(1)) S(h^(2)) with h^(1) in A
    for (const auto& [k, c] : coact_word(*data, {l}).terms) {
      const Algebra& first = lr(*data) ? *Hp : *Ap;
      const Algebra& second = lr(*data) ? *Ap : *Hp;
      r += self->mul(antipode_word(first, k[0]), antipode_word(second, k[1])) * c;
    }
    return r;
  };
  return B;
}

Report compare_presentations(const Algebra& built, const Algebra& reference, bool strict,
                             const std::string& suite) {
  Report rep;
  std::set<Letter> g1(built.gens.begin(), built.gens.end()), g2(reference.gens.begin(), reference.gens.end());
  if (g1 != g2) {
    rep.fail(suite, "generators", "generator sets differ");
    return rep;
  }
  rep.pass(suite, "generators", std::to_string(g1.size()) + " generators");

  // Shallow, non-owning handles for the morphism checker.
  AlgebraPtr b(const_cast<Algebra*>(&built), [](Algebra*) {});
  AlgebraPtr r(const_cast<Algebra*>(&reference), [](Algebra*) {});
  HopfMorphism fwd{b, r, {}}, back{r, b, {}};
  rep.merge(check_morphism(fwd, &back, suite + "/identity"));

  if (!strict) return rep;
  int pairs = 0;
  for (Letter x : built.gens)
    for (Letter y : built.gens) {
      ++pairs;
      try {
        NCPoly p = built.normalize(Word{x, y}), q = reference.normalize(Word{x, y});
        if (p != q) rep.fail(suite, "normal-form:" + render_word({x, y}), both_sides(p, q));
      } catch (const TruncationOverflow& e) {
        rep.add(suite, "normal-form:" + render_word({x, y}), Status::Skip, e.what());
      }
    }
  rep.pass(suite, "summary:normal-forms", std::to_string(pairs) + " pairs");
  for (Letter x : built.gens) {
    try {
      auto d1 = coproduct_word(built, {x}), d2 = coproduct_word(reference, {x});
      if (d1.terms != d2.terms) rep.fail(suite, "delta-table:" + letter_name(x), both_sides(d1, d2));
      auto s1 = antipode_word(built, {x}), s2 = antipode_word(reference, {x});
      if (s1 != s2) rep.fail(suite, "antipode-table:" + letter_name(x), both_sides(s1, s2));
      if (counit_word(built, {x}) != counit_word(reference, {x}))
        rep.fail(suite, "counit-table:" + letter_name(x), "counits differ");
    } catch (const TruncationOverflow& e) {
      rep.add(suite, "tables:" + letter_name(x), Status::Skip, e.what());
    }
  }
  rep.pass(suite, "summary:tables", std::to_string(built.gens.size()) + " generators");
  return rep;
}

// ---- family data ----

namespace {

TensorPoly t2(const NCPoly& a, const Algebra* la, const NCPoly& b, const Algebra* lb) {
  return tensor(a, la, b, lb);
}

NCPoly pw(Letter l, int k, const Q& c = Q(1)) { return NCPoly::of(Word(static_cast<size_t>(k), l), c); }
NCPoly cat(const NCPoly& a, const NCPoly& b) { return concat(a, b); }
bool isT(Letter l) { return kind_of(l) == Kind::T; }
int idx(Letter l) { return static_cast<int>(index_of(l)); }

NCPoly alpha_power_word(const Q& q) {
  if (is_zero(q)) return NCPoly::one();
  return NCPoly::gen(alpha_q(q));
}

// Right action of z_n on alpha^{+-1}, beta (U_CM at scale lambda).
std::optional<NCPoly> fbplus_right_action(Letter z, Letter a, const Q& lam) {
  const int n = idx(z);
  const Q scale = qpow(lam, n - 1);
  if (a == kAlpha) return cat(NCPoly::gen(kAlpha), pw(kBeta, n - 1)) * (Q(n) * scale);
  if (a == kAlphaInv) return cat(NCPoly::gen(kAlphaInv), pw(kBeta, n - 1)) * (Q(-n) * scale);
  if (a == kBeta) return pw(kBeta, n, scale);
  return std::nullopt;
}

}  // namespace

BicrossData hcm_data(const Q& lambda, int N) {
  BicrossData D;
  D.name = "HCM-data";
  D.orientation = Orientation::LR;
  D.A = coopposite(build({Family::FD0, Q(1), N}));
  D.H = build({Family::Ubplus, lambda, 0});
  const Q lam = lambda;
  D.action = [lam, N](Letter h, Letter a) -> std::optional<NCPoly> {
    if (!isT(a)) return std::nullopt;
    const int n = idx(a);
    if (h == kY) return NCPoly::gen(a, lam * (n - 1));
    if (h == kX) {
      if (is_zero(lam)) return NCPoly();
      if (n + 1 > N) throw TruncationOverflow(n + 1);
      return NCPoly::gen(tgen(n + 1), lam * (n + 1)) + NCPoly::of({tgen(2), a}, -2 * lam);
    }
    return std::nullopt;
  };
  const Algebra* A = D.A.get();
  const Algebra* H = D.H.get();
  D.coaction = [A, H](Letter h) -> std::optional<TensorPoly> {
    if (h != kX) return std::nullopt;
    return t2(NCPoly::gen(kX), H, NCPoly::one(), A) + t2(NCPoly::gen(kY), H, NCPoly::gen(tgen(2), Q(2)), A);
  };
  return D;
}

BicrossData ucm_data(const Q& lambda, int N) {
  BicrossData D;
  D.name = "UCM-data";
  D.orientation = Orientation::RL;
  D.A = build({Family::FBplus, Q(1), 0});
  D.H = build_ud0_opposite(N);
  const Q lam = lambda;
  D.action = [lam](Letter h, Letter a) { return fbplus_right_action(h, a, lam); };
  const Algebra* A = D.A.get();
  const Algebra* H = D.H.get();
  D.coaction = [A, H, lam](Letter h) -> std::optional<TensorPoly> {
    const int n = idx(h);
    TensorPoly r({A, H});
    for (int j = 2; j <= n; ++j)
      r += t2(cat(pw(kAlpha, j - 1), pw(kBeta, n - j)), A, NCPoly::gen(zgen(j)), H) *
           (binom(n, j) * qpow(lam, n - j));
    return r;
  };
  return D;
}

BicrossData kheis_data(const Q& lambda) {
  BicrossData D;
  D.name = "KHeis-data";
  D.orientation = Orientation::LR;
  D.A = build({Family::Kt, Q(1), 0});
  D.H = build({Family::Ubplus, lambda, 0});
  const Q lam = lambda;
  D.action = [lam](Letter h, Letter a) -> std::optional<NCPoly> {
    if (a != kSmallT) return std::nullopt;
    if (h == kX) return pw(kSmallT, 2, lam / 2);
    if (h == kY) return NCPoly::gen(kSmallT, lam);
    return std::nullopt;
  };
  const Algebra* A = D.A.get();
  const Algebra* H = D.H.get();
  D.coaction = [A, H](Letter h) -> std::optional<TensorPoly> {
    if (h != kX) return std::nullopt;
    return t2(NCPoly::gen(kX), H, NCPoly::one(), A) + t2(NCPoly::gen(kY), H, NCPoly::gen(kSmallT), A);
  };
  return D;
}

BicrossData uheis_data(const Q& lambda) {
  BicrossData D;
  D.name = "UHeis-data";
  D.orientation = Orientation::RL;
  D.A = build({Family::FBplus, Q(1), 0});
  D.H = build({Family::Uz, Q(1), 0});
  const Q lam = lambda;
  D.action = [lam](Letter, Letter a) { return fbplus_right_action(zgen(2), a, lam); };
  const Algebra* A = D.A.get();
  const Algebra* H = D.H.get();
  D.coaction = [A, H](Letter) -> std::optional<TensorPoly> {
    return t2(NCPoly::gen(kAlpha), A, NCPoly::gen(kSmallZ), H);
  };
  return D;
}

BicrossData fbplus_ext_data(const Q& lambda, int N) {
  BicrossData D;
  D.name = "FBplusExt-data";
  D.orientation = Orientation::RL;
  D.A = build({Family::FBplusLam, lambda, 0});
  D.H = build_ud0_opposite(N);
  const Q lam = lambda;
  D.action = [lam](Letter h, Letter a) -> std::optional<NCPoly> {
    const int n = idx(h);
    const Q scale = qpow(lam, n - 2);
    if (kind_of(a) == Kind::AlphaQ)
      return cat(NCPoly::gen(a), pw(kBeta, n - 1)) * (Q(n) * alpha_exponent(a) * scale);
    if (a == kBigA) return pw(kBeta, n - 1, Q(n) * scale);
    if (a == kBeta) return pw(kBeta, n, scale * lam);
    return std::nullopt;
  };
  const Algebra* A = D.A.get();
  const Algebra* H = D.H.get();
  D.coaction = [A, H, lam](Letter h) -> std::optional<TensorPoly> {
    const int n = idx(h);
    TensorPoly r({A, H});
    for (int j = 2; j <= n; ++j)
      r += t2(cat(alpha_power_word(lam * (j - 1)), pw(kBeta, n - j)), A, NCPoly::gen(zgen(j)), H) *
           (binom(n, j) * qpow(lam, n - j));
    return r;
  };
  return D;
}

BicrossData hcm_left_data(const Q& lambda, int N) {
  BicrossData D;
  D.name = "HCMleft-data";
  D.orientation = Orientation::RL;
  D.A = build({Family::FD0, Q(1), N});
  D.H = build({Family::Ubplus, lambda, 0});
  const Q lam = lambda;
  D.action = [lam, N](Letter h, Letter a) -> std::optional<NCPoly> {
    if (!isT(a)) return std::nullopt;
    const int n = idx(a);
    if (h == kY) return NCPoly::gen(a, lam * (1 - n));
    if (h == kX) {
      if (is_zero(lam)) return NCPoly();
      if (n + 1 > N) throw TruncationOverflow(n + 1);
      return NCPoly::gen(tgen(n + 1), -lam * (n + 1)) + NCPoly::of({tgen(2), a}, 2 * lam);
    }
    return std::nullopt;
  };
  const Algebra* A = D.A.get();
  const Algebra* H = D.H.get();
  D.coaction = [A, H](Letter h) -> std::optional<TensorPoly> {
    if (h != kX) return std::nullopt;
    return t2(NCPoly::one(), A, NCPoly::gen(kX), H) + t2(NCPoly::gen(tgen(2), Q(2)), A, NCPoly::gen(kY), H);
  };
  return D;
}

// ---- text form ----

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

AlgebraPtr algebra_from_spec(const std::string& spec) {
  std::istringstream is(spec);
  std::string tag, mod;
  is >> tag;
  AlgebraTag t = parse_tag(tag);
  AlgebraPtr A = (t.family == Family::Ud0 && spec.find(" op") != std::string::npos)
                     ? build_ud0_opposite(t.N)
                     : build(t);
  while (is >> mod) {
    if (mod == "cop") A = coopposite(A);
    else if (mod != "op") throw std::invalid_argument("unknown modifier " + mod);
  }
  return A;
}

}  // namespace

BicrossData parse_bicross_data(const std::string& text) {
  BicrossData D;
  std::map<std::pair<Letter, Letter>, std::string> acts;
  std::map<Letter, std::string> coacts;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
    };
    if (line.rfind("act ", 0) == 0 || line.rfind("coact ", 0) == 0) {
      const bool co = line[0] == 'c';
      const size_t eq = line.find('=');
      if (eq == std::string::npos) fail("missing '='");
      std::istringstream head(line.substr(co ? 6 : 4, eq - (co ? 6 : 4)));
      std::string h, a;
      head >> h;
      if (!co) head >> a;
      if (h.empty() || (!co && a.empty())) fail("missing generator");
      const std::string rhs = trim(line.substr(eq + 1));
      if (co) coacts[parse_letter(h)] = rhs;
      else acts[{parse_letter(h), parse_letter(a)}] = rhs;
      continue;
    }
    const size_t colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value'");
    const std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
    if (key == "name") D.name = val;
    else if (key == "orientation") {
      if (val == "LR") D.orientation = Orientation::LR;
      else if (val == "RL") D.orientation = Orientation::RL;
      else fail("orientation must be LR or RL");
    } else if (key == "A") D.A = algebra_from_spec(val);
    else if (key == "H") D.H = algebra_from_spec(val);
    else fail("unknown key " + key);
  }
  if (!D.A || !D.H) throw std::invalid_argument("both A and H are required");
  std::map<std::pair<Letter, Letter>, NCPoly> act_tab;
  for (const auto& [k, v] : acts) act_tab[k] = parse_poly(v, D.A.get());
  std::map<Letter, TensorPoly> coact_tab;
  const std::vector<const Algebra*> legs = lr(D) ? std::vector<const Algebra*>{D.H.get(), D.A.get()}
                                                 : std::vector<const Algebra*>{D.A.get(), D.H.get()};
  for (const auto& [k, v] : coacts) coact_tab[k] = parse_tensor(v, legs);
  D.action = [act_tab](Letter h, Letter a) -> std::optional<NCPoly> {
    auto it = act_tab.find({h, a});
    if (it == act_tab.end()) return std::nullopt;
    return it->second;
  };
  D.coaction = [coact_tab](Letter h) -> std::optional<TensorPoly> {
    auto it = coact_tab.find(h);
    if (it == coact_tab.end()) return std::nullopt;
    return it->second;
  };
  return D;
}

// ---- finite groups ----

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < size(); ++b)
    if (table[a][b] == identity) return b;
  throw std::logic_error("element without inverse");
}

FiniteGroup symmetric_group(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup G;
  const int m = static_cast<int>(perms.size());
  G.table.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      G.table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  G.identity = 0;
  return G;
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup G;
  G.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table[a][b] = (a + b) % n;
  return G;
}

std::vector<int> generated_subgroup(const FiniteGroup& X, const std::vector<int>& gens) {
  std::set<int> s{X.identity};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : std::vector<int>(s.begin(), s.end()))
      for (int g : gens)
        if (s.insert(X.mul(a, g)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

namespace {

// k on the group element e as 1, others as letters.
NCPoly group_elem(const FiniteGroup& X, int x) {
  return x == X.identity ? NCPoly::one() : NCPoly::gen(make_letter(Kind::Group, x));
}

// delta_e = 1 - sum of the other delta functions.
NCPoly fun_elem(const FiniteGroup& X, const std::vector<int>& elems, int x) {
  if (x != X.identity) return NCPoly::gen(make_letter(Kind::Fun, x));
  NCPoly r = NCPoly::one();
  for (int y : elems)
    if (y != X.identity) r -= NCPoly::gen(make_letter(Kind::Fun, y));
  return r;
}

AlgebraPtr group_algebra(const FiniteGroup& X, const std::vector<int>& elems, const std::string& name) {
  auto A = std::make_shared<Algebra>();
  A->name = name;
  for (int x : elems)
    if (x != X.identity) A->gens.push_back(make_letter(Kind::Group, x));
  const FiniteGroup* G = &X;
  A->rule = [G](Letter a, Letter b) {
    if (kind_of(a) != Kind::Group || kind_of(b) != Kind::Group) return RuleOut::none();
    return RuleOut::rewrite(group_elem(*G, G->mul(idx(a), idx(b))));
  };
  const Algebra* self = A.get();
  A->delta_gen = [self](Letter l) { return t2(NCPoly::gen(l), self, NCPoly::gen(l), self); };
  A->eps_gen = [](Letter) { return Q(1); };
  A->antipode_gen = [G](Letter l) { return group_elem(*G, G->inv(idx(l))); };
  return A;
}

AlgebraPtr function_algebra(const FiniteGroup& X, const std::vector<int>& elems, const std::string& name) {
  auto A = std::make_shared<Algebra>();
  A->name = name;
  for (int x : elems)
    if (x != X.identity) A->gens.push_back(make_letter(Kind::Fun, x));
  const FiniteGroup* G = &X;
  A->rule = [](Letter a, Letter b) {
    if (kind_of(a) != Kind::Fun || kind_of(b) != Kind::Fun) return RuleOut::none();
    return RuleOut::rewrite(a == b ? NCPoly::gen(a) : NCPoly());
  };
  const Algebra* self = A.get();
  A->delta_gen = [self, G, elems](Letter l) {
    TensorPoly r({self, self});
    const int m = idx(l);
    for (int x : elems)
      r += t2(fun_elem(*G, elems, x), self, fun_elem(*G, elems, G->mul(G->inv(x), m)), self);
    return r;
  };
  A->eps_gen = [](Letter) { return Q(0); };
  A->antipode_gen = [G, elems](Letter l) { return fun_elem(*G, elems, G->inv(idx(l))); };
  return A;
}

}  // namespace

FiniteBicross finite_group_bicross(const FiniteGroup& X, const std::vector<int>& G, const std::vector<int>& M) {
  auto is_subgroup = [&](const std::vector<int>& S) {
    std::set<int> s(S.begin(), S.end());
    if (!s.count(X.identity) || s.size() != S.size()) return false;
    for (int a : S)
      for (int b : S)
        if (!s.count(X.mul(a, X.inv(b)))) return false;
    return true;
  };
  if (!is_subgroup(G)) throw NotAFactorisation("first factor is not a subgroup");
  if (!is_subgroup(M)) throw NotAFactorisation("second factor is not a subgroup");
  // x = g m uniquely
  std::map<int, std::pair<int, int>> split;
  for (int g : G)
    for (int m : M)
      if (!split.emplace(X.mul(g, m), std::make_pair(g, m)).second)
        throw NotAFactorisation("product map is not injective");
  if (static_cast<int>(split.size()) != X.size()) throw NotAFactorisation("product map is not surjective");

  auto keep = std::make_shared<FiniteGroup>(X);
  const FiniteGroup& Xr = *keep;
  // m g = (m |> g)(m <| g)
  auto tri = [keep, split](int m, int g) { return split.at(keep->mul(m, g)).first; };
  auto tle = [keep, split](int m, int g) { return split.at(keep->mul(m, g)).second; };

  FiniteBicross out;
  {
    BicrossData& D = out.lr_data;
    D.name = "kM-kG";
    D.orientation = Orientation::LR;
    D.A = function_algebra(Xr, M, "k[M]");
    D.H = group_algebra(Xr, G, "kG");
    D.action = [keep, M, tle](Letter h, Letter a) -> std::optional<NCPoly> {
      // g |> delta_m = delta_{m <| g^-1}
      return fun_elem(*keep, M, tle(idx(a), keep->inv(idx(h))));
    };
    const Algebra* A = D.A.get();
    const Algebra* H = D.H.get();
    D.coaction = [keep, M, tri, A, H](Letter h) -> std::optional<TensorPoly> {
      TensorPoly r({H, A});
      for (int m : M) r += t2(group_elem(*keep, tri(m, idx(h))), H, fun_elem(*keep, M, m), A);
      return r;
    };
    out.lr = build_bicrossproduct(D, 2);
  }
  {
    BicrossData& D = out.rl_data;
    D.name = "kM-kG-dual";
    D.orientation = Orientation::RL;
    D.A = function_algebra(Xr, G, "k[G]");
    D.H = group_algebra(Xr, M, "kM");
    D.action = [keep, G, tri](Letter h, Letter a) -> std::optional<NCPoly> {
      // delta_g <| m = delta_{m^-1 |> g}
      return fun_elem(*keep, G, tri(keep->inv(idx(h)), idx(a)));
    };
    const Algebra* A = D.A.get();
    const Algebra* H = D.H.get();
    D.coaction = [keep, G, tle, A, H](Letter h) -> std::optional<TensorPoly> {
      TensorPoly r({A, H});
      for (int g : G) r += t2(fun_elem(*keep, G, g), A, group_elem(*keep, tle(idx(h), g)), H);
      return r;
    };
    out.rl = build_bicrossproduct(D, 2);
  }

  // Expand a normal word of either side into (function point, group element) coordinates.
  auto coords = [keep](const Word& w, const std::vector<int>& fun_support) {
    std::map<std::pair<int, int>, Q> c;
    int f = -1, g = keep->identity;
    for (Letter l : w) {
      if (kind_of(l) == Kind::Fun) f = idx(l);
      else g = keep->mul(g, idx(l));
    }
    if (f >= 0) {
      c[{f, g}] += 1;
    } else {
      for (int x : fun_support) c[{x, g}] += 1;
    }
    return c;
  };
  auto P = std::make_shared<Pairing>();
  P->name = "finite";
  P->left = out.lr;
  P->right = out.rl;
  P->gen = [](Letter, Letter) { return Q(0); };
  P->direct = [coords, G, M](const Word& u, const Word& w) {
    // <delta_m g, m' delta_g'> = [m = m'][g = g']
    auto cu = coords(u, M);
    auto cw = coords(w, G);
    Q r(0);
    for (const auto& [k1, c1] : cu)
      for (const auto& [k2, c2] : cw)
        if (k1.first == k2.second && k1.second == k2.first) r += c1 * c2;
    return r;
  };
  out.pairing = P;
  return out;
}

}  // namespace cmhopf
