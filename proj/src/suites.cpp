#include "cmhopf/suites.hpp"

#include "cmhopf/bicross.hpp"
#include "cmhopf/expr.hpp"
#include "cmhopf/fodc.hpp"
#include "cmhopf/hopf.hpp"
#include "cmhopf/lie.hpp"
#include "cmhopf/pairing.hpp"
#include "cmhopf/schrodinger.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cmhopf {

namespace {

std::vector<Q> lambdas_or(const SuiteConfig& cfg, std::vector<Q> fallback) {
  return cfg.lambdas.empty() ? fallback : cfg.lambdas;
}

std::string lam_label(const Q& l) { return "lambda=" + qstr(l); }

// Copies `r` into `into`, filling in the tag where a check has none.
void absorb(Report& into, Report r, const char* tag) {
  for (Check& c : r.checks)
    if (c.tag.empty()) c.tag = tag;
  into.merge(r);
}

// Runs `body`; a truncation overflow becomes a skip and any other exception a failure.
void guarded(Report& rep, const std::string& suite, const std::string& id, const char* tag,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const TruncationOverflow& e) {
    rep.add(suite, id, Status::Skip, e.what(), tag);
  } catch (const std::exception& e) {
    rep.fail(suite, id, e.what(), tag);
  }
}

void expect(Report& rep, const std::string& suite, const std::string& id, bool ok, const std::string& witness,
            const char* tag) {
  rep.add(suite, id, ok ? Status::Pass : Status::Fail, witness, tag);
}

std::string summary(const Report& r) {
  std::ostringstream os;
  os << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, " << r.count(Status::Skip) << " skip";
  return os.str();
}

// ---- hopf ----

void algebra_notes(Report& rep, const std::string& suite, const Algebra& A) {
  bool commutative = true, cocommutative = true, complete = true;
  std::string nc, ncc;
  for (Letter a : A.gens) {
    try {
      TensorPoly d = coproduct(A, NCPoly::gen(a));
      if (permute_legs(d, {1, 0}) != d && cocommutative) {
        cocommutative = false;
        ncc = "Delta(" + letter_name(a) + ") = " + render(d);
      }
    } catch (const TruncationOverflow&) {
      complete = false;
    }
    for (Letter b : A.gens) {
      if (!(a < b)) continue;
      try {
        NCPoly c = A.commutator(NCPoly::gen(a), NCPoly::gen(b));
        if (!c.is_zero() && commutative) {
          commutative = false;
          nc = "[" + letter_name(a) + "," + letter_name(b) + "] = " + render(c);
        }
      } catch (const TruncationOverflow&) {
        complete = false;
      }
    }
  }
  const std::string scope = complete ? "" : " (on generators within the truncation)";
  rep.pass(suite, commutative ? "note: commutative" : "note: noncommutative",
           commutative ? "all generator commutators vanish" + scope : nc, tags::hopf);
  rep.pass(suite, cocommutative ? "note: cocommutative" : "note: not cocommutative",
           cocommutative ? "every generator coproduct is flip-invariant" + scope : ncc, tags::hopf);
}

const std::vector<Family>& hopf_families() {
  static const std::vector<Family> f = {Family::FD0,   Family::Ud0,  Family::Ubplus, Family::FBplus,
                                        Family::HCM,   Family::UCM,  Family::KHeis,  Family::UHeis,
                                        Family::FBplusExt, Family::HCMleft};
  return f;
}

// ---- fodc ----

std::string signature(const ClassifyResult& r) {
  std::set<std::string> parts;
  for (const FODC& F : r.solutions) parts.insert("solution:\n" + render_table(F));
  for (const std::string& s : r.families) parts.insert("family:\n" + s);
  for (const std::string& s : r.irrational) parts.insert("irrational:\n" + s);
  for (const std::string& s : r.non_surjective) parts.insert("non-surjective:\n" + s);
  std::string out = r.linear_inconsistent ? "linear-inconsistent\n" : "";
  for (const std::string& p : parts) out += p + "\n";
  return out;
}

bool contains_table(const ClassifyResult& r, const FODC& F) {
  for (const FODC& s : r.solutions)
    if (same_table(s, F)) return true;
  return family_containing(r, F) >= 0;
}

}  // namespace

Report suite_hopf(const SuiteConfig& cfg) {
  Report rep;
  std::vector<AlgebraTag> todo;
  if (cfg.algebra) {
    todo.push_back(*cfg.algebra);
  } else {
    for (Family f : hopf_families()) {
      if (!family_has_lambda(f)) {
        todo.push_back({f, Q(1), cfg.N});
        continue;
      }
      for (const Q& l : lambdas_or(cfg, {Q(0), Q(1), Q(-1), Q(1, 2)})) todo.push_back({f, l, cfg.N});
    }
  }
  for (const AlgebraTag& t : todo) {
    const std::string suite = "hopf:" + tag_name(t);
    AlgebraPtr A;
    try {
      A = build(t);
    } catch (const std::exception& e) {
      rep.add(suite, "build", Status::Skip, e.what(), tags::hopf);
      continue;
    }
    absorb(rep, check_hopf_axioms(*A, {cfg.grade_bound, true}, suite), tags::hopf);
    if (cfg.algebra) algebra_notes(rep, suite, *A);
  }
  return rep;
}

Report suite_bicross_presentations(const SuiteConfig& cfg) {
  Report rep;
  for (const Q& l : lambdas_or(cfg, {Q(1), Q(-1), Q(1, 2)})) {
    struct Item {
      std::function<BicrossData()> data;
      Family ref;
      bool strict;
    };
    const int N = cfg.N;
    std::vector<Item> items = {
        {[&] { return hcm_data(l, N); }, Family::HCM, true},
        {[&] { return ucm_data(l, N); }, Family::UCM, true},
        {[&] { return kheis_data(l); }, Family::KHeis, true},
        {[&] { return uheis_data(l); }, Family::UHeis, true},
        {[&] { return fbplus_ext_data(l, N); }, Family::FBplusExt, true},
        {[&] { return hcm_left_data(l, N); }, Family::HCMleft, false},
    };
    for (const Item& it : items) {
      const AlgebraTag ref{it.ref, l, N};
      const std::string suite = "bicross:" + tag_name(ref);
      guarded(rep, suite, "build", tags::bicross, [&] {
        BicrossData D = it.data();
        AlgebraPtr built = build_bicrossproduct(D, 2);
        AlgebraPtr reference = build(ref);
        absorb(rep, compare_presentations(*built, *reference, it.strict, suite), tags::bicross);
      });
    }
  }
  return rep;
}

Report suite_compatibility(const SuiteConfig& cfg) {
  Report rep;
  const int N = cfg.N;
  const int bound = std::min(cfg.grade_bound, 3);
  for (const Q& l : lambdas_or(cfg, {Q(1), Q(-1), Q(1, 2)})) {
    std::vector<std::function<BicrossData()>> data = {
        [&] { return hcm_data(l, N); },       [&] { return ucm_data(l, N); },
        [&] { return kheis_data(l); },        [&] { return uheis_data(l); },
        [&] { return fbplus_ext_data(l, N); }, [&] { return hcm_left_data(l, N); },
    };
    for (const auto& make : data) {
      BicrossData D = make();
      const std::string suite = "compat:" + D.name + ":" + lam_label(l);
      guarded(rep, suite, "conditions", tags::compat, [&] { absorb(rep, check_compatibility(D, bound, suite), tags::compat); });
    }
  }

  // Each mutation drops one term from a table and must be detected.
  struct Mutation {
    std::string id;
    std::function<BicrossData()> make;
  };
  const Q l(1);
  std::vector<Mutation> mutations = {
      {"HCM: X|>t2 without the -2 t2^2 term",
       [&] { BicrossData D = hcm_data(l, N); return D.with_action(kX, tgen(2), NCPoly::gen(tgen(3), Q(3))); }},
      {"HCM: X|>t3 without the -2 t2 t3 term",
       [&] { BicrossData D = hcm_data(l, N); return D.with_action(kX, tgen(3), NCPoly::gen(tgen(4), Q(4))); }},
      {"HCM: coaction of X without Y (x) 2t2",
       [&] {
         BicrossData D = hcm_data(l, N);
         return D.with_coaction(kX, tensor(NCPoly::gen(kX), D.H.get(), NCPoly::one(), D.A.get()));
       }},
      {"KHeis: coaction of X without Y (x) t",
       [&] {
         BicrossData D = kheis_data(l);
         return D.with_coaction(kX, tensor(NCPoly::gen(kX), D.H.get(), NCPoly::one(), D.A.get()));
       }},
      {"UCM: coaction of z3 without the alpha beta (x) z2 term",
       [&] {
         BicrossData D = ucm_data(l, N);
         return D.with_coaction(zgen(3), tensor(NCPoly::of(Word{kAlpha, kAlpha}), D.A.get(), NCPoly::gen(zgen(3)), D.H.get()));
       }},
  };
  for (const Mutation& m : mutations) {
    const std::string suite = "mutation";
    guarded(rep, suite, m.id, tags::compat, [&] {
      Report r = check_compatibility(m.make(), bound, "mutated");
      const Check* f = r.first_failure();
      if (f && !f->witness.empty())
        rep.pass(suite, m.id, "detected at " + f->id + ": " + f->witness, tags::compat);
      else
        rep.fail(suite, m.id, "mutation not detected (" + summary(r) + ")", tags::compat);
    });
  }
  return rep;
}

Report suite_duality(const SuiteConfig& cfg) {
  Report rep;
  const int bound = std::min(cfg.grade_bound, 3);
  for (const Q& l : lambdas_or(cfg, {Q(2)})) {
    auto run = [&](const std::string& name, const std::function<PairingPtr()>& make) {
      const std::string suite = "duality:" + name + ":" + lam_label(l);
      guarded(rep, suite, "axioms", tags::duality, [&] { absorb(rep, check_duality(*make(), {bound, 0}, suite), tags::duality); });
    };
    run("Ud0-FD0", [&] { return pairing_ud0_fd0(build({Family::Ud0, l, cfg.N}), build({Family::FD0, l, cfg.N})); });
    run("Ubplus-FBplus",
        [&] { return pairing_ubplus_fbplus(build({Family::Ubplus, l, 0}), build({Family::FBplus, l, 0})); });
    run("UCM-HCM", [&] { return pairing_ucm_hcm(build({Family::UCM, l, cfg.N}), build({Family::HCM, l, cfg.N})); });
    run("UHeis-KHeis",
        [&] { return pairing_uheis_kheis(build({Family::UHeis, l, 0}), build({Family::KHeis, l, 0})); });
  }

  // Closed forms against the recursive evaluation, indices up to 6. The
  // truncation is raised so that no product in range overflows.
  const int big = 16;
  auto ud0 = build({Family::Ud0, Q(1), big});
  auto fd0 = build({Family::FD0, Q(1), big});
  auto P = pairing_ud0_fd0(ud0, fd0);
  {
    const std::string suite = "closed-form:z-word,t";
    int bad = 0, total = 0;
    std::string first;
    for (int p = 1; p <= 3; ++p) {
      std::vector<int> ms(p, 2);
      std::function<void(int)> rec = [&](int i) {
        if (i == p) {
          Word u;
          for (int m : ms) u.push_back(zgen(m));
          for (int n = 2; n <= 6; ++n) {
            Q a = P->pair_recursive(u, Word{tgen(n)});
            Q b = closed_form_zword_t(ms, n);
            ++total;
            if (a != b && bad++ == 0) first = render_word(u) + " vs t" + std::to_string(n) + ": " + qstr(a) + " != " + qstr(b);
          }
          return;
        }
        for (int m = 2; m <= 6; ++m) {
          ms[i] = m;
          rec(i + 1);
        }
      };
      rec(0);
    }
    expect(rep, suite, "all tuples", bad == 0, bad ? first : std::to_string(total) + " entries", tags::closed_form);
  }
  {
    const std::string suite = "closed-form:z,t-word";
    int bad = 0, total = 0;
    std::string first;
    for (int m = 2; m <= 6; ++m)
      for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
          for (int c = 1; c <= 6; ++c) {
            const std::vector<int> ns{a, b, c};
            Word w;
            for (int n : ns)
              if (n > 1) w.push_back(tgen(n));
            Q x = P->pair(NCPoly::gen(zgen(m)), fd0->normalize(w));
            Q y = closed_form_z_tword(m, ns);
            ++total;
            if (x != y && bad++ == 0)
              first = "z" + std::to_string(m) + " vs t-indices " + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ": " + qstr(x) + " != " + qstr(y);
          }
    expect(rep, suite, "all tuples", bad == 0, bad ? first : std::to_string(total) + " entries", tags::closed_form);
  }
  for (const Q& l : lambdas_or(cfg, {Q(1), Q(2), Q(-1, 2)})) {
    auto ub = build({Family::Ubplus, l, 0});
    auto fb = build({Family::FBplus, Q(1), 0});
    auto B = pairing_ubplus_fbplus(ub, fb);
    const std::string suite = "closed-form:XY,alpha-beta:" + lam_label(l);
    int bad = 0, total = 0;
    std::string first;
    for (int j = 0; j <= 6; ++j)
      for (int k = 0; k <= 6; ++k)
        for (int s = -6; s <= 6; ++s)
          for (int r = 0; r <= 6; ++r) {
            Word u(j, kX);
            u.insert(u.end(), k, kY);
            Word w(std::abs(s), s >= 0 ? kAlpha : kAlphaInv);
            w.insert(w.end(), r, kBeta);
            Q x = B->pair_recursive(u, w), y = closed_form_xy_ab(j, k, s, r, l);
            ++total;
            if (x != y && bad++ == 0) first = render_word(u) + " vs " + render_word(w) + ": " + qstr(x) + " != " + qstr(y);
          }
    expect(rep, suite, "all tuples", bad == 0, bad ? first : std::to_string(total) + " entries", tags::closed_form);

    auto uh = build({Family::UHeis, l, 0});
    auto kh = build({Family::KHeis, l, 0});
    auto Hh = pairing_uheis_kheis(uh, kh);
    const std::string hsuite = "closed-form:heis:" + lam_label(l);
    bad = total = 0;
    for (int p = 0; p <= 3; ++p)
      for (int q = -3; q <= 3; ++q)
        for (int r = 0; r <= 3; ++r)
          for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
              for (int k = 0; k <= 3; ++k) {
                Word u(p, kSmallZ);
                u.insert(u.end(), std::abs(q), q >= 0 ? kAlpha : kAlphaInv);
                u.insert(u.end(), r, kBeta);
                Word w(i, kSmallT);
                w.insert(w.end(), j, kX);
                w.insert(w.end(), k, kY);
                Q x = Hh->pair_recursive(u, w), y = closed_form_heis(p, q, r, i, j, k, l);
                ++total;
                if (x != y && bad++ == 0) first = render_word(u) + " vs " + render_word(w) + ": " + qstr(x) + " != " + qstr(y);
              }
    expect(rep, hsuite, "all tuples", bad == 0, bad ? first : std::to_string(total) + " entries", tags::closed_form);
  }
  return rep;
}

Report suite_gram(const SuiteConfig& cfg) {
  Report rep;
  auto ud0 = build({Family::Ud0, Q(1), cfg.N});
  auto fd0 = build({Family::FD0, Q(1), cfg.N});
  auto P = pairing_ud0_fd0(ud0, fd0);
  const std::string suite = "gram:Ud0-FD0";
  for (int g = 0; g <= 5; ++g) {
    guarded(rep, suite, "grade " + std::to_string(g), tags::gram, [&] {
      GramResult G = gram(*P, g);
      std::ostringstream w;
      w << "rank " << G.rank << ", slice dimensions " << G.left_basis.size() << " x " << G.right_basis.size();
      expect(rep, suite, "grade " + std::to_string(g) + " rank", G.nondegenerate(), w.str(), tags::gram);
      if (g == 2)
        expect(rep, suite, "grade 2 determinant", G.determinant && *G.determinant == Q(2),
               "det " + (G.determinant ? qstr(*G.determinant) : std::string("n/a")) + ", matrix " + render_matrix(G.matrix),
               tags::gram);
    });
  }
  return rep;
}

Report suite_ideal(const SuiteConfig& cfg) {
  Report rep;
  for (const Q& l : lambdas_or(cfg, {Q(1), Q(-1), Q(1, 2), Q(2)})) {
    const std::string suite = "ideal:" + lam_label(l);
    auto hcm = build({Family::HCM, l, cfg.N});
    HeisQuotient q = heis_quotient(hcm);
    const Algebra* H = hcm.get();
    auto reduce_word = [&](const Word& w) { return TensorPoly::from_poly(q.reduce(NCPoly::of(w)), H); };
    for (int n = 3; n <= cfg.N; ++n) {
      const std::string id = "t~" + std::to_string(n);
      guarded(rep, suite, id, tags::ideal, [&] {
        NCPoly tt = q.tilde(n);
        HeisQuotient::Witness w = q.coproduct_witness(n);
        TensorPoly d = coproduct(*hcm, tt);
        TensorPoly rest = d - w.ideal_right - w.ideal_left;
        TensorPoly right_left_over = map_leg(w.ideal_right, 1, reduce_word);
        TensorPoly left_left_over = map_leg(w.ideal_left, 0, reduce_word);
        expect(rep, suite, id + " decomposition", rest.is_zero(), render(rest), tags::ideal);
        expect(rep, suite, id + " H(x)I part", right_left_over.is_zero(), render(right_left_over), tags::ideal);
        expect(rep, suite, id + " I(x)H part", left_left_over.is_zero(), render(left_left_over), tags::ideal);
        Q e = counit(*hcm, tt);
        expect(rep, suite, id + " counit", is_zero(e), qstr(e), tags::ideal);
        NCPoly img = q.quotient_map.apply(tt);
        expect(rep, suite, id + " in kernel", img.is_zero(), render(img), tags::ideal);
      });
    }

    // The quotient is KHeis: the map is a Hopf morphism onto build(KHeis) and
    // injective on the reduced words of every grade.
    auto kheis = build({Family::KHeis, l, 0});
    HopfMorphism onto = q.quotient_map;
    onto.target = kheis;
    absorb(rep, check_morphism(onto, nullptr, suite + ":quotient-map"), tags::ideal);
    for (int g = 0; g <= cfg.grade_bound; ++g) {
      const std::string id = "grade " + std::to_string(g) + " quotient dimension";
      guarded(rep, suite, id, tags::ideal, [&] {
        std::vector<Word> kb = kheis->basis_exact(g);
        std::map<Word, size_t> col;
        for (size_t i = 0; i < kb.size(); ++i) col[kb[i]] = i;
        std::map<Word, size_t> hcol;
        std::vector<std::vector<Q>> images, reduced;
        for (const Word& w : hcm->basis_exact(g)) {
          NCPoly r = q.reduce(NCPoly::of(w));
          NCPoly im = onto.apply(r);
          std::vector<Q> row(kb.size());
          for (const auto& [u, c] : im.terms) row.at(col.at(u)) = c;
          images.push_back(row);
          for (const auto& [u, c] : r.terms) hcol.emplace(u, hcol.size());
          reduced.push_back({});
        }
        size_t i = 0;
        for (const Word& w : hcm->basis_exact(g)) {
          NCPoly r = q.reduce(NCPoly::of(w));
          reduced[i].assign(hcol.size(), Q(0));
          for (const auto& [u, c] : r.terms) reduced[i][hcol.at(u)] = c;
          ++i;
        }
        const int ri = images.empty() ? 0 : bareiss(images).rank;
        const int rr = reduced.empty() || hcol.empty() ? 0 : bareiss(reduced).rank;
        std::ostringstream os;
        os << "rank of images " << ri << ", rank mod ideal " << rr << ", dim KHeis " << kb.size();
        expect(rep, suite, id, ri == static_cast<int>(kb.size()) && rr == ri, os.str(), tags::ideal);
      });
    }
  }
  return rep;
}

Report suite_scaling(const SuiteConfig& cfg) {
  Report rep;
  auto h1 = build({Family::HCM, Q(1), cfg.N});
  auto u1 = build({Family::UCM, Q(1), cfg.N});
  for (const Q& l : lambdas_or(cfg, {Q(1), Q(-1), Q(1, 2), Q(3)})) {
    if (is_zero(l)) {
      rep.add("scaling:" + lam_label(l), "parameter", Status::Skip, "scaling needs a nonzero parameter", tags::scaling);
      continue;
    }
    auto hl = build({Family::HCM, l, cfg.N});
    auto ul = build({Family::UCM, l, cfg.N});
    HopfMorphism hf = hcm_scaling(h1, hl, l), hb = hcm_scaling(hl, h1, Q(1) / l);
    HopfMorphism uf = ucm_scaling(u1, ul, l), ub = ucm_scaling(ul, u1, Q(1) / l);
    absorb(rep, check_morphism(hf, &hb, "scaling:HCM:" + lam_label(l)), tags::scaling);
    absorb(rep, check_morphism(hb, &hf, "scaling:HCM-inverse:" + lam_label(l)), tags::scaling);
    absorb(rep, check_morphism(uf, &ub, "scaling:UCM:" + lam_label(l)), tags::scaling);
    absorb(rep, check_morphism(ub, &uf, "scaling:UCM-inverse:" + lam_label(l)), tags::scaling);
  }
  return rep;
}

Report suite_schrodinger(const SuiteConfig& cfg) {
  Report rep;
  const SchrodingerCheckOptions opt{cfg.grade_bound, 2, true};
  for (const Q& l : lambdas_or(cfg, {Q(1), Q(-1), Q(1, 2), Q(2)})) {
    const std::string lab = lam_label(l);
    guarded(rep, "schrodinger:UCM:" + lab, "table", tags::schrodinger, [&] {
      absorb(rep, check_schrodinger(schrodinger_ucm(l, cfg.N), opt, "schrodinger:UCM:" + lab), tags::schrodinger);
    });
    if (is_zero(l)) {
      rep.add("schrodinger:UHeis:" + lab, "table", Status::Skip, "needs lambda != 0", tags::schrodinger);
    } else {
      guarded(rep, "schrodinger:UHeis:" + lab, "table", tags::schrodinger, [&] {
        absorb(rep, check_schrodinger(schrodinger_uheis(l), opt, "schrodinger:UHeis:" + lab), tags::schrodinger);
      });
      guarded(rep, "schrodinger:UHeis-scaled:" + lab, "table", tags::schrodinger, [&] {
        absorb(rep, check_schrodinger(schrodinger_uheis_scaled_table(l), opt, "schrodinger:UHeis-scaled:" + lab),
               tags::schrodinger);
      });
      guarded(rep, "schrodinger:table-scaling:" + lab, "transport", tags::schrodinger, [&] {
        absorb(rep, check_table_scaling(l, cfg.N, "schrodinger:table-scaling:" + lab), tags::schrodinger);
      });
    }
    guarded(rep, "schrodinger:quotient:" + lab, "restriction", tags::schrodinger, [&] {
      absorb(rep, check_quotient_restriction(l, cfg.N, cfg.grade_bound, "schrodinger:quotient:" + lab), tags::schrodinger);
    });
  }
  return rep;
}

Report suite_sl2(const SuiteConfig& cfg) {
  Report rep;
  const std::string suite = "sl2";
  MatchedPair M = sl2_matched_pair();
  absorb(rep, check_matched_pair(M, "sl2:matched-pair"), tags::sl2);

  guarded(rep, suite, "derived tables", tags::sl2, [&] {
    MatchedPair D = derived_sl2_matched_pair();
    std::string diff;
    for (const std::string& xi : M.right_alg.basis)
      for (const std::string& x : M.left_alg.basis) {
        LieVec a = M.act_left(lie_vec(xi), lie_vec(x)), b = D.act_left(lie_vec(xi), lie_vec(x));
        if (a != b) diff += xi + "|>" + x + ": " + render(a) + " vs " + render(b) + "; ";
        a = M.act_right(lie_vec(xi), lie_vec(x));
        b = D.act_right(lie_vec(xi), lie_vec(x));
        if (a != b) diff += xi + "<|" + x + ": " + render(a) + " vs " + render(b) + "; ";
      }
    expect(rep, suite, "derived tables", diff.empty(), diff, tags::sl2);
    absorb(rep, check_matched_pair(D, "sl2:derived-matched-pair"), tags::sl2);
  });

  LieAlgebra g = build_double(M);
  absorb(rep, check_jacobi(g, "sl2:double-jacobi"), tags::sl2);
  Sl2Iso iso = iso_to_sl2(g);
  if (!iso.found) {
    rep.fail(suite, "iso", iso.reason, tags::sl2);
  } else {
    std::string w;
    for (const auto& [k, v] : iso.image) w += k + "->" + render(v) + " ";
    const bool canonical = iso.image.at("X") == lie_vec("E") && iso.image.at("Y") == lie_vec("H", Q(1, 2)) &&
                           iso.image.at("z") == lie_vec("F", Q(-1));
    rep.pass(suite, canonical ? "iso (X->E, Y->H/2, z->-F)" : "iso (equivalent map)", w, tags::sl2);
    absorb(rep, check_lie_morphism(g, lie_sl2(), iso.image, "sl2:iso-structure-constants"), tags::sl2);
  }
  for (const LieAlgebra& a : {lie_abelian(3), lie_d0({2, 3, 4})}) {
    Sl2Iso r = iso_to_sl2(a);
    expect(rep, suite, "no iso: " + a.name, !r.found, r.found ? "unexpected isomorphism" : r.reason, tags::sl2);
  }
  {
    LieAlgebra witt = lie_d0({0, 1, 2});
    Sl2Iso r = iso_to_sl2(witt);
    expect(rep, suite, "iso: " + witt.name, r.found, r.reason, tags::sl2);
    if (r.found) absorb(rep, check_lie_morphism(witt, lie_sl2(), r.image, "sl2:iso-" + witt.name), tags::sl2);
  }

  const int n = std::max(cfg.samples, 100);
  auto samples = random_group_samples(n, cfg.seed);
  expect(rep, suite, "group samples", static_cast<int>(samples.size()) >= 100,
         std::to_string(samples.size()) + " samples, seed " + std::to_string(cfg.seed), tags::sl2);
  absorb(rep, group_actions_check(samples, "sl2:group"), tags::sl2);
  return rep;
}

Report suite_fodc(const SuiteConfig& cfg) {
  Report rep;
  const int D = 3;
  for (const Q& l : lambdas_or(cfg, {Q(1), Q(-1), Q(1, 2)})) {
    const std::string suite = "fodc:" + lam_label(l);

    guarded(rep, suite, "built-in calculi", tags::fodc, [&] {
      absorb(rep, check_fodc_consistency(fodc_2d_right(l), suite + ":2d-right:consistency"), tags::fodc);
      absorb(rep, check_covariance(fodc_2d_right(l), ubplus_right_coaction(l), suite + ":2d-right:covariance"), tags::fodc);
      absorb(rep, check_fodc_consistency(fodc_3d_left(l), suite + ":3d-left:consistency"), tags::fodc);
      absorb(rep, check_covariance(fodc_3d_left(l), kheis_left_coaction(l), suite + ":3d-left:covariance"), tags::fodc);
      for (const Q& g : {Q(0), Q(l / 2)}) {
        const std::string s = suite + ":3d-right(g=" + qstr(g) + ")";
        absorb(rep, check_fodc_consistency(fodc_3d_right(l, g), s + ":consistency"), tags::fodc);
        absorb(rep, check_covariance(fodc_3d_right(l, g), kheis_right_coaction(l), s + ":covariance"), tags::fodc);
      }
    });

    std::map<std::string, ClassifyResult> res;
    for (const std::string& name : scenario_names()) {
      guarded(rep, suite, name + " classify", tags::fodc, [&] {
        res[name] = classify(scenario(name, l, D));
        ClassifyResult r4 = classify(scenario(name, l, D + 1));
        expect(rep, suite, name + " degree 3 = degree 4", signature(res[name]) == signature(r4),
               "degree 3:\n" + signature(res[name]) + "degree 4:\n" + signature(r4), tags::fodc);
      });
    }

    if (res.count("2d-right")) {
      const ClassifyResult& r = res["2d-right"];
      const bool ok = r.solutions.size() == 1 && r.families.empty() && r.irrational.empty() &&
                      same_table(r.solutions[0], fodc_2d_right(l));
      expect(rep, suite, "2d-right unique and equal to the built-in table", ok, signature(r), tags::fodc);
    }
    if (res.count("3d-right")) {
      const ClassifyResult& r = res["3d-right"];
      const FODC g0 = fodc_3d_right(l, Q(0)), gh = fodc_3d_right(l, l / 2);
      expect(rep, suite, "3d-right contains g=0", contains_table(r, g0), render_table(g0), tags::fodc);
      expect(rep, suite, "3d-right contains g=lambda/2", contains_table(r, gh), render_table(gh), tags::fodc);
      if (!is_zero(l)) {
        auto s = dt_rescaling(g0, gh);
        expect(rep, suite, "3d-right g=0 and g=lambda/2 not isomorphic", !s.has_value(),
               s ? "dt -> " + qstr(*s) + " dt" : "no rescaling of dt relates them", tags::fodc);
      }
      const bool two = r.solutions.size() == 2 && r.families.empty() && r.irrational.empty();
      std::ostringstream w;
      w << r.solutions.size() << " isolated solution(s) and " << r.families.size()
        << " parameter family(ies); the family contains g=0:\n"
        << signature(r);
      expect(rep, suite, "3d-right exactly two solutions", two, w.str(), tags::fodc);
    }
    for (const char* name : {"3d-bicovariant", "4d-bicovariant"}) {
      if (!res.count(name)) continue;
      const ClassifyResult& r = res[name];
      expect(rep, suite, std::string(name) + " empty", r.empty() && r.non_surjective.empty(),
             r.linear_inconsistent ? "linear system inconsistent" : signature(r), tags::fodc);
    }
    if (res.count("4d-right-sub2d")) {
      const ClassifyResult& r = res["4d-right-sub2d"];
      expect(rep, suite, "4d-right-sub2d admits no calculus", r.empty(), signature(r), tags::fodc);
      std::ostringstream w;
      w << "system is consistent: " << r.non_surjective.size()
        << " bimodule table(s) with theta outside A dA, no calculus\n"
        << signature(r);
      expect(rep, suite, "4d-right-sub2d inconsistent system", r.linear_inconsistent, w.str(), tags::fodc);
    }
  }

  // The coproduct-defined calculus is covariant only at lambda = 0.
  std::vector<Q> ls = lambdas_or(cfg, {Q(1), Q(-1), Q(1, 2)});
  if (std::find(ls.begin(), ls.end(), Q(0)) == ls.end()) ls.insert(ls.begin(), Q(0));
  for (const Q& l : ls) {
    const std::string suite = "fodc:oeckl:" + lam_label(l);
    guarded(rep, suite, "covariance", tags::fodc, [&] {
      FODC F = oeckl_calculus(l);
      FormCoaction C = ubplus_right_coaction(l);
      Report cov = check_covariance(F, C, suite);
      expect(rep, suite, "covariant iff lambda = 0", cov.ok() == is_zero(l), summary(cov), tags::fodc);
      FormTensor expected;
      if (!is_zero(l)) {
        expected[{Word{}, kdX, Word{kSmallT}}] = l;
        expected[{Word{}, kdY, Word{kSmallT, kSmallT}}] = l / 2;
      }
      FormTensor got = covariance_defect_terms(F, C, kdX, kX);
      expect(rep, suite, "(dX)X defect = lambda (dX(x)t + 1/2 dY(x)t^2)", got == expected,
             covariance_discrepancy(F, C, kdX, kX), tags::fodc);
      int others = 0;
      for (const Check& c : cov.checks)
        if (c.status == Status::Fail && c.id != "(dX)X") ++others;
      expect(rep, suite, "no other defective entries", others == 0, std::to_string(others), tags::fodc);
    });
  }
  return rep;
}

Report suite_finite_oracle(const SuiteConfig&) {
  Report rep;
  const std::string suite = "oracle:S3";
  guarded(rep, suite, "factorisation", tags::oracle, [&] {
    FiniteGroup X = symmetric_group(3);
    std::vector<int> G = generated_subgroup(X, {3}), M = generated_subgroup(X, {1});
    expect(rep, suite, "factor orders", G.size() == 3 && M.size() == 2,
           "|G| = " + std::to_string(G.size()) + ", |M| = " + std::to_string(M.size()), tags::oracle);
    FiniteBicross F = finite_group_bicross(X, G, M);
    absorb(rep, check_hopf_axioms(*F.lr, {4, true}, suite + ":lr"), tags::oracle);
    absorb(rep, check_hopf_axioms(*F.rl, {4, true}, suite + ":rl"), tags::oracle);
    absorb(rep, check_duality(*F.pairing, {4, 0}, suite + ":pairing"), tags::oracle);

    // Independent evaluation: a normal left word f_m.. g.. is (indicator on M,
    // element of G), a normal right word g.. f_g.. is (element of M, indicator
    // on G), and the pairing is phi(m') psi(g).
    auto split = [&](const Word& w, std::vector<int>& ind, int& elem, int domain_size) {
      ind.assign(domain_size, 1);
      elem = X.identity;
      for (Letter l : w) {
        const std::string n = letter_name(l);
        const int i = std::stoi(n.substr(1));
        if (n[0] == 'f') {
          for (int k = 0; k < domain_size; ++k)
            if (k != i) ind[k] = 0;
        } else {
          elem = X.mul(elem, i);
        }
      }
    };
    std::vector<Word> lb = F.pairing->left->basis(4), rb = F.pairing->right->basis(4);
    int entries = 0, bad = 0;
    std::string first;
    std::vector<std::vector<Q>> m;
    for (const Word& u : lb) {
      m.emplace_back();
      for (const Word& w : rb) {
        std::vector<int> phi, psi;
        int g = 0, mm = 0;
        split(u, phi, g, X.size());
        split(w, psi, mm, X.size());
        const Q expected(phi[mm] * psi[g]);
        const Q got = F.pairing->pair_words(u, w);
        m.back().push_back(got);
        ++entries;
        if (got != expected && bad++ == 0)
          first = render_word(u) + " vs " + render_word(w) + ": " + qstr(got) + " != " + qstr(expected);
      }
    }
    expect(rep, suite, "36 pairing entries", entries == 36 && bad == 0,
           bad ? first : std::to_string(entries) + " entries", tags::oracle);
    const int rank = bareiss(m).rank;
    expect(rep, suite, "pairing nondegenerate", rank == static_cast<int>(lb.size()) && lb.size() == rb.size(),
           "rank " + std::to_string(rank), tags::oracle);
  });
  return rep;
}

std::vector<std::string> verify_group_names() {
  return {"hopf", "bicross", "pairing", "schrodinger", "ideal", "scaling", "sl2", "fodc", "oracle"};
}

Report run_verify_group(const std::string& name, const SuiteConfig& cfg) {
  Report rep;
  if (name == "hopf") {
    rep = suite_hopf(cfg);
  } else if (name == "bicross") {
    rep = suite_bicross_presentations(cfg);
    rep.merge(suite_compatibility(cfg));
  } else if (name == "pairing") {
    rep = suite_duality(cfg);
    rep.merge(suite_gram(cfg));
  } else if (name == "schrodinger") {
    rep = suite_schrodinger(cfg);
  } else if (name == "ideal") {
    rep = suite_ideal(cfg);
  } else if (name == "scaling") {
    rep = suite_scaling(cfg);
  } else if (name == "sl2") {
    rep = suite_sl2(cfg);
  } else if (name == "fodc") {
    rep = suite_fodc(cfg);
  } else if (name == "oracle") {
    rep = suite_finite_oracle(cfg);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return rep;
}

Report suite_all(const SuiteConfig& cfg) {
  Report rep;
  for (const std::string& n : verify_group_names()) rep.merge(run_verify_group(n, cfg));
  return rep;
}

}  // namespace cmhopf
