#include "cmhopf/hopf.hpp"

#include <sstream>

namespace cmhopf {

TensorPoly coproduct_word(const Algebra& A, const Word& w) {
  if (w.empty()) {
    TensorPoly t({&A, &A});
    t.add({{}, {}}, Q(1));
    return t;
  }
  auto hit = A.delta_cache.find(w);
  if (hit != A.delta_cache.end()) return hit->second;
  TensorPoly r;
  if (w.size() == 1) {
    if (!A.contains(w[0])) throw UnknownGenerator(letter_name(w[0]));
    r = A.delta_gen(w[0]);
    if (r.is_zero()) r.legs = {&A, &A};
  } else {
    Word prefix(w.begin(), w.end() - 1);
    r = tensor_mul(coproduct_word(A, prefix), coproduct_word(A, Word{w.back()}));
  }
  A.delta_cache.emplace(w, r);
  return r;
}

TensorPoly coproduct(const Algebra& A, const NCPoly& x) {
  TensorPoly r({&A, &A});
  for (const auto& [w, c] : x.terms) r += c * coproduct_word(A, w);
  return r;
}

Q counit_word(const Algebra& A, const Word& w) {
  Q r(1);
  for (Letter l : w) {
    r *= A.eps_gen(l);
    if (sgn(r) == 0) break;
  }
  return r;
}

Q counit(const Algebra& A, const NCPoly& x) {
  Q r(0);
  for (const auto& [w, c] : x.terms) r += c * counit_word(A, w);
  return r;
}

NCPoly antipode_word(const Algebra& A, const Word& w) {
  if (w.empty()) return NCPoly::one();
  auto hit = A.antipode_cache.find(w);
  if (hit != A.antipode_cache.end()) return hit->second;
  NCPoly r;
  if (w.size() == 1) {
    r = A.normalize(A.antipode_gen(w[0]));
  } else {
    Word prefix(w.begin(), w.end() - 1);
    r = A.mul(antipode_word(A, Word{w.back()}), antipode_word(A, prefix));
  }
  A.antipode_cache.emplace(w, r);
  return r;
}

NCPoly antipode(const Algebra& A, const NCPoly& x) {
  NCPoly r;
  for (const auto& [w, c] : x.terms) r += c * antipode_word(A, w);
  return r;
}

TensorPoly coproduct_on_leg(const TensorPoly& t, size_t leg) {
  const Algebra* A = t.legs.at(leg);
  return map_leg(t, leg, [A](const Word& w) { return coproduct_word(*A, w); });
}

TensorPoly counit_on_leg(const TensorPoly& t, size_t leg) {
  const Algebra* A = t.legs.at(leg);
  return map_leg(t, leg, [A](const Word& w) { return TensorPoly::scalar(counit_word(*A, w)); });
}

TensorPoly antipode_on_leg(const TensorPoly& t, size_t leg) {
  const Algebra* A = t.legs.at(leg);
  return map_leg(t, leg,
                 [A](const Word& w) { return TensorPoly::from_poly(antipode_word(*A, w), A); });
}

TensorPoly multiply_legs(const TensorPoly& t, size_t leg) {
  if (leg + 1 >= t.rank() || t.legs[leg] != t.legs[leg + 1]) throw RankMismatch();
  const Algebra* A = t.legs[leg];
  TensorPoly r;
  r.legs = t.legs;
  r.legs.erase(r.legs.begin() + leg + 1);
  for (const auto& [k, c] : t.terms) {
    Word w = k[leg];
    w.insert(w.end(), k[leg + 1].begin(), k[leg + 1].end());
    for (const auto& [u, cu] : A->normalize(w).terms) {
      std::vector<Word> nk(k.begin(), k.begin() + leg);
      nk.push_back(u);
      nk.insert(nk.end(), k.begin() + leg + 2, k.end());
      r.add(nk, c * cu);
    }
  }
  return r;
}

TensorPoly iterated_coproduct(const Algebra& A, const NCPoly& x, int k) {
  if (k < 1) return TensorPoly::from_poly(x, &A);
  TensorPoly t = coproduct(A, x);
  for (int i = 1; i < k; ++i) t = coproduct_on_leg(t, t.rank() - 1);
  return t;
}

TensorPoly iterated_coproduct_left(const Algebra& A, const NCPoly& x, int k) {
  if (k < 1) return TensorPoly::from_poly(x, &A);
  TensorPoly t = coproduct(A, x);
  for (int i = 1; i < k; ++i) t = coproduct_on_leg(t, 0);
  return t;
}

namespace {

struct Tally {
  int checked = 0;
  int skipped = 0;
};

}  // namespace

Report check_hopf_axioms(const Algebra& A, const HopfCheckOptions& opt, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "hopf:" + A.name : suite;
  Tally coassoc, counit_t, anti, welldef;

  for (const Word& w : A.basis(opt.grade_bound)) {
    const std::string wid = render_word(w);
    try {
      const TensorPoly D = coproduct_word(A, w);
      const NCPoly x = NCPoly::of(w);
      ++coassoc.checked;
      TensorPoly l = coproduct_on_leg(D, 0), r = coproduct_on_leg(D, 1);
      if (l != r) rep.fail(s, "coassoc:" + wid, "(D(x)id)D - (id(x)D)D = " + render(l - r));

      ++counit_t.checked;
      NCPoly el = counit_on_leg(D, 0).to_poly(), er = counit_on_leg(D, 1).to_poly();
      if (el != x) rep.fail(s, "counit-left:" + wid, "(e(x)id)D(x) - x = " + render(el - x));
      if (er != x) rep.fail(s, "counit-right:" + wid, "(id(x)e)D(x) - x = " + render(er - x));

      ++anti.checked;
      const NCPoly unit = NCPoly::scalar(counit_word(A, w));
      NCPoly sl = multiply_legs(antipode_on_leg(D, 0), 0).to_poly();
      NCPoly sr = multiply_legs(antipode_on_leg(D, 1), 0).to_poly();
      if (sl != unit) rep.fail(s, "antipode-left:" + wid, "m(S(x)id)D(x) - e(x)1 = " + render(sl - unit));
      if (sr != unit) rep.fail(s, "antipode-right:" + wid, "m(id(x)S)D(x) - e(x)1 = " + render(sr - unit));
    } catch (const TruncationOverflow& e) {
      ++coassoc.skipped;
      rep.add(s, "word:" + wid, Status::Skip, e.what());
    }
  }

  if (opt.check_rules) {
    for (auto [a, b] : A.rule_pairs()) {
      const RuleOut& r = A.rule_at(a, b);
      const std::string rid = letter_name(a) + "*" + letter_name(b);
      if (r.kind == RuleOut::Overflow) {
        ++welldef.skipped;
        rep.add(s, "rule:" + rid, Status::Skip, "rule needs index " + std::to_string(r.overflow));
        continue;
      }
      try {
        ++welldef.checked;
        const NCPoly rhs = A.normalize(r.rhs);
        TensorPoly dl = tensor_mul(coproduct_word(A, {a}), coproduct_word(A, {b}));
        TensorPoly dr = coproduct(A, rhs);
        if (dl != dr) rep.fail(s, "rule-coproduct:" + rid, "D(a)D(b) - D(rhs) = " + render(dl - dr));
        Q el = counit_word(A, {a}) * counit_word(A, {b}), er = counit(A, rhs);
        if (el != er) rep.fail(s, "rule-counit:" + rid, "e(a)e(b) - e(rhs) = " + qstr(el - er));
        NCPoly sl = A.mul(antipode_word(A, {b}), antipode_word(A, {a}));
        NCPoly sr = antipode(A, rhs);
        if (sl != sr) rep.fail(s, "rule-antipode:" + rid, "S(b)S(a) - S(rhs) = " + render(sl - sr));
      } catch (const TruncationOverflow& e) {
        ++welldef.skipped;
        rep.add(s, "rule:" + rid, Status::Skip, e.what());
      }
    }
  }

  auto summary = [&](const char* id, const Tally& t) {
    std::ostringstream os;
    os << t.checked << " cases";
    rep.pass(s, std::string("summary:") + id, os.str());
  };
  summary("coassociativity", coassoc);
  summary("counit", counit_t);
  summary("antipode", anti);
  if (opt.check_rules) summary("rule-well-definedness", welldef);
  return rep;
}

AlgebraPtr cyclic_group_algebra(int n) {
  auto A = std::make_shared<Algebra>();
  A->name = "kZ" + std::to_string(n);
  for (int i = 1; i < n; ++i) A->gens.push_back(make_letter(Kind::Group, i));
  A->rule = [n](Letter a, Letter b) {
    if (kind_of(a) != Kind::Group || kind_of(b) != Kind::Group) return RuleOut::none();
    const int s = static_cast<int>((index_of(a) + index_of(b)) % n);
    return RuleOut::rewrite(s == 0 ? NCPoly::one() : NCPoly::gen(make_letter(Kind::Group, s)));
  };
  const Algebra* self = A.get();
  A->delta_gen = [self](Letter g) { return tensor(NCPoly::gen(g), self, NCPoly::gen(g), self); };
  A->eps_gen = [](Letter) { return Q(1); };
  A->antipode_gen = [n](Letter g) {
    return NCPoly::gen(make_letter(Kind::Group, (n - index_of(g)) % n));
  };
  return A;
}

}  // namespace cmhopf
