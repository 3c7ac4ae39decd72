#include "cmhopf/fodc.hpp"

#include "cmhopf/family.hpp"
#include "cmhopf/hopf.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace cmhopf {

Letter form_of(Letter g) {
  switch (kind_of(g)) {
    case Kind::X: return kdX;
    case Kind::Y: return kdY;
    case Kind::SmallT: return kdt;
    default: throw UnknownGenerator("no differential for " + letter_name(g));
  }
}

Letter generator_of(Letter f) {
  switch (kind_of(f)) {
    case Kind::DX: return kX;
    case Kind::DY: return kY;
    case Kind::Dt: return kSmallT;
    default: throw UnknownGenerator("not an exact basis form: " + letter_name(f));
  }
}

NCPoly one_form(const NCPoly& coeff, Letter form) { return concat(coeff, NCPoly::gen(form)); }

namespace {

// ---- parametric one-forms ----

using PKey = std::pair<Word, int>;

struct PForm {
  std::map<PKey, MPoly> terms;
  void add(const Word& w, int i, const MPoly& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(w, i);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  PForm& operator+=(const PForm& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
  }
  PForm& operator-=(const PForm& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
    return *this;
  }
};

using TKey = std::tuple<Word, int, Word>;  // base word, form, H word
using PTensor = std::map<TKey, MPoly>;

void tadd(PTensor& t, const TKey& k, const MPoly& c) {
  if (c.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

class Engine {
 public:
  const Algebra& B;
  std::vector<Letter> forms;
  bool inner = false;
  int theta = -1;
  std::map<std::pair<int, Letter>, PForm> table;

  Engine(const Algebra& base, std::vector<Letter> f, bool in) : B(base), forms(std::move(f)), inner(in) {
    for (size_t i = 0; i < forms.size(); ++i)
      if (forms[i] == kTheta) theta = static_cast<int>(i);
    if (inner && theta < 0) throw std::invalid_argument("inner calculus needs theta in the basis");
  }

  int idx(Letter f) const {
    for (size_t i = 0; i < forms.size(); ++i)
      if (forms[i] == f) return static_cast<int>(i);
    throw UnknownGenerator("form not in basis: " + letter_name(f));
  }

  PForm basis(int i) const {
    PForm p;
    p.add({}, i, MPoly::constant(Q(1)));
    return p;
  }

  PForm from_ncpoly(const NCPoly& p) const {
    PForm out;
    for (const auto& [w, c] : p.terms) {
      if (w.empty()) throw std::invalid_argument("one-form without a basis form");
      int i = idx(w.back());
      Word base(w.begin(), w.end() - 1);
      for (const auto& [u, cu] : B.normalize(base).terms) out.add(u, i, MPoly::constant(c * cu));
    }
    return out;
  }

  NCPoly to_ncpoly(const PForm& p) const {
    NCPoly out;
    for (const auto& [k, c] : p.terms) {
      if (!c.is_constant()) throw std::logic_error("parametric one-form");
      Word w = k.first;
      w.push_back(forms[k.second]);
      out.add(w, c.constant_term());
    }
    return out;
  }

  PForm left_word(const Word& w, const PForm& x) const {
    if (w.empty()) return x;
    PForm out;
    for (const auto& [k, c] : x.terms) {
      Word ww = w;
      ww.insert(ww.end(), k.first.begin(), k.first.end());
      for (const auto& [u, cu] : B.normalize(ww).terms) out.add(u, k.second, cu * c);
    }
    return out;
  }

  PForm left(const NCPoly& a, const PForm& x) const {
    PForm out;
    for (const auto& [w, c] : a.terms) {
      PForm y = left_word(w, x);
      for (const auto& [k, v] : y.terms) out.add(k.first, k.second, c * v);
    }
    return out;
  }

  PForm entry(int i, Letter g) const {
    if (i == theta && inner) {
      // theta g = g theta + dg
      PForm p;
      p.add({g}, theta, MPoly::constant(Q(1)));
      p.add({}, idx(form_of(g)), MPoly::constant(Q(1)));
      return p;
    }
    auto it = table.find({i, g});
    if (it == table.end())
      throw std::invalid_argument("incomplete table: (" + letter_name(forms[i]) + ")" + letter_name(g));
    return it->second;
  }

  PForm right_gen(const PForm& x, Letter g) const {
    PForm out;
    for (const auto& [k, c] : x.terms) {
      PForm y = left_word(k.first, entry(k.second, g));
      for (const auto& [kk, v] : y.terms) out.add(kk.first, kk.second, c * v);
    }
    return out;
  }

  PForm right_word(PForm x, const Word& w) const {
    for (Letter l : w) x = right_gen(x, l);
    return x;
  }

  PForm right(const PForm& x, const NCPoly& a) const {
    PForm out;
    for (const auto& [w, c] : a.terms) {
      PForm y = right_word(x, w);
      for (const auto& [k, v] : y.terms) out.add(k.first, k.second, c * v);
    }
    return out;
  }

  PForm d_word(const Word& w) const {
    PForm out;
    for (size_t k = 0; k < w.size(); ++k) {
      Word pre(w.begin(), w.begin() + k);
      Word post(w.begin() + k + 1, w.end());
      out += left_word(pre, right_word(basis(idx(form_of(w[k]))), post));
    }
    return out;
  }

  PForm d(const NCPoly& a) const {
    PForm out;
    for (const auto& [w, c] : a.terms) {
      PForm y = d_word(w);
      for (const auto& [k, v] : y.terms) out.add(k.first, k.second, c * v);
    }
    return out;
  }

  std::string render(const PForm& p, const std::function<std::string(int)>& name) const {
    if (p.terms.empty()) return "0";
    // Group by form: (coefficient) form
    std::map<int, std::vector<std::pair<Word, MPoly>>> by;
    for (const auto& [k, c] : p.terms) by[k.second].emplace_back(k.first, c);
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, ts] : by) {
      if (!first) os << " + ";
      first = false;
      os << "(";
      bool f2 = true;
      for (const auto& [w, c] : ts) {
        if (!f2) os << " + ";
        f2 = false;
        std::string cs = cmhopf::render(c, name);
        if (w.empty())
          os << cs;
        else if (cs == "1")
          os << render_word(w);
        else
          os << "(" << cs << ")*" << render_word(w);
      }
      os << ")" << letter_name(forms[i]);
    }
    return os.str();
  }
};

Engine engine_of(const FODC& F) {
  Engine E(*F.base, F.forms, F.inner);
  for (const auto& [key, v] : F.right) {
    int i = E.idx(key.first);
    if (i == E.theta && F.inner) continue;
    E.table[{i, key.second}] = E.from_ncpoly(v);
  }
  return E;
}

std::string pname(int i) { return "p" + std::to_string(i); }

// Images of the basis forms under the coaction: right e_i -> sum e_k (x) h,
// left e_i -> sum h (x) e_k.
struct FormImage {
  int k;
  Word h;
  Q c;
};

std::vector<std::vector<FormImage>> form_images(const Engine& E, const FormCoaction& C) {
  std::vector<std::vector<FormImage>> img(E.forms.size());
  for (size_t i = 0; i < E.forms.size(); ++i) {
    if (E.forms[i] == kTheta) {
      img[i].push_back({static_cast<int>(i), {}, Q(1)});
      continue;
    }
    TensorPoly t = C.gen(generator_of(E.forms[i]));
    const size_t bl = C.side == Side::Right ? 0 : 1;
    for (const auto& [k, c] : t.terms) {
      const Word& b = k[bl];
      const Word& h = k[1 - bl];
      if (b.empty()) continue;
      if (b.size() != 1) throw std::invalid_argument("coaction of a generator leaves the generators");
      img[i].push_back({E.idx(form_of(b[0])), h, c});
    }
  }
  return img;
}


// Delta(x) for a one-form x. Both sides put the H-leg of the coefficient
// before the H-leg of the form image.
PTensor coact_form(const Engine& E, const FormCoaction& C, const std::vector<std::vector<FormImage>>& img,
                   const PForm& x) {
  (void)E;
  const bool right = C.side == Side::Right;
  PTensor out;
  for (const auto& [k, c] : x.terms) {
    for (const auto& [kk, cb] : C.on_word(k.first).terms) {
      const Word& b = right ? kk[0] : kk[1];
      const Word& hb = right ? kk[1] : kk[0];
      for (const FormImage& f : img[k.second]) {
        Word hw = hb;
        hw.insert(hw.end(), f.h.begin(), f.h.end());
        for (const auto& [u, cu] : C.H->normalize(hw).terms) tadd(out, {b, f.k, u}, (cb * f.c * cu) * c);
      }
    }
  }
  return out;
}

// Delta(e_i) Delta(g): the base leg of Delta(g) multiplies the form from the right.
PTensor coact_product(const Engine& E, const FormCoaction& C, const std::vector<std::vector<FormImage>>& img,
                      int i, Letter g) {
  const bool right = C.side == Side::Right;
  PTensor out;
  for (const FormImage& f : img[i]) {
    for (const auto& [kk, cg] : C.on_word({g}).terms) {
      const Word& gb = right ? kk[0] : kk[1];
      const Word& gh = right ? kk[1] : kk[0];
      Word hw = f.h;
      hw.insert(hw.end(), gh.begin(), gh.end());
      PForm y = E.right_word(E.basis(f.k), gb);
      for (const auto& [u, cu] : C.H->normalize(hw).terms)
        for (const auto& [yk, yc] : y.terms) tadd(out, {yk.first, yk.second, u}, (f.c * cg * cu) * yc);
    }
  }
  return out;
}

PTensor covariance_defect(const Engine& E, const FormCoaction& C, const std::vector<std::vector<FormImage>>& img,
                          int i, Letter g) {
  PTensor t = coact_product(E, C, img, i, g);
  for (const auto& [k, c] : coact_form(E, C, img, E.entry(i, g))) tadd(t, k, -c);
  return t;
}

std::string render_tensor(const Engine& E, const FormCoaction& C, const PTensor& t) {
  if (t.empty()) return {};
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t) {
    const auto& [b, i, h] = k;
    std::string cs = render(c, pname);
    if (!first) os << " + ";
    first = false;
    if (cs != "1") os << cs << "*";
    std::string fw = b.empty() ? "" : render_word(b) + "*";
    fw += letter_name(E.forms[i]);
    std::string hw = h.empty() ? "1" : render_word(h);
    os << (C.side == Side::Right ? fw + "(x)" + hw : hw + "(x)" + fw);
  }
  return os.str();
}

struct RuleCase {
  Letter a, b;
  NCPoly rhs;
};

std::vector<RuleCase> rule_cases(const Algebra& B) {
  std::vector<RuleCase> out;
  for (auto [a, b] : B.rule_pairs()) {
    const RuleOut& ro = B.rule_at(a, b);
    if (ro.kind == RuleOut::Rewrite) out.push_back({a, b, ro.rhs});
  }
  return out;
}

std::string rule_name(const RuleCase& r) { return letter_name(r.a) + letter_name(r.b); }

}  // namespace

// ---- concrete calculi ----

NCPoly fodc_left_mul(const FODC& F, const NCPoly& a, const NCPoly& omega) {
  Engine E = engine_of(F);
  return E.to_ncpoly(E.left(F.base->normalize(a), E.from_ncpoly(omega)));
}

NCPoly fodc_right_mul(const FODC& F, const NCPoly& omega, const NCPoly& a) {
  Engine E = engine_of(F);
  return E.to_ncpoly(E.right(E.from_ncpoly(omega), a));
}

NCPoly fodc_d(const FODC& F, const NCPoly& a) {
  Engine E = engine_of(F);
  return E.to_ncpoly(E.d(a));
}

Report check_fodc_consistency(const FODC& F, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "fodc:" + F.name : suite;
  Engine E = engine_of(F);
  for (const RuleCase& r : rule_cases(*F.base)) {
    const std::string rel = rule_name(r);
    PForm l = E.d_word({r.a, r.b});
    PForm rr = E.d(r.rhs);
    if (l.terms == rr.terms)
      rep.pass(s, "leibniz:" + rel);
    else
      rep.fail(s, "leibniz:" + rel, "d(ab) = " + E.render(l, pname) + ", d(rhs) = " + E.render(rr, pname));
    for (size_t i = 0; i < E.forms.size(); ++i) {
      PForm b = E.basis(static_cast<int>(i));
      PForm lhs = E.right_word(b, {r.a, r.b});
      PForm rhs = E.right(b, r.rhs);
      const std::string id = "bimodule:(" + letter_name(E.forms[i]) + ")" + rel;
      if (lhs.terms == rhs.terms)
        rep.pass(s, id);
      else
        rep.fail(s, id, "(w a)b = " + E.render(lhs, pname) + ", w(ab) = " + E.render(rhs, pname));
    }
  }
  return rep;
}

FODC build_fodc(FODC spec) {
  Engine E = engine_of(spec);
  for (size_t i = 0; i < spec.forms.size(); ++i) {
    if (static_cast<int>(i) == E.theta && spec.inner) continue;
    for (Letter g : spec.base->gens)
      if (!spec.right.count({spec.forms[i], g}))
        throw std::invalid_argument("incomplete table: (" + letter_name(spec.forms[i]) + ")" + letter_name(g));
  }
  for (const RuleCase& r : rule_cases(*spec.base)) {
    for (size_t i = 0; i < E.forms.size(); ++i) {
      PForm b = E.basis(static_cast<int>(i));
      PForm lhs = E.right_word(b, {r.a, r.b});
      PForm rhs = E.right(b, r.rhs);
      if (lhs.terms != rhs.terms)
        throw InconsistentBimodule("(" + letter_name(E.forms[i]) + ")" + rule_name(r), E.render(lhs, pname),
                                   E.render(rhs, pname));
    }
    PForm l = E.d_word({r.a, r.b});
    PForm rr = E.d(r.rhs);
    if (l.terms != rr.terms)
      throw InconsistentBimodule("d(" + rule_name(r) + ")", E.render(l, pname), E.render(rr, pname));
  }
  return spec;
}

// ---- coactions ----

TensorPoly FormCoaction::on_word(const Word& w) const {
  auto it = cache_->find(w);
  if (it != cache_->end()) return it->second;
  std::vector<const Algebra*> legs = side == Side::Right ? std::vector<const Algebra*>{base.get(), H.get()}
                                                          : std::vector<const Algebra*>{H.get(), base.get()};
  TensorPoly acc(legs);
  acc.add({Word{}, Word{}}, Q(1));
  for (Letter l : w) acc = tensor_mul(acc, gen(l));
  cache_->emplace(w, acc);
  return acc;
}

namespace {

TensorPoly relabel(const TensorPoly& t, std::vector<const Algebra*> legs) {
  TensorPoly out(std::move(legs));
  for (const auto& [k, c] : t.terms) out.add(k, c);
  return out;
}

}  // namespace

FormCoaction ubplus_right_coaction(const Q& lambda) {
  FormCoaction C;
  C.name = "KHeis-right-on-Ubplus";
  C.side = Side::Right;
  C.base = build({Family::Ubplus, lambda, 8});
  C.H = build({Family::KHeis, lambda, 8});
  const Algebra* b = C.base.get();
  const Algebra* h = C.H.get();
  C.gen = [b, h](Letter g) { return relabel(coproduct_word(*h, {g}), {b, h}); };
  return C;
}

FormCoaction ubplus_left_coaction(const Q& lambda) {
  FormCoaction C;
  C.name = "KHeis-left-on-Ubplus";
  C.side = Side::Left;
  C.base = build({Family::Ubplus, lambda, 8});
  C.H = build({Family::KHeis, lambda, 8});
  const Algebra* b = C.base.get();
  const Algebra* h = C.H.get();
  C.gen = [b, h](Letter g) {
    TensorPoly t({h, b});
    t.add({Word{}, Word{g}}, Q(1));
    if (g == kY) t.add({Word{kY}, Word{}}, Q(1));
    return t;
  };
  return C;
}

FormCoaction kheis_right_coaction(const Q& lambda) {
  FormCoaction C;
  C.name = "KHeis-right";
  C.side = Side::Right;
  C.base = build({Family::KHeis, lambda, 8});
  C.H = C.base;
  const Algebra* h = C.H.get();
  C.gen = [h](Letter g) { return coproduct_word(*h, {g}); };
  return C;
}

FormCoaction kheis_left_coaction(const Q& lambda) {
  FormCoaction C = kheis_right_coaction(lambda);
  C.name = "KHeis-left";
  C.side = Side::Left;
  return C;
}

std::string covariance_discrepancy(const FODC& F, const FormCoaction& C, Letter form, Letter generator) {
  Engine E = engine_of(F);
  auto img = form_images(E, C);
  return render_tensor(E, C, covariance_defect(E, C, img, E.idx(form), generator));
}

FormTensor covariance_defect_terms(const FODC& F, const FormCoaction& C, Letter form, Letter generator) {
  Engine E = engine_of(F);
  auto img = form_images(E, C);
  FormTensor out;
  for (const auto& [k, c] : covariance_defect(E, C, img, E.idx(form), generator)) {
    const auto& [b, i, h] = k;
    out[{b, E.forms[i], h}] = c.constant_term();
  }
  return out;
}

Report check_covariance(const FODC& F, const FormCoaction& C, const std::string& suite) {
  Report rep;
  const std::string s = suite.empty() ? "covariance:" + F.name + ":" + C.name : suite;
  Engine E = engine_of(F);
  auto img = form_images(E, C);
  for (size_t i = 0; i < E.forms.size(); ++i)
    for (Letter g : F.base->gens) {
      const std::string id = "(" + letter_name(E.forms[i]) + ")" + letter_name(g);
      std::string w = render_tensor(E, C, covariance_defect(E, C, img, static_cast<int>(i), g));
      if (w.empty())
        rep.pass(s, id);
      else
        rep.fail(s, id, w);
    }
  return rep;
}

// ---- built-in calculi ----

namespace {

NCPoly G(Letter l) { return NCPoly::gen(l); }
NCPoly K(const Q& c) { return NCPoly::scalar(c); }

}  // namespace

FODC oeckl_calculus(const Q& lambda) {
  FODC F;
  F.name = "Oeckl(" + qstr(lambda) + ")";
  F.base = build({Family::Ubplus, lambda, 8});
  F.forms = {kdX, kdY};
  F.right[{kdX, kX}] = one_form(G(kX), kdX);
  F.right[{kdX, kY}] = one_form(G(kY), kdX);
  F.right[{kdY, kX}] = one_form(G(kX), kdY) + one_form(K(lambda), kdX);
  F.right[{kdY, kY}] = one_form(G(kY) + K(lambda), kdY);
  return F;
}

FODC fodc_2d_right(const Q& lambda) {
  FODC F;
  F.name = "2d-right(" + qstr(lambda) + ")";
  F.base = build({Family::Ubplus, lambda, 8});
  F.forms = {kdX, kdY};
  const Q h = lambda / 2;
  F.right[{kdX, kX}] = one_form(G(kX), kdX);
  F.right[{kdX, kY}] = one_form(G(kY) - K(h), kdX);
  F.right[{kdY, kX}] = one_form(K(h), kdX) + one_form(G(kX), kdY);
  F.right[{kdY, kY}] = one_form(G(kY) + K(h), kdY);
  return F;
}

FODC fodc_3d_left(const Q& lambda) {
  FODC F;
  F.name = "3d-left(" + qstr(lambda) + ")";
  F.base = build({Family::KHeis, lambda, 8});
  F.forms = {kdX, kdY, kdt};
  const NCPoly X = G(kX), Y = G(kY), t = G(kSmallT);
  F.right[{kdX, kX}] = one_form(X, kdX) + one_form(lambda * X, kdt);
  F.right[{kdX, kY}] = one_form(Y, kdX);
  F.right[{kdX, kSmallT}] = one_form(t, kdX) + one_form(lambda * t, kdt);
  F.right[{kdY, kX}] = one_form(X, kdY) + one_form(K(lambda), kdX);
  F.right[{kdY, kY}] = one_form(Y + K(lambda), kdY);
  F.right[{kdY, kSmallT}] = one_form(t, kdY) + one_form(K(lambda), kdt);
  F.right[{kdt, kX}] = one_form(X, kdt);
  F.right[{kdt, kY}] = one_form(Y, kdt);
  F.right[{kdt, kSmallT}] = one_form(t, kdt);
  return F;
}

FODC fodc_3d_right(const Q& lambda, const Q& g) {
  FODC F;
  F.name = "3d-right(" + qstr(lambda) + ",g=" + qstr(g) + ")";
  F.base = build({Family::KHeis, lambda, 8});
  F.forms = {kdX, kdY, kdt};
  const NCPoly X = G(kX), Y = G(kY), t = G(kSmallT);
  const Q h = lambda / 2;
  F.right[{kdX, kX}] = one_form(X, kdX);
  F.right[{kdX, kY}] = one_form(Y - K(h), kdX);
  F.right[{kdX, kSmallT}] = one_form(t, kdX) + one_form(g * t, kdt);
  F.right[{kdY, kX}] = one_form(K(h), kdX) + one_form(X, kdY);
  F.right[{kdY, kY}] = one_form(Y + K(h), kdY);
  F.right[{kdY, kSmallT}] = one_form(t, kdY) + one_form(K(g), kdt);
  F.right[{kdt, kX}] = one_form(X + (g - lambda) * t, kdt);
  F.right[{kdt, kY}] = one_form(Y + K(g - lambda), kdt);
  F.right[{kdt, kSmallT}] = one_form(t, kdt);
  return F;
}

// ---- classifier ----

ClassifyResult classify(const ClassifySpec& spec) {
  ClassifyResult res;
  const Algebra& B = *spec.base;
  Engine E(B, spec.forms, spec.inner);
  const auto monomials = B.basis(spec.degree);
  int nvar = 0;
  for (size_t i = 0; i < spec.forms.size(); ++i) {
    if (static_cast<int>(i) == E.theta && spec.inner) continue;
    for (Letter g : B.gens) {
      auto fx = spec.fixed.find({spec.forms[i], g});
      if (fx != spec.fixed.end()) {
        for (const auto& [w, c] : fx->second.terms)
          if (word_grade(Word(w.begin(), w.end() - 1)) > spec.degree)
            throw AnsatzTooSmall("fixed entry (" + letter_name(spec.forms[i]) + ")" + letter_name(g) +
                                 " has a coefficient above degree " + std::to_string(spec.degree));
        E.table[{static_cast<int>(i), g}] = E.from_ncpoly(fx->second);
        continue;
      }
      PForm p;
      for (size_t j = 0; j < spec.forms.size(); ++j)
        for (const Word& m : monomials) p.add(m, static_cast<int>(j), MPoly::var(nvar++));
      E.table[{static_cast<int>(i), g}] = p;
    }
  }
  res.unknowns = nvar;

  std::vector<MPoly> linear, nonlinear;
  auto collect = [&](const MPoly& e) {
    if (e.is_zero()) return;
    (e.degree() <= 1 ? linear : nonlinear).push_back(e);
  };
  for (const FormCoaction& C : spec.coactions) {
    auto img = form_images(E, C);
    for (size_t i = 0; i < spec.forms.size(); ++i)
      for (Letter g : B.gens)
        for (const auto& [k, c] : covariance_defect(E, C, img, static_cast<int>(i), g)) collect(c);
  }
  for (const RuleCase& r : rule_cases(B)) {
    PForm l = E.d_word({r.a, r.b});
    l -= E.d(r.rhs);
    for (const auto& [k, c] : l.terms) collect(c);
    for (size_t i = 0; i < spec.forms.size(); ++i) {
      PForm b = E.basis(static_cast<int>(i));
      PForm x = E.right_word(b, {r.a, r.b});
      x -= E.right(b, r.rhs);
      for (const auto& [k, c] : x.terms) collect(c);
    }
  }
  res.linear_equations = static_cast<int>(linear.size());
  res.nonlinear_equations = static_cast<int>(nonlinear.size());

  Substitution sub;
  if (!solve_linear(linear, sub)) {
    res.linear_inconsistent = true;
    return res;
  }
  std::set<int> free_vars;
  for (const auto& [key, p] : E.table)
    for (const auto& [k, c] : p.terms)
      for (int v : c.substitute(sub).vars()) free_vars.insert(v);
  res.free_after_linear = static_cast<int>(free_vars.size());

  std::vector<MPoly> reduced;
  for (const MPoly& e : nonlinear) {
    MPoly r = e.substitute(sub);
    if (!r.is_zero()) reduced.push_back(r);
  }
  PolySolveResult ps = solve_polynomial(reduced);
  res.irrational = ps.irrational;

  std::set<std::string> seen;
  std::vector<FODC> concrete_found;
  for (const Substitution& s : ps.solutions) {
    Substitution full = s;
    for (const auto& [v, e] : sub) full[v] = e.substitute(s);
    Engine S(B, spec.forms, spec.inner);
    bool concrete = true, reaches_theta = false;
    std::set<int> params;
    ClassifyResult::FamilyTable ft;
    for (const auto& [key, p] : E.table) {
      PForm q;
      auto& row = ft[{spec.forms[key.first], key.second}];
      for (const auto& [k, c] : p.terms) {
        MPoly r = c.substitute(full);
        if (r.is_zero()) continue;
        if (!r.is_constant()) concrete = false;
        for (int v : r.vars()) params.insert(v);
        if (k.second == E.theta) reaches_theta = true;
        q.add(k.first, k.second, r);
        row[{k.first, spec.forms[k.second]}] = r;
      }
      S.table[key] = q;
    }
    // Free parameters are shown as p1, p2, ... in order of first unknown.
    std::map<int, int> label;
    for (int v : params) label.emplace(v, static_cast<int>(label.size()) + 1);
    auto nm = [&label](int v) { return "p" + std::to_string(label.at(v)); };
    std::ostringstream os;
    for (const auto& [key, q] : S.table)
      os << "(" << letter_name(spec.forms[key.first]) << ")" << letter_name(key.second) << " = " << S.render(q, nm)
         << "\n";
    if (!seen.insert(os.str()).second) continue;
    if (spec.inner && !reaches_theta) {
      res.non_surjective.push_back(os.str());
    } else if (!concrete) {
      res.families.push_back(os.str());
      res.family_tables.push_back(std::move(ft));
    } else {
      FODC F;
      F.base = spec.base;
      F.forms = spec.forms;
      F.inner = spec.inner;
      for (const auto& [key, q] : S.table) F.right[{spec.forms[key.first], key.second}] = S.to_ncpoly(q);
      concrete_found.push_back(std::move(F));
    }
  }
  for (FODC& F : concrete_found)
    if (family_containing(res, F) < 0) {
      F.name = spec.name + "#" + std::to_string(res.solutions.size() + 1);
      res.solutions.push_back(std::move(F));
    }
  return res;
}

int family_containing(const ClassifyResult& r, const FODC& F) {
  Engine C = engine_of(F);
  for (size_t f = 0; f < r.family_tables.size(); ++f) {
    std::vector<MPoly> eqs;
    std::set<std::pair<Letter, Letter>> rows;
    for (const auto& [key, row] : r.family_tables[f]) rows.insert(key);
    for (const auto& [key, q] : C.table) rows.insert({F.forms[key.first], key.second});
    for (const auto& key : rows) {
      std::map<std::pair<Word, Letter>, MPoly> diff;
      auto it = r.family_tables[f].find(key);
      if (it != r.family_tables[f].end()) diff = it->second;
      auto ct = C.table.find({C.idx(key.first), key.second});
      if (ct != C.table.end())
        for (const auto& [k, c] : ct->second.terms) diff[{k.first, F.forms[k.second]}] -= c;
      for (const auto& [k, c] : diff)
        if (!c.is_zero()) eqs.push_back(c);
    }
    Substitution m;
    try {
      if (solve_linear(eqs, m)) return static_cast<int>(f);
    } catch (const UnsupportedSystem&) {
    } catch (const std::invalid_argument&) {
    }
  }
  return -1;
}

std::vector<std::string> scenario_names() {
  return {"2d-right", "3d-right", "3d-bicovariant", "4d-right-sub2d", "4d-bicovariant"};
}

ClassifySpec scenario(const std::string& name, const Q& lambda, int degree) {
  ClassifySpec S;
  S.name = name;
  S.degree = degree;
  if (name == "2d-right") {
    S.base = build({Family::Ubplus, lambda, 8});
    S.forms = {kdX, kdY};
    S.coactions = {ubplus_right_coaction(lambda)};
    return S;
  }
  auto right = kheis_right_coaction(lambda);
  auto left = kheis_left_coaction(lambda);
  S.base = right.base;
  if (name == "3d-right") {
    S.forms = {kdX, kdY, kdt};
    S.coactions = {right};
    FODC two = fodc_2d_right(lambda);
    for (const auto& [k, v] : two.right) S.fixed[k] = v;
  } else if (name == "3d-bicovariant") {
    S.forms = {kdX, kdY, kdt};
    S.coactions = {right, left};
  } else if (name == "4d-right-sub2d") {
    S.forms = {kdX, kdY, kdt, kTheta};
    S.inner = true;
    S.coactions = {right};
    S.fixed[{kdX, kX}] = one_form(G(kX), kdX);
  } else if (name == "4d-bicovariant") {
    S.forms = {kdX, kdY, kdt, kTheta};
    S.inner = true;
    S.coactions = {right, left};
  } else {
    throw std::invalid_argument("unknown scenario: " + name);
  }
  return S;
}

std::optional<Q> dt_rescaling(const FODC& a, const FODC& b) {
  // Unknown s is variable 0.
  Engine Ea = engine_of(a), Eb = engine_of(b);
  const int dt = Ea.idx(kdt);
  std::vector<MPoly> eqs;
  for (const auto& [key, pa] : Ea.table) {
    auto it = Eb.table.find(key);
    if (it == Eb.table.end()) return std::nullopt;
    std::set<PKey> keys;
    for (const auto& [k, c] : pa.terms) keys.insert(k);
    for (const auto& [k, c] : it->second.terms) keys.insert(k);
    for (const PKey& k : keys) {
      auto fa = pa.terms.find(k);
      auto fb = it->second.terms.find(k);
      MPoly ca = fa == pa.terms.end() ? MPoly() : fa->second;
      MPoly cb = fb == it->second.terms.end() ? MPoly() : fb->second;
      const bool row_dt = key.first == dt, col_dt = k.second == dt;
      if (row_dt == col_dt)
        eqs.push_back(ca - cb);
      else if (col_dt)  // a / s = b
        eqs.push_back(ca - MPoly::var(0) * cb);
      else  // s a = b
        eqs.push_back(MPoly::var(0) * ca - cb);
    }
  }
  Substitution sub;
  if (!solve_linear(eqs, sub)) return std::nullopt;
  Q s = sub.count(0) ? sub[0].constant_term() : Q(1);
  if (is_zero(s)) return std::nullopt;
  return s;
}

std::string render_table(const FODC& F) {
  Engine E = engine_of(F);
  std::ostringstream os;
  for (size_t i = 0; i < F.forms.size(); ++i) {
    if (static_cast<int>(i) == E.theta && F.inner) continue;
    for (Letter g : F.base->gens) {
      auto it = E.table.find({static_cast<int>(i), g});
      if (it == E.table.end()) continue;
      os << "(" << letter_name(F.forms[i]) << ")" << letter_name(g) << " = " << E.render(it->second, pname)
         << "\n";
    }
  }
  return os.str();
}

bool same_table(const FODC& a, const FODC& b) { return render_table(a) == render_table(b); }

}  // namespace cmhopf
