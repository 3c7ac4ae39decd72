#include "cmhopf/algebra.hpp"
#include "cmhopf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cmhopf {

int word_grade(const Word& w) {
  int g = 0;
  for (Letter l : w) g += letter_grade(l);
  return g;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const size_t run = j - i;
    if (!out.empty()) out += "*";
    if (kind_of(w[i]) == Kind::AlphaInv) {
      out += "alpha^-" + std::to_string(run);
    } else {
      out += letter_name(w[i]);
      if (run > 1) out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

NCPoly NCPoly::scalar(const Q& c) {
  NCPoly p;
  p.add(Word{}, c);
  return p;
}

NCPoly NCPoly::of(const Word& w, const Q& c) {
  NCPoly p;
  p.add(w, c);
  return p;
}

void NCPoly::add(const Word& w, const Q& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

Q NCPoly::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Q(0) : it->second;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Q& c) {
  if (sgn(c) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& kv : terms) kv.second *= c;
  return *this;
}

NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
NCPoly operator-(NCPoly a) { return a *= Q(-1); }
NCPoly operator*(const Q& c, NCPoly a) { return a *= c; }
NCPoly operator*(NCPoly a, const Q& c) { return a *= c; }

NCPoly concat(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, cu * cv);
    }
  return r;
}

namespace {

std::string coeff_prefix(const Q& c, bool first, bool unit_word) {
  std::string s;
  Q a = abs(c);
  if (first) {
    if (sgn(c) < 0) s += "-";
  } else {
    s += sgn(c) < 0 ? " - " : " + ";
  }
  if (unit_word) return s + qstr(a);
  if (a != 1) s += qstr(a) + "*";
  return s;
}

template <class Key>
std::vector<std::pair<Key, Q>> display_order(const std::map<Key, Q>& terms,
                                             size_t (*len)(const Key&)) {
  std::vector<std::pair<Key, Q>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
    return len(x.first) > len(y.first);
  });
  return v;
}

size_t word_len(const Word& w) { return w.size(); }
size_t tuple_len(const std::vector<Word>& k) {
  size_t n = 0;
  for (const auto& w : k) n += w.size();
  return n;
}

}  // namespace

std::string render(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : display_order<Word>(p.terms, word_len)) {
    out += coeff_prefix(c, first, w.empty());
    if (!w.empty()) out += render_word(w);
    first = false;
  }
  return out;
}

TensorPoly TensorPoly::scalar(const Q& c) {
  TensorPoly t;
  t.add({}, c);
  return t;
}

TensorPoly TensorPoly::from_poly(const NCPoly& p, const Algebra* leg) {
  TensorPoly t({leg});
  for (const auto& [w, c] : p.terms) t.add({w}, c);
  return t;
}

void TensorPoly::add(const std::vector<Word>& k, const Q& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

Q TensorPoly::scalar_value() const {
  if (rank() != 0) throw RankMismatch();
  auto it = terms.find({});
  return it == terms.end() ? Q(0) : it->second;
}

NCPoly TensorPoly::to_poly() const {
  if (rank() != 1) throw RankMismatch();
  NCPoly p;
  for (const auto& [k, c] : terms) p.add(k[0], c);
  return p;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  if (legs.empty() && terms.empty()) legs = o.legs;
  if (o.rank() != rank()) throw RankMismatch();
  for (const auto& [k, c] : o.terms) add(k, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  if (legs.empty() && terms.empty()) legs = o.legs;
  if (o.rank() != rank()) throw RankMismatch();
  for (const auto& [k, c] : o.terms) add(k, -c);
  return *this;
}

TensorPoly& TensorPoly::operator*=(const Q& c) {
  if (sgn(c) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& kv : terms) kv.second *= c;
  return *this;
}

TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
TensorPoly operator*(const Q& c, TensorPoly a) { return a *= c; }

TensorPoly tensor(const TensorPoly& a, const TensorPoly& b) {
  std::vector<const Algebra*> legs = a.legs;
  legs.insert(legs.end(), b.legs.begin(), b.legs.end());
  TensorPoly r(legs);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      std::vector<Word> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(k, ca * cb);
    }
  return r;
}

TensorPoly tensor(const NCPoly& a, const Algebra* la, const NCPoly& b, const Algebra* lb) {
  return tensor(TensorPoly::from_poly(a, la), TensorPoly::from_poly(b, lb));
}

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b) {
  if (a.rank() != b.rank()) throw RankMismatch();
  for (size_t i = 0; i < a.rank(); ++i)
    if (a.legs[i] != b.legs[i]) throw RankMismatch();
  TensorPoly r(a.legs);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      // Expand the product leg by leg.
      std::vector<std::pair<std::vector<Word>, Q>> acc{{{}, ca * cb}};
      for (size_t i = 0; i < a.rank(); ++i) {
        Word w = ka[i];
        w.insert(w.end(), kb[i].begin(), kb[i].end());
        NCPoly nf = a.legs[i]->normalize(w);
        std::vector<std::pair<std::vector<Word>, Q>> next;
        next.reserve(acc.size() * nf.size());
        for (const auto& [k, c] : acc)
          for (const auto& [u, cu] : nf.terms) {
            auto k2 = k;
            k2.push_back(u);
            next.emplace_back(std::move(k2), c * cu);
          }
        acc = std::move(next);
      }
      for (const auto& [k, c] : acc) r.add(k, c);
    }
  return r;
}

TensorPoly map_leg(const TensorPoly& t, size_t leg,
                   const std::function<TensorPoly(const Word&)>& f) {
  if (leg >= t.rank()) throw RankMismatch();
  TensorPoly r;
  bool legs_set = false;
  for (const auto& [k, c] : t.terms) {
    TensorPoly img = f(k[leg]);
    if (!legs_set) {
      r.legs.assign(t.legs.begin(), t.legs.begin() + leg);
      r.legs.insert(r.legs.end(), img.legs.begin(), img.legs.end());
      r.legs.insert(r.legs.end(), t.legs.begin() + leg + 1, t.legs.end());
      legs_set = true;
    }
    for (const auto& [ki, ci] : img.terms) {
      std::vector<Word> nk(k.begin(), k.begin() + leg);
      nk.insert(nk.end(), ki.begin(), ki.end());
      nk.insert(nk.end(), k.begin() + leg + 1, k.end());
      r.add(nk, c * ci);
    }
  }
  if (!legs_set) {
    // Empty input: keep a sensible leg list by probing the unit word.
    TensorPoly img = f(Word{});
    r.legs.assign(t.legs.begin(), t.legs.begin() + leg);
    r.legs.insert(r.legs.end(), img.legs.begin(), img.legs.end());
    r.legs.insert(r.legs.end(), t.legs.begin() + leg + 1, t.legs.end());
  }
  return r;
}

TensorPoly permute_legs(const TensorPoly& t, const std::vector<size_t>& perm) {
  if (perm.size() != t.rank()) throw RankMismatch();
  TensorPoly r;
  for (size_t i = 0; i < perm.size(); ++i) r.legs.push_back(t.legs[perm[i]]);
  for (const auto& [k, c] : t.terms) {
    std::vector<Word> nk;
    for (size_t i : perm) nk.push_back(k[i]);
    r.add(nk, c);
  }
  return r;
}

std::string render(const TensorPoly& t) {
  if (t.is_zero()) return "0";
  if (t.rank() == 0) return qstr(t.scalar_value());
  std::string out;
  bool first = true;
  for (const auto& [k, c] : display_order<std::vector<Word>>(t.terms, tuple_len)) {
    std::string body;
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) body += "(x)";
      body += render_word(k[i]);
    }
    Q a = abs(c);
    out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (a != 1) out += qstr(a) + "*";
    out += body;
    first = false;
  }
  return out;
}

}  // namespace cmhopf
