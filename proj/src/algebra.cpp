#include "cmhopf/algebra.hpp"

#include <algorithm>

namespace cmhopf {

bool Algebra::contains(Letter l) const {
  if (std::find(gens.begin(), gens.end(), l) != gens.end()) return true;
  return owns_extra && owns_extra(l);
}

const RuleOut& Algebra::rule_at(Letter a, Letter b) const {
  const uint64_t key = (static_cast<uint64_t>(a) << 32) | b;
  auto it = rule_cache_.find(key);
  if (it != rule_cache_.end()) return it->second;
  RuleOut r = rule ? rule(a, b) : RuleOut::none();
  return rule_cache_.emplace(key, std::move(r)).first->second;
}

NCPoly Algebra::normalize(const Word& w) const {
  if (w.empty()) return NCPoly::one();
  auto hit = nf_cache_.find(w);
  if (hit != nf_cache_.end()) return hit->second;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    const RuleOut& r = rule_at(w[i], w[i + 1]);
    if (r.kind == RuleOut::None) continue;
    if (r.kind == RuleOut::Overflow) throw TruncationOverflow(r.overflow);
    NCPoly out;
    for (const auto& [rw, c] : r.rhs.terms) {
      Word nw(w.begin(), w.begin() + i);
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + i + 2, w.end());
      NCPoly sub = normalize(nw);
      sub *= c;
      out += sub;
    }
    nf_cache_.emplace(w, out);
    return out;
  }
  for (Letter l : w)
    if (!contains(l)) throw UnknownGenerator(letter_name(l) + " in " + name);
  NCPoly out = NCPoly::of(w);
  nf_cache_.emplace(w, out);
  return out;
}

NCPoly Algebra::normalize(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms) {
    NCPoly s = normalize(w);
    s *= c;
    out += s;
  }
  return out;
}

NCPoly Algebra::mul(const NCPoly& a, const NCPoly& b) const {
  NCPoly out;
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      NCPoly s = normalize(w);
      s *= cu * cv;
      out += s;
    }
  return out;
}

NCPoly Algebra::commutator(const NCPoly& a, const NCPoly& b) const {
  return mul(a, b) - mul(b, a);
}

bool Algebra::is_normal(const Word& w) const {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (rule_at(w[i], w[i + 1]).kind != RuleOut::None) return false;
  return true;
}

std::vector<std::pair<Letter, Letter>> Algebra::rule_pairs() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter a : gens)
    for (Letter b : gens)
      if (rule_at(a, b).kind != RuleOut::None) out.emplace_back(a, b);
  return out;
}

std::vector<Word> Algebra::basis(int grade_bound) const {
  std::vector<Word> out;
  for (int g = 0; g <= grade_bound; ++g) {
    auto slice = basis_exact(g);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

std::vector<Word> Algebra::basis_exact(int grade) const {
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (Letter l : gens) {
      const int g = letter_grade(l);
      if (g <= 0 || g > left) continue;
      if (!cur.empty() && rule_at(cur.back(), l).kind != RuleOut::None) continue;
      cur.push_back(l);
      rec(left - g);
      cur.pop_back();
    }
  };
  rec(grade);
  return out;
}

}  // namespace cmhopf
