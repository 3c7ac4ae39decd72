#pragma once

#include "cmhopf/poly.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cmhopf {

class TruncationOverflow : public std::runtime_error {
 public:
  explicit TruncationOverflow(int n)
      : std::runtime_error("truncation overflow: index " + std::to_string(n)), index(n) {}
  int index;
};

class UnknownGenerator : public std::runtime_error {
 public:
  explicit UnknownGenerator(const std::string& what)
      : std::runtime_error("unknown generator: " + what) {}
};

class RankMismatch : public std::runtime_error {
 public:
  RankMismatch() : std::runtime_error("tensor rank or leg mismatch") {}
};

// Outcome of looking up the adjacent pair (a, b).
struct RuleOut {
  enum Kind { None, Rewrite, Overflow } kind = None;
  NCPoly rhs;
  int overflow = 0;

  static RuleOut none() { return {}; }
  static RuleOut rewrite(NCPoly p) { return {Rewrite, std::move(p), 0}; }
  static RuleOut over(int n) { return {Overflow, {}, n}; }
};

// A presented algebra: letters, adjacent-pair rewrite rules and, when it is
// a Hopf algebra, generator-level structure maps.
class Algebra {
 public:
  std::string name;
  Q lambda{1};
  int N = 0;
  std::vector<Letter> gens;

  std::function<RuleOut(Letter, Letter)> rule;
  // Letters outside `gens` that still belong (alpha_q).
  std::function<bool(Letter)> owns_extra;

  std::function<TensorPoly(Letter)> delta_gen;
  std::function<Q(Letter)> eps_gen;
  std::function<NCPoly(Letter)> antipode_gen;

  bool has_hopf() const { return static_cast<bool>(delta_gen); }
  bool contains(Letter l) const;

  const RuleOut& rule_at(Letter a, Letter b) const;
  NCPoly normalize(const Word& w) const;
  NCPoly normalize(const NCPoly& p) const;
  NCPoly mul(const NCPoly& a, const NCPoly& b) const;
  NCPoly commutator(const NCPoly& a, const NCPoly& b) const;
  bool is_normal(const Word& w) const;

  // Generator pairs carrying a rule (rewrites and overflow markers).
  std::vector<std::pair<Letter, Letter>> rule_pairs() const;
  // Normal words over `gens` with grade <= bound, in canonical order.
  std::vector<Word> basis(int grade_bound) const;
  std::vector<Word> basis_exact(int grade) const;

  // Memo tables for structure maps (filled by hopf.cpp).
  mutable std::unordered_map<Word, TensorPoly, WordHash> delta_cache;
  mutable std::unordered_map<Word, NCPoly, WordHash> antipode_cache;

 private:
  mutable std::unordered_map<uint64_t, RuleOut> rule_cache_;
  mutable std::unordered_map<Word, NCPoly, WordHash> nf_cache_;
};

using AlgebraPtr = std::shared_ptr<Algebra>;

}  // namespace cmhopf
