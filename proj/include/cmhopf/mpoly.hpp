#pragma once

#include "cmhopf/rational.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmhopf {

// Commutative monomial: sorted (variable, exponent) pairs.
using Mono = std::vector<std::pair<int, int>>;

// Polynomial over Q in commuting unknowns, indexed by integers.
class MPoly {
 public:
  std::map<Mono, Q> terms;

  MPoly() = default;
  static MPoly constant(const Q& c);
  static MPoly var(int v, const Q& c = Q(1));

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Q constant_term() const;
  int degree() const;
  std::set<int> vars() const;
  // True when every term has v to power at most 1: self = coeff * v + rest.
  bool linear_in(int v, MPoly& coeff, MPoly& rest) const;

  MPoly substitute(int v, const MPoly& value) const;
  MPoly substitute(const std::map<int, MPoly>& s) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Q& c);
  bool operator==(const MPoly& o) const { return terms == o.terms; }
  bool operator!=(const MPoly& o) const { return terms != o.terms; }
  bool operator<(const MPoly& o) const { return terms < o.terms; }
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator-(MPoly a);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Q& c, MPoly a);

std::string render(const MPoly& p, const std::function<std::string(int)>& name);

// Substitution map from eliminated unknowns to expressions in the free ones.
using Substitution = std::map<int, MPoly>;

// Solve a system of polynomials of degree <= 1. Returns false when
// inconsistent; otherwise fills `out` with pivot -> affine expression in the
// remaining unknowns.
bool solve_linear(const std::vector<MPoly>& eqs, Substitution& out);

struct PolySolveResult {
  std::vector<Substitution> solutions;  // each fully reduced
  // Branches abandoned because a factor had no rational root.
  std::vector<std::string> irrational;
};

class UnsupportedSystem : public std::runtime_error {
 public:
  explicit UnsupportedSystem(const std::string& w) : std::runtime_error("unsupported polynomial system: " + w) {}
};

// Rational solutions of a polynomial system by elimination of variables that
// occur linearly, splitting off monomial factors, and rational roots of
// univariate equations. Throws UnsupportedSystem when none applies.
PolySolveResult solve_polynomial(const std::vector<MPoly>& eqs, const Substitution& start = {});

// Rational roots of a univariate polynomial given by coefficients c[0] + c[1] x + ...
std::vector<Q> rational_roots(std::vector<Q> c);

}  // namespace cmhopf
