#pragma once

#include "cmhopf/algebra.hpp"

#include <stdexcept>
#include <string>

namespace cmhopf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": " + what), pos(pos) {}
  size_t pos;
};

// Letter from its printed name: t3, z2, t, z, X, Y, alpha, alpha^-1, alpha[1/2],
// A, beta, dX, dY, dt, theta, g4, f4, delta2.
Letter parse_letter(const std::string& name);

// Rational combination of products of letters. Grammar:
//   sum := term (('+'|'-') term)*;  term := factor (('*'|'/'|juxtaposition) factor)*
//   factor := atom ('^' integer)?;  atom := rational | letter | '(' sum ')'
// Negative powers are accepted for alpha and alpha[q] only. If `A` is given the
// result is normalized there and every letter must belong to it.
NCPoly parse_poly(const std::string& text, const Algebra* A = nullptr);

// Sum of terms "p (x) q (x) ..."; a leg that is itself a sum needs parentheses,
// e.g. "X (x) 1 + Y (x) 2t2" or "1 (x) (3t3 - 2t2^2)".
TensorPoly parse_tensor(const std::string& text, const std::vector<const Algebra*>& legs);

}  // namespace cmhopf
