#pragma once

#include "cmhopf/rational.hpp"

#include <cstdint>
#include <string>

namespace cmhopf {

// Generator families. The numeric order doubles as the block order of
// normal words: t-block, then X, then Y; z-block, then alpha, then beta.
enum class Kind : uint8_t {
  T = 1,      // t_n, n >= 2
  SmallT,     // t = 2 t_2 in the Heisenberg quotient
  Z,          // z_n, n >= 2
  SmallZ,     // z = z_2 in the Heisenberg subalgebra
  AlphaQ,     // alpha_q, q rational and nonzero
  Alpha,
  AlphaInv,
  BigA,
  Beta,
  X,
  Y,
  DX,
  DY,
  Dt,
  Theta,
  Group,      // group element of a finite group
  Fun,        // delta function on a finite group
  DeltaN,     // delta_n symbol of the Connes-Moscovici presentation
};

// A letter packs (kind, index) into 32 bits; alpha_q stores an interned
// slot for its rational exponent.
using Letter = uint32_t;

constexpr Letter make_letter(Kind k, uint32_t idx = 0) {
  return (static_cast<uint32_t>(k) << 24) | (idx & 0xFFFFFFu);
}
constexpr Kind kind_of(Letter l) { return static_cast<Kind>(l >> 24); }
constexpr uint32_t index_of(Letter l) { return l & 0xFFFFFFu; }

inline Letter tgen(int n) { return make_letter(Kind::T, n); }
inline Letter zgen(int n) { return make_letter(Kind::Z, n); }
constexpr Letter kX = make_letter(Kind::X);
constexpr Letter kY = make_letter(Kind::Y);
constexpr Letter kAlpha = make_letter(Kind::Alpha);
constexpr Letter kAlphaInv = make_letter(Kind::AlphaInv);
constexpr Letter kBeta = make_letter(Kind::Beta);
constexpr Letter kBigA = make_letter(Kind::BigA);
constexpr Letter kSmallT = make_letter(Kind::SmallT);
constexpr Letter kSmallZ = make_letter(Kind::SmallZ);
constexpr Letter kTheta = make_letter(Kind::Theta);
constexpr Letter kdX = make_letter(Kind::DX);
constexpr Letter kdY = make_letter(Kind::DY);
constexpr Letter kdt = make_letter(Kind::Dt);

Letter alpha_q(const Q& q);
const Q& alpha_exponent(Letter l);

std::string letter_name(Letter l);
// Default grade: |t_n| = |z_n| = n - 1, every other generator 1.
int letter_grade(Letter l);

}  // namespace cmhopf
