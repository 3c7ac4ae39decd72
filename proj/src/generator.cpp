#include "cmhopf/generator.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace cmhopf {

namespace {
struct AlphaTable {
  std::vector<Q> slots;
  std::map<Q, uint32_t> index;
};
AlphaTable& alpha_table() {
  static AlphaTable t;
  return t;
}
}  // namespace

Letter alpha_q(const Q& q) {
  if (sgn(q) == 0) throw std::invalid_argument("alpha_0 is the unit, not a letter");
  auto& t = alpha_table();
  auto it = t.index.find(q);
  if (it != t.index.end()) return make_letter(Kind::AlphaQ, it->second);
  uint32_t slot = static_cast<uint32_t>(t.slots.size());
  t.slots.push_back(q);
  t.index.emplace(q, slot);
  return make_letter(Kind::AlphaQ, slot);
}

const Q& alpha_exponent(Letter l) { return alpha_table().slots.at(index_of(l)); }

std::string letter_name(Letter l) {
  const auto i = std::to_string(index_of(l));
  switch (kind_of(l)) {
    case Kind::T: return "t" + i;
    case Kind::SmallT: return "t";
    case Kind::Z: return "z" + i;
    case Kind::SmallZ: return "z";
    case Kind::AlphaQ: return "alpha[" + qstr(alpha_exponent(l)) + "]";
    case Kind::Alpha: return "alpha";
    case Kind::AlphaInv: return "alpha^-1";
    case Kind::BigA: return "A";
    case Kind::Beta: return "beta";
    case Kind::X: return "X";
    case Kind::Y: return "Y";
    case Kind::DX: return "dX";
    case Kind::DY: return "dY";
    case Kind::Dt: return "dt";
    case Kind::Theta: return "theta";
    case Kind::Group: return "g" + i;
    case Kind::Fun: return "f" + i;
    case Kind::DeltaN: return "delta" + i;
  }
  return "?";
}

int letter_grade(Letter l) {
  switch (kind_of(l)) {
    case Kind::T:
    case Kind::Z: return static_cast<int>(index_of(l)) - 1;
    case Kind::DeltaN: return static_cast<int>(index_of(l));
    default: return 1;
  }
}

}  // namespace cmhopf
