#pragma once

#include "cmhopf/generator.hpp"
#include "cmhopf/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cmhopf {

using Word = std::vector<Letter>;

struct WordHash {
  size_t operator()(const Word& w) const noexcept {
    size_t h = 1469598103934665603ull;
    for (Letter l : w) h = (h ^ l) * 1099511628211ull;
    return h;
  }
};

int word_grade(const Word& w);
std::string render_word(const Word& w);

// Rational linear combination of words; never stores a zero coefficient.
class NCPoly {
 public:
  std::map<Word, Q> terms;

  NCPoly() = default;
  static NCPoly scalar(const Q& c);
  static NCPoly one() { return scalar(Q(1)); }
  static NCPoly of(const Word& w, const Q& c = Q(1));
  static NCPoly gen(Letter l, const Q& c = Q(1)) { return of(Word{l}, c); }

  void add(const Word& w, const Q& c);
  bool is_zero() const { return terms.empty(); }
  Q coeff(const Word& w) const;
  Q constant() const { return coeff(Word{}); }
  size_t size() const { return terms.size(); }

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Q& c);
  bool operator==(const NCPoly& o) const { return terms == o.terms; }
  bool operator!=(const NCPoly& o) const { return terms != o.terms; }
};

NCPoly operator+(NCPoly a, const NCPoly& b);
NCPoly operator-(NCPoly a, const NCPoly& b);
NCPoly operator-(NCPoly a);
NCPoly operator*(const Q& c, NCPoly a);
NCPoly operator*(NCPoly a, const Q& c);
// Free (unnormalized) concatenation product.
NCPoly concat(const NCPoly& a, const NCPoly& b);

std::string render(const NCPoly& p);

class Algebra;

// Rank-k tensor of words; leg i lives in legs[i]. Rank 0 is a scalar.
class TensorPoly {
 public:
  std::vector<const Algebra*> legs;
  std::map<std::vector<Word>, Q> terms;

  TensorPoly() = default;
  explicit TensorPoly(std::vector<const Algebra*> l) : legs(std::move(l)) {}
  static TensorPoly scalar(const Q& c);
  static TensorPoly from_poly(const NCPoly& p, const Algebra* leg);

  size_t rank() const { return legs.size(); }
  void add(const std::vector<Word>& k, const Q& c);
  bool is_zero() const { return terms.empty(); }
  Q scalar_value() const;
  NCPoly to_poly() const;

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  TensorPoly& operator*=(const Q& c);
  bool operator==(const TensorPoly& o) const { return terms == o.terms; }
  bool operator!=(const TensorPoly& o) const { return terms != o.terms; }
};

TensorPoly operator+(TensorPoly a, const TensorPoly& b);
TensorPoly operator-(TensorPoly a, const TensorPoly& b);
TensorPoly operator*(const Q& c, TensorPoly a);

// a (x) b with the legs of a followed by the legs of b.
TensorPoly tensor(const TensorPoly& a, const TensorPoly& b);
TensorPoly tensor(const NCPoly& a, const Algebra* la, const NCPoly& b, const Algebra* lb);
// Componentwise product, each leg normalized in its own algebra.
TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b);

// Replace leg `leg` by the rank-r tensor f(word); r may be 0.
TensorPoly map_leg(const TensorPoly& t, size_t leg,
                   const std::function<TensorPoly(const Word&)>& f);
// Swap two legs.
TensorPoly permute_legs(const TensorPoly& t, const std::vector<size_t>& perm);

std::string render(const TensorPoly& t);

}  // namespace cmhopf
