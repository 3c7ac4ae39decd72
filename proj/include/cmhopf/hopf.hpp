#pragma once

#include "cmhopf/algebra.hpp"
#include "cmhopf/report.hpp"

#include <string>

namespace cmhopf {

TensorPoly coproduct(const Algebra& A, const NCPoly& x);
TensorPoly coproduct_word(const Algebra& A, const Word& w);
Q counit(const Algebra& A, const NCPoly& x);
Q counit_word(const Algebra& A, const Word& w);
NCPoly antipode(const Algebra& A, const NCPoly& x);
NCPoly antipode_word(const Algebra& A, const Word& w);

// Delta^k(x) as a rank-(k+1) tensor, bracketed as (id^(k-1) (x) Delta) ... Delta.
TensorPoly iterated_coproduct(const Algebra& A, const NCPoly& x, int k);
// Same, expanding the first leg each time.
TensorPoly iterated_coproduct_left(const Algebra& A, const NCPoly& x, int k);

// Structure maps applied on one leg of a tensor.
TensorPoly coproduct_on_leg(const TensorPoly& t, size_t leg);
TensorPoly counit_on_leg(const TensorPoly& t, size_t leg);
TensorPoly antipode_on_leg(const TensorPoly& t, size_t leg);
// Multiply two adjacent legs living in the same algebra.
TensorPoly multiply_legs(const TensorPoly& t, size_t leg);

struct HopfCheckOptions {
  int grade_bound = 4;
  bool check_rules = true;
};

// Coassociativity, counit and antipode axioms on every normal word of
// grade <= bound, plus well-definedness of Delta, epsilon and S on every
// rewrite rule. Truncation overflows are reported as skips.
Report check_hopf_axioms(const Algebra& A, const HopfCheckOptions& opt,
                         const std::string& suite = {});

// Cyclic group algebra k[Z/n]: a textbook preset for sanity runs.
AlgebraPtr cyclic_group_algebra(int n);

}  // namespace cmhopf
