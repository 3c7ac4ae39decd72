#pragma once

#include "cmhopf/algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmhopf {

struct Divergence {
  Word overlap;
  NCPoly via_left;   // reduce the left pair first
  NCPoly via_right;  // reduce the right pair first
};

// Every overlap abc with rules on ab and bc, reduced both ways. Overlaps
// whose reduction leaves the truncation are counted in `skipped`.
std::vector<Divergence> check_local_confluence(const Algebra& A, int* skipped = nullptr);

// Fresh copy with empty caches; structure maps are rebound to the copy.
AlgebraPtr clone_algebra(const AlgebraPtr& base);

// Same algebra with the flipped coproduct. The antipode is kept, which is
// correct when S^2 = id (commutative or cocommutative inputs).
AlgebraPtr coopposite(const AlgebraPtr& base);

// Letter-wise substitution followed by normalization in `target`.
// Letters without an image map to themselves.
NCPoly substitute(const NCPoly& p, const std::map<Letter, NCPoly>& images, const Algebra& target);

}  // namespace cmhopf
