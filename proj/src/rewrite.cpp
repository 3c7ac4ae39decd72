#include "cmhopf/rewrite.hpp"

namespace cmhopf {

std::vector<Divergence> check_local_confluence(const Algebra& A, int* skipped) {
  std::vector<Divergence> out;
  if (skipped) *skipped = 0;
  for (Letter a : A.gens)
    for (Letter b : A.gens) {
      const RuleOut& ab = A.rule_at(a, b);
      if (ab.kind == RuleOut::None) continue;
      for (Letter c : A.gens) {
        const RuleOut& bc = A.rule_at(b, c);
        if (bc.kind == RuleOut::None) continue;
        try {
          if (ab.kind == RuleOut::Overflow) throw TruncationOverflow(ab.overflow);
          if (bc.kind == RuleOut::Overflow) throw TruncationOverflow(bc.overflow);
          NCPoly left = A.normalize(concat(ab.rhs, NCPoly::gen(c)));
          NCPoly right = A.normalize(concat(NCPoly::gen(a), bc.rhs));
          if (left != right) out.push_back({Word{a, b, c}, left, right});
        } catch (const TruncationOverflow&) {
          if (skipped) ++*skipped;
        }
      }
    }
  return out;
}

AlgebraPtr clone_algebra(const AlgebraPtr& base) {
  auto A = std::make_shared<Algebra>();
  A->name = base->name;
  A->lambda = base->lambda;
  A->N = base->N;
  A->gens = base->gens;
  A->rule = base->rule;
  A->owns_extra = base->owns_extra;
  A->eps_gen = base->eps_gen;
  A->antipode_gen = base->antipode_gen;
  if (base->delta_gen) {
    const Algebra* self = A.get();
    auto inner = base->delta_gen;
    A->delta_gen = [self, inner, keep = base](Letter l) {
      TensorPoly t = inner(l);
      for (auto& leg : t.legs) leg = self;
      if (t.legs.empty()) t.legs = {self, self};
      return t;
    };
  }
  return A;
}

AlgebraPtr coopposite(const AlgebraPtr& base) {
  auto A = clone_algebra(base);
  A->name = base->name + "cop";
  if (base->delta_gen) {
    auto inner = A->delta_gen;
    A->delta_gen = [inner](Letter l) { return permute_legs(inner(l), {1, 0}); };
  }
  return A;
}

NCPoly substitute(const NCPoly& p, const std::map<Letter, NCPoly>& images, const Algebra& target) {
  NCPoly out;
  for (const auto& [w, c] : p.terms) {
    NCPoly acc = NCPoly::scalar(c);
    for (Letter l : w) {
      auto it = images.find(l);
      acc = target.mul(acc, it == images.end() ? NCPoly::gen(l) : it->second);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

}  // namespace cmhopf
