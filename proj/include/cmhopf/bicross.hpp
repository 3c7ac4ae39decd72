#pragma once

#include "cmhopf/algebra.hpp"
#include "cmhopf/pairing.hpp"
#include "cmhopf/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmhopf {

// LR: A >|< H with H acting on A from the left and A coacting on H from the
// right (coaction legs H (x) A). RL: H >|< A with H acting on A from the right
// and A coacting on H from the left (coaction legs A (x) H).
enum class Orientation { LR, RL };

class IncompatibleData : public std::runtime_error {
 public:
  explicit IncompatibleData(const std::string& w) : std::runtime_error("incompatible data: " + w) {}
};

struct BicrossData {
  std::string name;
  Orientation orientation = Orientation::LR;
  AlgebraPtr A;  // acted on, coacting
  AlgebraPtr H;  // acting, coacted

  // Generator-level tables. The action returns h |> a (LR) or a <| h (RL) for
  // letters h of H and a of A; nullopt means eps(h) a. The coaction returns the
  // image of a letter of H; nullopt means h (x) 1 (LR) or 1 (x) h (RL).
  std::function<std::optional<NCPoly>(Letter h, Letter a)> action;
  std::function<std::optional<TensorPoly>(Letter h)> coaction;

  BicrossData() : cache_(std::make_shared<Cache>()) {}

  // Copy with one table entry replaced (mutation tests).
  BicrossData with_action(Letter h, Letter a, const NCPoly& image) const;
  BicrossData with_coaction(Letter h, const TensorPoly& image) const;

  struct Cache {
    std::map<std::pair<Word, Word>, NCPoly> act;
    std::map<Word, TensorPoly> coact;
  };
  std::shared_ptr<Cache> cache_;
};

// h |> a (LR) or a <| h (RL), extended by the module-algebra law and
// (gh) |> a = g |> (h |> a), resp. a <| (gh) = (a <| g) <| h. Normalized in A.
NCPoly extend_action(const BicrossData& D, const NCPoly& h, const NCPoly& a);
// Coaction extended to products through the coaction-product compatibility, or its mirror.
TensorPoly extend_coaction(const BicrossData& D, const NCPoly& h);

// Conditions 1-3 and the module-algebra / comodule-coalgebra axioms on
// generators and normal products of two generators of H against normal words
// of A up to `grade_bound`.
Report check_compatibility(const BicrossData& D, int grade_bound = 3, const std::string& suite = {});

// Presentation on the union of generators: A and H relations, cross relations
// from the smash product, coproduct through the coaction. Throws
// IncompatibleData if check_compatibility fails at `grade_bound`.
AlgebraPtr build_bicrossproduct(const BicrossData& D, int grade_bound = 2);

// Identity-on-generators comparison. Always checks relations and Delta/eps/S
// through check_morphism in both directions; `strict` also requires equal normal
// forms of every generator pair and identical Delta/S tables on generators.
Report compare_presentations(const Algebra& built, const Algebra& reference, bool strict,
                             const std::string& suite);

// Data for the algebras of the family.
BicrossData hcm_data(const Q& lambda, int N);        // k[D0]^cop >|< U(b+), LR
BicrossData ucm_data(const Q& lambda, int N);        // U(d0) >|< F[B+], RL
BicrossData kheis_data(const Q& lambda);             // k[t] >|< U(b+), LR
BicrossData uheis_data(const Q& lambda);             // U(z) >|< F[B+], RL
BicrossData fbplus_ext_data(const Q& lambda, int N); // U(d0) >|< F[B+]_lambda, RL
BicrossData hcm_left_data(const Q& lambda, int N);   // U(b+) >|< k[D0], RL

// Declarative text form, one entry per line ('#' starts a comment):
//   name: HCM
//   orientation: LR
//   A: FD0[N=8] cop
//   H: Ubplus(1)
//   act X t2 = 3t3 - 2t2^2
//   coact X = X (x) 1 + Y (x) 2t2
// Unlisted action pairs act by the counit; unlisted coaction entries are trivial.
BicrossData parse_bicross_data(const std::string& text);

// ---- finite groups ----

struct FiniteGroup {
  std::vector<std::vector<int>> table;  // table[a][b] = ab
  int identity = 0;
  int size() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
};

FiniteGroup symmetric_group(int n);
FiniteGroup cyclic_group(int n);
std::vector<int> generated_subgroup(const FiniteGroup& X, const std::vector<int>& gens);

class NotAFactorisation : public std::runtime_error {
 public:
  explicit NotAFactorisation(const std::string& w) : std::runtime_error("not a factorisation: " + w) {}
};

struct FiniteBicross {
  BicrossData lr_data;  // k[M] >|< kG
  BicrossData rl_data;  // kM >|< k[G]
  AlgebraPtr lr, rl;
  PairingPtr pairing;   // <delta_m g, m' delta_g'> = [m = m'][g = g']
};

// X = G M with G, M subgroups (element lists). Throws NotAFactorisation when the
// multiplication map G x M -> X is not bijective or a list is not a subgroup.
FiniteBicross finite_group_bicross(const FiniteGroup& X, const std::vector<int>& G,
                                   const std::vector<int>& M);

}  // namespace cmhopf
