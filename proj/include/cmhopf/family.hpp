#pragma once

#include "cmhopf/algebra.hpp"
#include "cmhopf/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmhopf {

enum class Family {
  FD0,        // k[D0] on t_n
  Ud0,        // U(d0) on z_n
  Ubplus,     // U_lambda(b+) on X, Y
  FBplus,     // F[B+] on alpha, alpha^-1, beta
  HCM,        // H_CM^lambda
  UCM,        // U_CM^lambda
  KHeis,      // k_lambda[Heis] on t, X, Y
  UHeis,      // U_lambda(heis) on z, alpha, beta
  FBplusExt,  // U(d0) bicross F[B+]_lambda: z_n, alpha_q, A, beta
  FBplusLam,  // F[B+]_lambda on alpha_q, A, beta
  HCMleft,    // left-handed H_CM
  Kt,         // k[t], t primitive
  Uz,         // U(z), z primitive
};

struct AlgebraTag {
  Family family = Family::HCM;
  Q lambda{1};
  int N = 8;
};

class InvalidTag : public std::runtime_error {
 public:
  explicit InvalidTag(const std::string& w) : std::runtime_error("invalid tag: " + w) {}
};

std::string family_name(Family f);
Family parse_family(const std::string& s);
std::string tag_name(const AlgebraTag& t);
bool family_has_lambda(Family f);
bool family_is_truncated(Family f);

// Inverse of tag_name: "HCM(1/2)[N=8]", "FD0[N=6]", "Ubplus(2)".
AlgebraTag parse_tag(const std::string& text);

AlgebraPtr build(const AlgebraTag& tag);
// U(d0) with [z_m, z_n] = (m - n) z_{m+n-1}: the z-block of U_CM.
AlgebraPtr build_ud0_opposite(int N);

// Delta(t_n) leg polynomials: sum over compositions i_1+..+i_k = n of t_i1..t_ik.
NCPoly composition_sum(int n, int k);
// Antipode of t_n from the composition-sum closed formula.
NCPoly antipode_t_closed(int n);
// Antipode of t_n from the antipode axiom solved degree by degree.
NCPoly antipode_t_recursive(int n, const Algebra& fd0);

// delta_n as a polynomial in the t_n (exact, commutative normal form).
NCPoly delta_expr(int n, const Algebra& P);
// (n+1) t_{n+1} ... returns t_n as a polynomial in delta symbols.
NCPoly t_expr(int n);
Letter delta_symbol(int n);

// A map defined on generators, extended multiplicatively.
struct HopfMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  std::map<Letter, NCPoly> images;
  NCPoly apply(const NCPoly& x) const;
  TensorPoly apply(const TensorPoly& t) const;
};

struct MorphismCheckOptions {
  bool check_pairs = true;
};

// Relation preservation and Delta/eps/S intertwining on generators and on
// products of two generators; `inverse` (if given) is checked on composites.
Report check_morphism(const HopfMorphism& m, const HopfMorphism* inverse,
                      const std::string& suite, const MorphismCheckOptions& opt = {});

// Scaling isomorphisms H_CM -> H_CM^lambda and U_CM -> U_CM^lambda and inverses.
HopfMorphism hcm_scaling(const AlgebraPtr& hcm1, const AlgebraPtr& hcml, const Q& lambda);
HopfMorphism ucm_scaling(const AlgebraPtr& ucm1, const AlgebraPtr& ucml, const Q& lambda);

// Heisenberg quotient of H_CM^lambda by the ideal generated by t_n - t_2^(n-1).
struct HeisQuotient {
  AlgebraPtr hcm;
  AlgebraPtr kheis;
  HopfMorphism quotient_map;  // t_n -> (t/2)^(n-1)
  // Reduction modulo the ideal: substitute t_n -> t_2^(n-1) and normalize.
  NCPoly reduce(const NCPoly& x) const;
  bool in_ideal(const NCPoly& x) const { return reduce(x).is_zero(); }
  NCPoly tilde(int n) const;
  // Delta(tilde t_n) written as sum h_i (x) i_i + j_k (x) h_k with i, j in I.
  struct Witness {
    TensorPoly ideal_right;  // H (x) I part
    TensorPoly ideal_left;   // I (x) H part
  };
  Witness coproduct_witness(int n) const;
};

HeisQuotient heis_quotient(const AlgebraPtr& hcm);

std::optional<int> grade(const NCPoly& x);

}  // namespace cmhopf
