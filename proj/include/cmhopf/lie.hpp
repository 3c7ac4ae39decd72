#pragma once

#include "cmhopf/algebra.hpp"
#include "cmhopf/report.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmhopf {

// Linear combination of basis symbols.
using LieVec = std::map<std::string, Q>;

LieVec lie_vec(const std::string& symbol, const Q& c = Q(1));
LieVec& lie_add(LieVec& into, const LieVec& v, const Q& c = Q(1));
std::string render(const LieVec& v);

// Finite-dimensional Lie algebra over Q by structure constants. Brackets of
// basis symbols may name symbols outside the basis; closed() reports that.
struct LieAlgebra {
  std::string name;
  std::vector<std::string> basis;
  std::map<std::pair<std::string, std::string>, LieVec> table;  // stored for both orders

  void set(const std::string& a, const std::string& b, const LieVec& v);  // also sets [b,a] = -v
  LieVec bracket(const std::string& a, const std::string& b) const;
  LieVec bracket(const LieVec& u, const LieVec& v) const;
  // Brackets leaving the span of the basis, as "[a,b] = ..." witnesses.
  std::vector<std::string> non_closure() const;
};

LieAlgebra lie_bplus(const Q& lambda = Q(1));  // [Y,X] = lambda X
LieAlgebra lie_line();                          // abelian on z
LieAlgebra lie_sl2();                           // [H,E] = 2E, [H,F] = -2F, [E,F] = H
LieAlgebra lie_abelian(int dim);
// d0 restricted to z_n for n in `indices`: [z_m, z_n] = (n - m) z_{m+n-1}.
LieAlgebra lie_d0(const std::vector<int>& indices);

Report check_jacobi(const LieAlgebra& g, const std::string& suite = {});

// Left action of `right_alg` on `left_alg` (xi |> x) and right action of
// `left_alg` on `right_alg` (xi <| x), on basis symbols.
struct MatchedPair {
  LieAlgebra left_alg;   // b+
  LieAlgebra right_alg;  // r
  std::map<std::pair<std::string, std::string>, LieVec> left_action;   // (xi, x) -> xi |> x
  std::map<std::pair<std::string, std::string>, LieVec> right_action;  // (xi, x) -> xi <| x

  LieVec act_left(const LieVec& xi, const LieVec& x) const;
  LieVec act_right(const LieVec& xi, const LieVec& x) const;
};

class NotMatched : public std::runtime_error {
 public:
  explicit NotMatched(const std::string& w) : std::runtime_error("not a matched pair: " + w) {}
};

// z |> X = 2Y, z |> Y = 0, z <| X = 0, z <| Y = z.
MatchedPair sl2_matched_pair();
// The same tables recomputed: z |> x = sum x^(1) <x^(2), z> through the k[t]
// coaction on U(b+), and <t^n, z <| x> = <x |> t^n, z> through the action on
// k[t], with <t^m, z^n> = 2^m [m = n].
MatchedPair derived_sl2_matched_pair();
// x -> sum x^(1) <x^(2), z> on U(b+) at lambda = 1.
NCPoly coaction_contraction(const NCPoly& x);

// Both actions are Lie actions and the two compatibility conditions hold, on
// all basis pairs/triples.
Report check_matched_pair(const MatchedPair& M, const std::string& suite = {});

// Bracket on the direct sum: [x,y] and [xi,eta] as given, [xi,x] = xi <| x + xi |> x.
LieAlgebra build_double(const MatchedPair& M);

struct Sl2Iso {
  bool found = false;
  std::string reason;                   // when not found
  std::map<std::string, LieVec> image;  // basis symbol -> combination of E, F, H
};
// A bracket-preserving bijection onto sl2, found from an ad-semisimple element
// with rational eigenvalues {0, mu, -mu}.
Sl2Iso iso_to_sl2(const LieAlgebra& g);
// Every bracket of g maps to the bracket of images.
Report check_lie_morphism(const LieAlgebra& g, const LieAlgebra& target, const std::map<std::string, LieVec>& image,
                          const std::string& suite = {});

// ---- group level: B+ = {(a,b) : a > 0} and R, inside SL2 ----

struct BPoint {
  Q a, b;
};
struct GroupSample {
  Q c;
  BPoint g;
};

class SingularSample : public std::runtime_error {
 public:
  explicit SingularSample(const std::string& w) : std::runtime_error("singular sample: " + w) {}
};

// (a,b)(a',b') = (aa', ab' + b).
BPoint bplus_mul(const BPoint& x, const BPoint& y);
// c |> (a,b) = (a/(1-bc)^2, b/(1-bc)); throws SingularSample at 1 - bc = 0.
BPoint line_act(const Q& c, const BPoint& g);
// c <| (a,b) = ac/(1-bc).
Q line_react(const Q& c, const BPoint& g);

// Per sample: embed(c) embed(a,b) = embed(c |> (a,b)) embed(c <| (a,b)) with
// principal square roots (exact for 1 - bc > 0, up to -I for 1 - bc < 0), and
// the action and matched-pair laws against the other samples' c and g.
Report group_actions_check(const std::vector<GroupSample>& samples, const std::string& suite = {});

// `n` samples with small random rational entries, a > 0, 1 - bc != 0.
std::vector<GroupSample> random_group_samples(int n, unsigned seed);
// One "c a b" triple of rationals per line; '#' starts a comment.
std::vector<GroupSample> parse_group_samples(const std::string& text);

}  // namespace cmhopf
