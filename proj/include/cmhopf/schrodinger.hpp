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

namespace cmhopf {

class OutOfHypothesis : public std::runtime_error {
 public:
  explicit OutOfHypothesis(const std::string& w) : std::runtime_error("out of hypothesis: " + w) {}
};

// Left action of `actor` on the algebra `space` = U_lambda(b+), given on
// generators, together with the right coaction of `coactor` on `space` and the
// pairing actor x coactor that should make them dual.
struct SchrodingerData {
  std::string name;
  AlgebraPtr actor, space, coactor;
  PairingPtr pairing;
  // u |> phi for generator letters; must cover every generator pair.
  std::function<NCPoly(Letter u, Letter phi)> table;
  // The coaction is the coproduct of `coactor` restricted to the space,
  // conjugated by the automorphism X -> x_scale X of the space.
  Q x_scale{1};

  SchrodingerData() : cache_(std::make_shared<Cache>()) {}
  struct Cache {
    std::map<std::pair<Word, Word>, NCPoly> act;
  };
  std::shared_ptr<Cache> cache_;
};

// U_CM^lambda on U_lambda(b+), coacted by H_CM^lambda.
SchrodingerData schrodinger_ucm(const Q& lambda, int N);
// U_lambda(heis) on U_lambda(b+), coacted by k_lambda[Heis]. This is the table
// dual to the restricted coaction under the fixed pairing. Throws
// OutOfHypothesis at lambda = 0.
SchrodingerData schrodinger_uheis(const Q& lambda);
// Same actor with the table z |> X = 2 lambda Y, beta |> X = lambda; dual to the
// coaction conjugated by X -> lambda X.
SchrodingerData schrodinger_uheis_scaled_table(const Q& lambda);

NCPoly schrodinger_act(const SchrodingerData& D, const NCPoly& u, const NCPoly& phi);
// Legs: space (x) coactor.
TensorPoly schrodinger_coact(const SchrodingerData& D, const NCPoly& phi);
// sum phi^(1) <u, phi^(2)>
NCPoly act_through_coaction(const SchrodingerData& D, const NCPoly& u, const NCPoly& phi);

struct SchrodingerCheckOptions {
  int grade_bound = 4;    // on words of the space
  int actor_length = 2;   // actor words up to this many letters
  bool duality = true;
};

// Module axiom on actor relations, module-algebra law, comodule axioms,
// multiplicativity of the coaction and action/coaction duality.
Report check_schrodinger(const SchrodingerData& D, const SchrodingerCheckOptions& opt = {},
                         const std::string& suite = {});

// The H_CM^lambda coaction pushed through the quotient onto k_lambda[Heis]
// agrees with the k_lambda[Heis] coaction on all words of U_lambda(b+).
Report check_quotient_restriction(const Q& lambda, int N, int grade_bound = 4,
                                  const std::string& suite = {});

// The lambda = 1 table of U_CM transported by the scaling maps reproduces the
// lambda tables: with X -> lambda^-2 X it gives schrodinger_uheis and
// schrodinger_ucm, with X -> lambda^-3 X the scaled-table variant.
Report check_table_scaling(const Q& lambda, int N, const std::string& suite = {});

}  // namespace cmhopf
