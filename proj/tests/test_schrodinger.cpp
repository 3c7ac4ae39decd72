#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/schrodinger.hpp"

using namespace cmhopf;

namespace {

NCPoly act(const SchrodingerData& D, const char* u, const char* phi) {
  return schrodinger_act(D, parse_poly(u, D.actor.get()), parse_poly(phi, D.space.get()));
}

}  // namespace

TEST_CASE("generator table from the coaction by hand") {
  // Delta X = X (x) 1 + 1 (x) X + Y (x) t, Y primitive; <z,t> = 2, <alpha,Y> = lambda, <beta,X> = 1.
  for (Q l : {Q(1), Q(2), Q(1, 2)}) {
    auto D = schrodinger_uheis(l);
    CHECK(act(D, "z", "X") == NCPoly::gen(kY, Q(2)));
    CHECK(act(D, "z", "Y").is_zero());
    CHECK(act(D, "alpha", "X") == NCPoly::gen(kX));
    CHECK(act(D, "alpha", "Y") == NCPoly::gen(kY) + NCPoly::scalar(l));
    CHECK(act(D, "beta", "X") == NCPoly::one());
    CHECK(act(D, "beta", "Y").is_zero());
    // The t-leg of Delta(X^2) is (XY + YX) (x) t, so z |> X^2 = 2 (XY + YX) = 4 XY + 2 lambda X.
    CHECK(act(D, "z", "X^2") == NCPoly::of(Word{kX, kY}, Q(4)) + NCPoly::gen(kX, 2 * l));
    // Products: the table extension against sum phi(1) <u, phi(2)>.
    for (const char* w : {"X*Y", "Y*X", "X^2", "X*Y^2"})
      for (const char* u : {"z", "alpha", "beta", "z*beta"})
        CHECK(act(D, u, w) == act_through_coaction(D, parse_poly(u, D.actor.get()), parse_poly(w, D.space.get())));
  }
  CHECK_THROWS_AS(schrodinger_uheis(Q(0)), OutOfHypothesis);
}

TEST_CASE("full checks") {
  for (Q l : {Q(1), Q(-1), Q(1, 2)}) {
    CHECK(check_schrodinger(schrodinger_ucm(l, 8), {3, 2, true}).ok());
    CHECK(check_schrodinger(schrodinger_uheis(l), {4, 2, true}).ok());
    CHECK(check_schrodinger(schrodinger_uheis_scaled_table(l), {4, 2, true}).ok());
    CHECK(check_quotient_restriction(l, 8, 4).ok());
    CHECK(check_table_scaling(l, 8).ok());
  }
}

TEST_CASE("the scaled table is not dual to the unconjugated coaction") {
  SchrodingerData D = schrodinger_uheis_scaled_table(Q(2));
  D.x_scale = Q(1);
  D.cache_ = std::make_shared<SchrodingerData::Cache>();
  Report r = check_schrodinger(D, {2, 1, true});
  CHECK_FALSE(r.ok());
}
