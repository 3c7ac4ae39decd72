#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/fodc.hpp"

using namespace cmhopf;

namespace {

// sum_i coeff_i d(form_i), coefficients parsed in the base algebra.
NCPoly forms(const Algebra& A, std::initializer_list<std::pair<std::string, Letter>> parts) {
  NCPoly out;
  for (const auto& [c, f] : parts) out += one_form(parse_poly(c, &A), f);
  return out;
}

// The one-parameter family of right covariant 3d calculi found by the classifier,
// written out by hand.
FODC family_member(const Q& l, const Q& p) {
  FODC F;
  F.name = "family";
  F.base = build({Family::KHeis, l, 0});
  F.forms = {kdX, kdY, kdt};
  const Algebra& A = *F.base;
  const std::string P = "(" + qstr(p) + ")", L = "(" + qstr(l) + ")";
  F.right[{kdX, kSmallT}] = forms(A, {{"(1+" + P + ")*t", kdX}, {"-" + P + "*t^2", kdY}});
  F.right[{kdX, kX}] = forms(A, {{"X", kdX}});
  F.right[{kdX, kY}] = forms(A, {{"Y - " + L + "/2", kdX}});
  F.right[{kdY, kSmallT}] = forms(A, {{P, kdX}, {"(1-" + P + ")*t", kdY}});
  F.right[{kdY, kX}] = forms(A, {{L + "/2", kdX}, {"X", kdY}});
  F.right[{kdY, kY}] = forms(A, {{L + "/2 + Y", kdY}});
  F.right[{kdt, kSmallT}] = forms(A, {{"t", kdt}});
  F.right[{kdt, kX}] = forms(A, {{P + "*t", kdX}, {"-" + P + "*t^2", kdY}, {"X - " + L + "*t", kdt}});
  F.right[{kdt, kY}] = forms(A, {{P, kdX}, {"-" + P + "*t", kdY}, {"Y - " + L, kdt}});
  return F;
}

}  // namespace

TEST_CASE("differential of the 2d calculus") {
  FODC F = fodc_2d_right(Q(1));
  const Algebra& A = *F.base;
  // d(XY) = (dX) Y + X dY = (Y - 1/2) dX + X dY
  CHECK(fodc_d(F, parse_poly("X*Y", &A)) == forms(A, {{"Y - 1/2", kdX}, {"X", kdY}}));
  CHECK(fodc_d(F, NCPoly::one()).is_zero());
  FODC G = fodc_3d_left(Q(1));
  CHECK(fodc_d(G, parse_poly("t^2", G.base.get())) == forms(*G.base, {{"2t", kdt}}));
}

TEST_CASE("built-in calculi") {
  for (Q l : {Q(1), Q(-1), Q(1, 2)}) {
    CHECK(check_fodc_consistency(fodc_2d_right(l)).ok());
    CHECK(check_covariance(fodc_2d_right(l), ubplus_right_coaction(l)).ok());
    CHECK(check_covariance(fodc_2d_right(l), ubplus_left_coaction(l)).ok());
    CHECK(check_fodc_consistency(fodc_3d_left(l)).ok());
    CHECK(check_covariance(fodc_3d_left(l), kheis_left_coaction(l)).ok());
    for (Q g : {Q(0), Q(l / 2)}) {
      CHECK(check_fodc_consistency(fodc_3d_right(l, g)).ok());
      CHECK(check_covariance(fodc_3d_right(l, g), kheis_right_coaction(l)).ok());
    }
    CHECK_FALSE(check_fodc_consistency(fodc_3d_right(l, Q(1, 3))).ok());
  }
}

TEST_CASE("inconsistent tables are rejected") {
  FODC F = fodc_2d_right(Q(1));
  F.right[{kdX, kY}] = forms(*F.base, {{"Y", kdX}});
  CHECK_THROWS_AS(build_fodc(F), InconsistentBimodule);
  FODC G = fodc_2d_right(Q(1));
  G.right.erase({kdY, kY});
  CHECK_THROWS(build_fodc(G));
}

TEST_CASE("Oeckl calculus defect") {
  for (Q l : {Q(0), Q(1), Q(-2), Q(1, 2)}) {
    FODC F = oeckl_calculus(l);
    FormCoaction C = ubplus_right_coaction(l);
    FormTensor expected;
    if (l != 0) {
      expected[{Word{}, kdX, Word{kSmallT}}] = l;
      expected[{Word{}, kdY, Word{kSmallT, kSmallT}}] = l / 2;
    }
    CHECK(covariance_defect_terms(F, C, kdX, kX) == expected);
    CHECK(check_covariance(F, C).ok() == (l == 0));
  }
}

TEST_CASE("the 3d right covariant family by hand") {
  for (Q l : {Q(1), Q(-1), Q(1, 2)})
    for (Q p : {Q(0), Q(1), Q(-3), Q(2, 5)}) {
      FODC F = family_member(l, p);
      CHECK(check_fodc_consistency(F).ok());
      CHECK(check_covariance(F, kheis_right_coaction(l)).ok());
    }
  // p = 0 is the g = 0 calculus.
  CHECK(same_table(family_member(Q(1), Q(0)), fodc_3d_right(Q(1), Q(0))));
}

TEST_CASE("classification") {
  const Q l(2);
  ClassifyResult two = classify(scenario("2d-right", l, 3));
  REQUIRE(two.solutions.size() == 1);
  CHECK(two.families.empty());
  CHECK(same_table(two.solutions[0], fodc_2d_right(l)));

  ClassifyResult three = classify(scenario("3d-right", Q(1), 3));
  CHECK(three.solutions.size() == 1);
  CHECK(three.families.size() == 1);
  CHECK(same_table(three.solutions[0], fodc_3d_right(Q(1), Q(1, 2))));
  for (Q p : {Q(0), Q(5), Q(-1, 2)}) CHECK(family_containing(three, family_member(Q(1), p)) == 0);
  CHECK(family_containing(three, fodc_3d_right(Q(1), Q(1, 2))) < 0);
  CHECK_FALSE(dt_rescaling(fodc_3d_right(Q(1), Q(0)), fodc_3d_right(Q(1), Q(1, 2))).has_value());
  CHECK(dt_rescaling(fodc_3d_right(Q(1), Q(0)), fodc_3d_right(Q(1), Q(0))) == Q(1));

  for (const char* s : {"3d-bicovariant", "4d-bicovariant"}) {
    ClassifyResult r = classify(scenario(s, Q(1), 3));
    CHECK(r.empty());
    CHECK(r.linear_inconsistent);
  }
  ClassifyResult sub = classify(scenario("4d-right-sub2d", Q(1), 3));
  CHECK(sub.empty());
  CHECK_FALSE(sub.linear_inconsistent);
  CHECK_FALSE(sub.non_surjective.empty());

  CHECK_THROWS(scenario("5d", Q(1), 3));
}
