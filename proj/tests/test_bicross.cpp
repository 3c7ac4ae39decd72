#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/bicross.hpp"
#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/hopf.hpp"
#include "cmhopf/pairing.hpp"

using namespace cmhopf;

namespace {

void expect_detected(const BicrossData& D) {
  Report r = check_compatibility(D, 3);
  const Check* f = r.first_failure();
  REQUIRE(f != nullptr);
  CHECK_FALSE(f->witness.empty());
  CHECK_THROWS_AS(build_bicrossproduct(D, 2), IncompatibleData);
}

}  // namespace

TEST_CASE("bicrossproducts reproduce the presentations") {
  for (Q l : {Q(1), Q(1, 2)}) {
    CHECK(compare_presentations(*build_bicrossproduct(hcm_data(l, 8)), *build({Family::HCM, l, 8}), true, "hcm").ok());
    CHECK(compare_presentations(*build_bicrossproduct(ucm_data(l, 8)), *build({Family::UCM, l, 8}), true, "ucm").ok());
    CHECK(compare_presentations(*build_bicrossproduct(kheis_data(l)), *build({Family::KHeis, l, 0}), true, "k").ok());
    CHECK(compare_presentations(*build_bicrossproduct(uheis_data(l)), *build({Family::UHeis, l, 0}), true, "u").ok());
    CHECK(compare_presentations(*build_bicrossproduct(fbplus_ext_data(l, 8)), *build({Family::FBplusExt, l, 8}), true,
                                "ext")
              .ok());
    CHECK(compare_presentations(*build_bicrossproduct(hcm_left_data(l, 8)), *build({Family::HCMleft, l, 8}), false,
                                "left")
              .ok());
  }
}

TEST_CASE("cross relation of the built H_CM") {
  // t2 X from the smash product: X t2 = t2 X + (X |> t2).
  auto B = build_bicrossproduct(hcm_data(Q(1), 8));
  CHECK(B->normalize(Word{kX, tgen(2)}) == parse_poly("t2*X + 3t3 - 2t2^2"));
}

TEST_CASE("compatibility conditions hold on the unmutated data") {
  for (Q l : {Q(1), Q(-1)}) {
    CHECK(check_compatibility(hcm_data(l, 8), 3).ok());
    CHECK(check_compatibility(ucm_data(l, 8), 3).ok());
    CHECK(check_compatibility(uheis_data(l), 3).ok());
    CHECK(check_compatibility(fbplus_ext_data(l, 8), 3).ok());
  }
}

TEST_CASE("mutations are detected") {
  const Q l(1);
  SUBCASE("action term dropped") {
    BicrossData D = hcm_data(l, 8);
    expect_detected(D.with_action(kX, tgen(2), NCPoly::gen(tgen(3), Q(3))));
  }
  SUBCASE("Y action dropped") {
    BicrossData D = hcm_data(l, 8);
    expect_detected(D.with_action(kY, tgen(3), NCPoly()));
  }
  SUBCASE("coaction term dropped") {
    BicrossData D = hcm_data(l, 8);
    expect_detected(D.with_coaction(kX, tensor(NCPoly::gen(kX), D.H.get(), NCPoly::one(), D.A.get())));
  }
  SUBCASE("mirror coaction term dropped") {
    BicrossData D = ucm_data(l, 8);
    expect_detected(
        D.with_coaction(zgen(3), tensor(NCPoly::of(Word{kAlpha, kAlpha}), D.A.get(), NCPoly::gen(zgen(3)), D.H.get())));
  }
  SUBCASE("Heisenberg action halved") {
    BicrossData D = kheis_data(l);
    expect_detected(D.with_action(kX, kSmallT, NCPoly::of(Word{kSmallT, kSmallT}, Q(1, 4))));
  }
}

TEST_CASE("declarative data") {
  BicrossData D = parse_bicross_data(R"(
    name: KHeis
    orientation: LR
    A: Kt
    H: Ubplus(1)
    act X t = 1/2 t^2
    act Y t = t
    coact X = X (x) 1 + Y (x) t
  )");
  CHECK(compare_presentations(*build_bicrossproduct(D), *build({Family::KHeis, Q(1), 0}), true, "parsed").ok());
}

TEST_CASE("finite group oracle") {
  FiniteGroup X = symmetric_group(3);
  CHECK(X.size() == 6);
  std::vector<int> G = generated_subgroup(X, {3}), M = generated_subgroup(X, {1});
  CHECK(G.size() == 3);
  CHECK(M.size() == 2);
  FiniteBicross F = finite_group_bicross(X, G, M);
  CHECK(check_hopf_axioms(*F.lr, {4, true}).ok());
  CHECK(check_hopf_axioms(*F.rl, {4, true}).ok());
  CHECK(check_duality(*F.pairing, {4, 0}).ok());
  auto lb = F.pairing->left->basis(4), rb = F.pairing->right->basis(4);
  CHECK(lb.size() == 6);
  CHECK(rb.size() == 6);
  std::vector<std::vector<Q>> m;
  for (const Word& u : lb) {
    m.emplace_back();
    for (const Word& w : rb) m.back().push_back(F.pairing->pair_words(u, w));
  }
  CHECK(bareiss(m).rank == 6);
  // Two subgroups of order 2 never factorise S3.
  CHECK_THROWS_AS(finite_group_bicross(X, M, M), NotAFactorisation);
}
