#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/pairing.hpp"

using namespace cmhopf;

TEST_CASE("hand-computed pairing values") {
  auto ucm = build({Family::UCM, Q(1), 8});
  auto hcm = build({Family::HCM, Q(1), 8});
  auto P = pairing_ucm_hcm(ucm, hcm);
  // <z2 z2, t2 t2> = 2 <z2, t2>^2 from Delta(t2^2) = t2^2 (x) 1 + 2 t2 (x) t2 + 1 (x) t2^2.
  CHECK(P->pair(parse_poly("z2^2", ucm.get()), parse_poly("t2^2", hcm.get())) == Q(2));
  CHECK(P->pair(parse_poly("z3", ucm.get()), parse_poly("t3", hcm.get())) == Q(1));
  CHECK(P->pair(parse_poly("beta", ucm.get()), parse_poly("X", hcm.get())) == Q(1));
  CHECK(P->pair(NCPoly::one(), NCPoly::one()) == Q(1));

  for (Q l : {Q(1), Q(3)}) {
    auto ub = build({Family::Ubplus, l, 0});
    auto fb = build({Family::FBplus, Q(1), 0});
    auto B = pairing_ubplus_fbplus(ub, fb);
    // <X^2, beta^2> = 2!, <Y, alpha^s> = lambda s, <Y^2, alpha^s> = (lambda s)^2.
    CHECK(B->pair_words(Word{kX, kX}, Word{kBeta, kBeta}) == Q(2));
    CHECK(B->pair_words(Word{kY}, Word{kAlpha, kAlpha, kAlpha}) == 3 * l);
    CHECK(B->pair_words(Word{kY, kY}, Word{kAlphaInv, kAlphaInv}) == 4 * l * l);
    CHECK(B->pair_words(Word{kX}, Word{kAlpha}) == Q(0));
  }

  auto uh = build({Family::UHeis, Q(2), 0});
  auto kh = build({Family::KHeis, Q(2), 0});
  auto H = pairing_uheis_kheis(uh, kh);
  // <z, t> = 2 and <z^2, t^2> = 2 <z, t>^2 = 8.
  CHECK(H->pair_words(Word{kSmallZ}, Word{kSmallT}) == Q(2));
  CHECK(H->pair_words(Word{kSmallZ, kSmallZ}, Word{kSmallT, kSmallT}) == Q(8));
  CHECK(H->pair_words(Word{kAlpha}, Word{kY}) == Q(2));
}

TEST_CASE("closed forms on a few entries") {
  // <z_m, t_n> = delta_{mn}; <z2 z2, t3> is the coefficient of t2 (x) t2 in Delta(t3).
  CHECK(closed_form_zword_t({3}, 3) == Q(1));
  CHECK(closed_form_zword_t({2, 2}, 3) == Q(2));
  CHECK(closed_form_zword_t({2, 2}, 4) == Q(0));
  CHECK(closed_form_xy_ab(2, 0, 0, 2, Q(1)) == Q(2));
  CHECK(closed_form_xy_ab(0, 2, 3, 0, Q(2)) == Q(36));
  CHECK(closed_form_heis(2, 0, 0, 2, 0, 0, Q(1)) == Q(8));

  auto ud0 = build({Family::Ud0, Q(1), 12});
  auto fd0 = build({Family::FD0, Q(1), 12});
  auto P = pairing_ud0_fd0(ud0, fd0);
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b)
      for (int n = 2; n <= 6; ++n)
        CHECK(P->pair_recursive(Word{zgen(a), zgen(b)}, Word{tgen(n)}) == closed_form_zword_t({a, b}, n));
}

TEST_CASE("duality axioms at lambda = 2") {
  const Q l(2);
  CHECK(check_duality(*pairing_ud0_fd0(build({Family::Ud0, l, 8}), build({Family::FD0, l, 8})), {3, 0}).ok());
  CHECK(check_duality(*pairing_ubplus_fbplus(build({Family::Ubplus, l, 0}), build({Family::FBplus, l, 0})), {3, 0})
            .ok());
  CHECK(check_duality(*pairing_ucm_hcm(build({Family::UCM, l, 8}), build({Family::HCM, l, 8})), {3, 0}).ok());
  CHECK(check_duality(*pairing_uheis_kheis(build({Family::UHeis, l, 0}), build({Family::KHeis, l, 0})), {3, 0}).ok());
}

TEST_CASE("a wrong generator value breaks duality") {
  auto P = pairing_ubplus_fbplus(build({Family::Ubplus, Q(1), 0}), build({Family::FBplus, Q(1), 0}));
  auto good = P->gen;
  P->gen = [good](Letter a, Letter b) { return a == kY && b == kAlpha ? Q(2) : good(a, b); };
  CHECK_FALSE(check_duality(*P, {3, 0}).ok());
}

TEST_CASE("Gram matrices") {
  auto ud0 = build({Family::Ud0, Q(1), 8});
  auto fd0 = build({Family::FD0, Q(1), 8});
  auto P = pairing_ud0_fd0(ud0, fd0);
  // Slice dimensions are partition counts of the grade.
  const int partitions[] = {1, 1, 2, 3, 5, 7};
  for (int g = 0; g <= 5; ++g) {
    GramResult G = gram(*P, g);
    CHECK(G.left_basis.size() == static_cast<size_t>(partitions[g]));
    CHECK(G.nondegenerate());
  }
  // Rows z3, z2^2 against t3, t2^2: <z3,t3> = 1, <z3,t2^2> = 0, <z2^2,t3> = 2, <z2^2,t2^2> = 2.
  CHECK(P->pair_recursive(Word{zgen(3)}, Word{tgen(3)}) == Q(1));
  CHECK(P->pair_recursive(Word{zgen(3)}, Word{tgen(2), tgen(2)}) == Q(0));
  CHECK(P->pair_recursive(Word{zgen(2), zgen(2)}, Word{tgen(3)}) == Q(2));
  CHECK(P->pair_recursive(Word{zgen(2), zgen(2)}, Word{tgen(2), tgen(2)}) == Q(2));
  GramResult G2 = gram(*P, 2);
  REQUIRE(G2.determinant.has_value());
  CHECK(*G2.determinant == Q(2));

  CHECK(bareiss({{Q(1), Q(2)}, {Q(2), Q(4)}}).rank == 1);
  CHECK(*bareiss({{Q(0), Q(1)}, {Q(1), Q(0)}}).determinant == Q(-1));
}
