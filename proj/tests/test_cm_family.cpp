#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/hopf.hpp"
#include "cmhopf/rewrite.hpp"

using namespace cmhopf;

TEST_CASE("delta symbols and t_n invert each other") {
  auto F = build({Family::FD0, Q(1), 8});
  std::map<Letter, NCPoly> to_t;
  for (int k = 1; k <= 7; ++k) to_t[delta_symbol(k)] = delta_expr(k, *F);
  for (int n = 2; n <= 7; ++n) CHECK(substitute(t_expr(n), to_t, *F) == NCPoly::gen(tgen(n)));
}

TEST_CASE("scaling relation by hand") {
  // X -> l^-2 X, Y -> l^-1 Y carries YX - XY - X (lambda = 1) to
  // l^-3 (YX - XY) - l^-2 X, which vanishes when [Y, X] = l X.
  for (Q l : {Q(2), Q(-1, 3)}) {
    auto H = build({Family::HCM, l, 8});
    NCPoly x = NCPoly::gen(kX, qpow(l, -2)), y = NCPoly::gen(kY, qpow(l, -1));
    CHECK((H->commutator(y, x) - x).is_zero());
    // [X, t2] = 3 t3 - 2 t2^2 at lambda = 1 maps to a relation at l.
    NCPoly t2 = NCPoly::gen(tgen(2), qpow(l, -1)), t3 = NCPoly::gen(tgen(3), qpow(l, -2));
    NCPoly lhs = H->commutator(x, t2);
    NCPoly rhs = Q(3) * t3 - Q(2) * H->mul(t2, t2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("scaling isomorphisms and inverses") {
  auto h1 = build({Family::HCM, Q(1), 8});
  auto u1 = build({Family::UCM, Q(1), 8});
  for (Q l : {Q(-1), Q(1, 2), Q(3)}) {
    auto hl = build({Family::HCM, l, 8});
    auto ul = build({Family::UCM, l, 8});
    HopfMorphism f = hcm_scaling(h1, hl, l), g = hcm_scaling(hl, h1, Q(1) / l);
    CHECK(check_morphism(f, &g, "hcm").ok());
    HopfMorphism uf = ucm_scaling(u1, ul, l), ug = ucm_scaling(ul, u1, Q(1) / l);
    CHECK(check_morphism(uf, &ug, "ucm").ok());
  }
  CHECK_THROWS(hcm_scaling(h1, h1, Q(0)));

  // A wrong exponent is caught.
  auto h2 = build({Family::HCM, Q(2), 8});
  HopfMorphism bad = hcm_scaling(h1, h2, Q(2));
  bad.images[kX] = NCPoly::gen(kX, Q(1, 2));
  CHECK_FALSE(check_morphism(bad, nullptr, "bad").ok());
}

TEST_CASE("Heisenberg quotient") {
  for (Q l : {Q(1), Q(1, 2)}) {
    auto H = build({Family::HCM, l, 8});
    HeisQuotient q = heis_quotient(H);
    auto K = build({Family::KHeis, l, 0});
    HopfMorphism m = q.quotient_map;
    m.target = K;
    for (int n = 2; n <= 8; ++n) {
      // t_n -> (t/2)^(n-1)
      CHECK(m.apply(NCPoly::gen(tgen(n))) == NCPoly::of(Word(n - 1, kSmallT), qpow(Q(1, 2), n - 1)));
      CHECK(q.in_ideal(q.tilde(n)));
      // (q (x) q) Delta = Delta_K q
      CHECK(m.apply(coproduct(*H, NCPoly::gen(tgen(n)))) == coproduct(*K, m.apply(NCPoly::gen(tgen(n)))));
    }
    CHECK_FALSE(q.in_ideal(NCPoly::gen(tgen(2))));
    CHECK(q.reduce(NCPoly::of(Word{kX, tgen(3)})) == q.reduce(NCPoly::of(Word{kX, tgen(2), tgen(2)})));
  }
}

TEST_CASE("grades") {
  CHECK(grade(parse_poly("t3 + t2^2")) == 2);
  CHECK_FALSE(grade(parse_poly("t3 + t2")).has_value());
  CHECK_THROWS(grade(NCPoly()));
}
