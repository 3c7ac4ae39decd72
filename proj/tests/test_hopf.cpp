#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/hopf.hpp"
#include "cmhopf/rewrite.hpp"

#include <functional>

using namespace cmhopf;

namespace {

// Sum over compositions i_1 + ... + i_k = n of t_{i_1} ... t_{i_k}, with t_1 = 1,
// normalized in A.
NCPoly compositions(int n, int k, const Algebra& A) {
  NCPoly out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (slots == 0) {
      if (left != 0) return;
      Word w;
      for (int p : parts)
        if (p > 1) w.push_back(tgen(p));
      out += A.normalize(w);
      return;
    }
    for (int p = 1; p <= left - (slots - 1); ++p) {
      parts.push_back(p);
      rec(left - p, slots - 1);
      parts.pop_back();
    }
  };
  rec(n, k);
  return out;
}

TensorPoly faa_di_bruno(int n, const Algebra& A) {
  TensorPoly t({&A, &A});
  for (int k = 1; k <= n; ++k) {
    NCPoly right = k == 1 ? NCPoly::one() : NCPoly::gen(tgen(k));
    t += tensor(compositions(n, k, A), &A, right, &A);
  }
  return t;
}

TensorPoly t2(const NCPoly& a, const NCPoly& b, const Algebra& A) { return tensor(a, &A, b, &A); }

}  // namespace

TEST_CASE("coproduct of t_n is the composition formula") {
  auto F = build({Family::FD0, Q(1), 8});
  auto H = build({Family::HCM, Q(1), 8});
  for (int n = 2; n <= 7; ++n) {
    CHECK(coproduct(*F, NCPoly::gen(tgen(n))) == faa_di_bruno(n, *F));
    // H_CM carries the flipped coproduct on the t_n.
    TensorPoly flipped = permute_legs(faa_di_bruno(n, *H), {1, 0});
    CHECK(coproduct(*H, NCPoly::gen(tgen(n))) == flipped);
  }
}

TEST_CASE("hand-derived structure maps") {
  auto H = build({Family::HCM, Q(1), 8});
  const Algebra& h = *H;
  // Delta X from the coaction X -> X (x) 1 + Y (x) 2t2.
  CHECK(coproduct(h, NCPoly::gen(kX)) ==
        t2(NCPoly::gen(kX), NCPoly::one(), h) + t2(NCPoly::one(), NCPoly::gen(kX), h) +
            t2(NCPoly::gen(kY), NCPoly::gen(tgen(2), Q(2)), h));
  // S(t3) from t3 + 2 S(t2) t2 + S(t3) = 0 with S(t2) = -t2.
  CHECK(antipode(h, NCPoly::gen(tgen(2))) == NCPoly::gen(tgen(2), Q(-1)));
  CHECK(antipode(h, NCPoly::gen(tgen(3))) == NCPoly::of(Word{tgen(2), tgen(2)}, Q(2)) - NCPoly::gen(tgen(3)));

  for (Q lam : {Q(0), Q(1), Q(1, 2)}) {
    auto K = build({Family::KHeis, lam, 0});
    // S(X) = -X - S(Y) t = -X + Y t = -X + t Y + lambda t.
    NCPoly sx = NCPoly::gen(kX, Q(-1)) + NCPoly::of(Word{kSmallT, kY}) + NCPoly::gen(kSmallT, lam);
    CHECK(antipode(*K, NCPoly::gen(kX)) == sx);
    CHECK(antipode(*K, NCPoly::gen(kSmallT)) == NCPoly::gen(kSmallT, Q(-1)));
    CHECK(counit(*K, parse_poly("X*Y + 3", K.get())) == Q(3));
  }

  auto U = build({Family::UCM, Q(1), 8});
  // Delta z_n = z_n (x) 1 + sum_j C(n,j) alpha^(j-1) beta^(n-j) (x) z_j at lambda = 1.
  for (int n = 2; n <= 5; ++n) {
    TensorPoly e = t2(NCPoly::gen(zgen(n)), NCPoly::one(), *U);
    for (int j = 2; j <= n; ++j) {
      Word a(j - 1, kAlpha);
      a.insert(a.end(), n - j, kBeta);
      e += binom(n, j) * t2(NCPoly::of(a), NCPoly::gen(zgen(j)), *U);
    }
    CHECK(coproduct(*U, NCPoly::gen(zgen(n))) == e);
  }
}

TEST_CASE("antipode closed formula agrees with the recursive solution") {
  auto F = build({Family::FD0, Q(1), 8});
  for (int n = 2; n <= 8; ++n) CHECK(antipode_t_closed(n) == antipode_t_recursive(n, *F));
}

TEST_CASE("iterated coproducts do not depend on bracketing") {
  auto H = build({Family::HCM, Q(1, 2), 8});
  for (const char* e : {"X*t2", "Y*t3", "X*Y", "t2*t3"}) {
    NCPoly x = parse_poly(e, H.get());
    CHECK(iterated_coproduct(*H, x, 2) == iterated_coproduct_left(*H, x, 2));
  }
}

TEST_CASE("axiom checker passes on presets and catches a broken antipode") {
  auto C = cyclic_group_algebra(5);
  CHECK(check_hopf_axioms(*C, {4, true}).ok());

  auto K = clone_algebra(build({Family::KHeis, Q(1), 0}));
  auto good = K->antipode_gen;
  K->antipode_gen = [good](Letter l) { return l == kX ? NCPoly::gen(kX, Q(-1)) : good(l); };
  Report r = check_hopf_axioms(*K, {2, true});
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure() != nullptr);
  CHECK_FALSE(r.first_failure()->witness.empty());
}

TEST_CASE("full sweep at one parameter") {
  for (Family f : {Family::HCM, Family::UCM, Family::KHeis, Family::UHeis, Family::HCMleft, Family::FBplusExt}) {
    auto A = build({f, Q(-1), 8});
    Report r = check_hopf_axioms(*A, {3, true});
    CHECK_MESSAGE(r.ok(), tag_name({f, Q(-1), 8}));
  }
}

TEST_CASE("commutative limits") {
  auto H0 = build({Family::HCM, Q(0), 8});
  for (Letter a : H0->gens)
    for (Letter b : H0->gens) CHECK(H0->commutator(NCPoly::gen(a), NCPoly::gen(b)).is_zero());
  auto U0 = build({Family::Ubplus, Q(0), 0});
  CHECK(U0->commutator(NCPoly::gen(kX), NCPoly::gen(kY)).is_zero());
}
