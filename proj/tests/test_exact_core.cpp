#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/algebra.hpp"
#include "cmhopf/expr.hpp"
#include "cmhopf/family.hpp"
#include "cmhopf/mpoly.hpp"
#include "cmhopf/report.hpp"
#include "cmhopf/rewrite.hpp"

#include <string>

using namespace cmhopf;

TEST_CASE("rational helpers") {
  CHECK(parse_rational("-3/6") == Q(-1, 2));
  CHECK(parse_rational(" 4 ") == Q(4));
  CHECK(qstr(Q(-6) / 4) == "-3/2");
  CHECK(qpow(Q(2), -3) == Q(1, 8));
  CHECK(qpow(Q(0), 0) == Q(1));
  CHECK(binom(6, 2) == Q(15));
  CHECK(binom(3, 5) == Q(0));
  CHECK(factorial(5) == Q(120));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("polynomials drop zero coefficients") {
  NCPoly p = NCPoly::gen(kX, Q(2)) + NCPoly::gen(kY);
  p -= NCPoly::gen(kX, Q(2));
  CHECK(p == NCPoly::gen(kY));
  CHECK(p.coeff(Word{kX}).get_num() == 0);
  CHECK((p - p).is_zero());
  NCPoly c = concat(NCPoly::gen(kY), NCPoly::gen(kX));
  CHECK(c.terms.begin()->first == Word{kY, kX});
}

TEST_CASE("normal forms in HCM") {
  auto H = build({Family::HCM, Q(1), 8});
  CHECK(render(H->normalize(Word{kY, kX})) == "X*Y + X");
  // [X, t_n] = lambda ((n+1) t_{n+1} - 2 t_2 t_n), [Y, t_n] = lambda (n-1) t_n.
  for (Q lam : {Q(1), Q(-1), Q(1, 2), Q(3)}) {
    auto A = build({Family::HCM, lam, 8});
    for (int n = 2; n <= 7; ++n) {
      NCPoly expect = NCPoly::of(Word{tgen(n), kX});
      expect += NCPoly::gen(tgen(n + 1), lam * (n + 1));
      expect += A->normalize(Word{tgen(2), tgen(n)}) * (-2 * lam);
      CHECK(A->normalize(Word{kX, tgen(n)}) == expect);
      NCPoly ey = NCPoly::of(Word{tgen(n), kY}) + NCPoly::gen(tgen(n), lam * (n - 1));
      CHECK(A->normalize(Word{kY, tgen(n)}) == ey);
    }
    CHECK(A->normalize(Word{kY, kX}) == NCPoly::of(Word{kX, kY}) + NCPoly::gen(kX, lam));
  }
}

TEST_CASE("truncation overflow is loud") {
  auto H = build({Family::HCM, Q(1), 3});
  CHECK_THROWS_AS(H->normalize(Word{kX, tgen(3)}), TruncationOverflow);
  try {
    H->normalize(Word{kX, tgen(3)});
  } catch (const TruncationOverflow& e) {
    CHECK(e.index == 4);
  }
}

TEST_CASE("rewrite systems are locally confluent") {
  for (Family f : {Family::HCM, Family::UCM, Family::KHeis, Family::UHeis, Family::FBplus, Family::FBplusExt,
                   Family::HCMleft, Family::Ud0})
    for (Q lam : {Q(1), Q(1, 2)}) {
      auto A = build({f, lam, 6});
      CHECK_MESSAGE(check_local_confluence(*A).empty(), tag_name({f, lam, 6}));
    }
}

TEST_CASE("expression parser") {
  auto U = build({Family::Ubplus, Q(1), 0});
  // (X+Y)^2 = X^2 + XY + YX + Y^2 with YX = XY + X.
  NCPoly p = parse_poly("(X+Y)^2", U.get());
  NCPoly e = NCPoly::of(Word{kX, kX}) + NCPoly::of(Word{kX, kY}, Q(2)) + NCPoly::gen(kX) + NCPoly::of(Word{kY, kY});
  CHECK(p == e);
  CHECK(parse_poly(render(p), U.get()) == p);
  CHECK(parse_poly("1/2 X - X/2") == NCPoly());
  CHECK(parse_poly("3t3 - 2t2^2") == NCPoly::gen(tgen(3), Q(3)) + NCPoly::of(Word{tgen(2), tgen(2)}, Q(-2)));
  CHECK_THROWS_AS(parse_poly("X + "), ParseError);
  CHECK_THROWS_AS(parse_poly("X^-1"), ParseError);
  CHECK_THROWS(parse_poly("t2", U.get()));
  auto F = build({Family::FBplus, Q(1), 0});
  CHECK(parse_poly("alpha^-1 alpha", F.get()) == NCPoly::one());
}

TEST_CASE("tags round trip") {
  for (const std::string s : {"HCM(1/2)[N=8]", "FD0[N=6]", "Ubplus(2)"}) CHECK(tag_name(parse_tag(s)) == s);
  CHECK_THROWS_AS(parse_tag("Nope"), InvalidTag);
  CHECK_THROWS_AS(parse_tag("HCM[M=3]"), InvalidTag);
}

TEST_CASE("report ordering and serialisation") {
  Report r;
  r.fail("b", "2", "w");
  r.pass("a", "1");
  r.add("a", "0", Status::Skip, "overflow");
  r.sort();
  CHECK(r.checks[0].id == "0");
  CHECK(r.checks[2].suite == "b");
  CHECK(r.count(Status::Pass) == 1);
  CHECK_FALSE(r.ok());
  CHECK(r.first_failure()->witness == "w");
  const std::string j = r.json();
  CHECK(j.find("\"check-id\"") != std::string::npos);
  CHECK(j.find("\"citation-tag\"") != std::string::npos);
  CHECK(r.json() == j);
}

TEST_CASE("polynomial systems") {
  // x + y = 3, x - y = 1
  MPoly x = MPoly::var(0), y = MPoly::var(1);
  Substitution s;
  REQUIRE(solve_linear({x + y - MPoly::constant(3), x - y - MPoly::constant(1)}, s));
  CHECK(s.at(0) == MPoly::constant(2));
  CHECK(s.at(1) == MPoly::constant(1));
  Substitution bad;
  CHECK_FALSE(solve_linear({x - MPoly::constant(1), x - MPoly::constant(2)}, bad));
  // x y = 0, x + y = 1 has (0,1) and (1,0).
  PolySolveResult r = solve_polynomial({x * y, x + y - MPoly::constant(1)});
  CHECK(r.solutions.size() == 2);
  // x^2 = 2 has no rational root.
  PolySolveResult q = solve_polynomial({x * x - MPoly::constant(2)});
  CHECK(q.solutions.empty());
  CHECK(q.irrational.size() == 1);
  auto roots = rational_roots({Q(-6), Q(11), Q(-6), Q(1)});
  CHECK(roots.size() == 3);
}
