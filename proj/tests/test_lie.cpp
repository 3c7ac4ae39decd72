#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/lie.hpp"

using namespace cmhopf;

TEST_CASE("brackets") {
  LieAlgebra b = lie_bplus(Q(3));
  CHECK(b.bracket("Y", "X") == lie_vec("X", Q(3)));
  CHECK(b.bracket("X", "Y") == lie_vec("X", Q(-3)));
  CHECK(b.bracket("X", "X").empty());
  LieAlgebra d = lie_d0({2, 3});
  // [z2, z3] = z4 leaves the span.
  CHECK_FALSE(d.non_closure().empty());
  CHECK(lie_d0({0, 1, 2}).non_closure().empty());
  for (const LieAlgebra& g : {lie_sl2(), lie_bplus(), lie_d0({0, 1, 2}), lie_abelian(3)}) CHECK(check_jacobi(g).ok());
}

TEST_CASE("matched pair of b+ and the line") {
  MatchedPair M = sl2_matched_pair();
  CHECK(M.act_left(lie_vec("z"), lie_vec("X")) == lie_vec("Y", Q(2)));
  CHECK(M.act_left(lie_vec("z"), lie_vec("Y")).empty());
  CHECK(M.act_right(lie_vec("z"), lie_vec("X")).empty());
  CHECK(M.act_right(lie_vec("z"), lie_vec("Y")) == lie_vec("z"));
  CHECK(check_matched_pair(M).ok());

  MatchedPair D = derived_sl2_matched_pair();
  CHECK(D.left_action == M.left_action);
  CHECK(D.right_action == M.right_action);

  // z |> X = 2Y is not compatible with z <| Y = 0.
  MatchedPair bad = M;
  bad.right_action[{"z", "Y"}] = LieVec{};
  CHECK_FALSE(check_matched_pair(bad).ok());
}

TEST_CASE("the double is sl2") {
  LieAlgebra g = build_double(sl2_matched_pair());
  CHECK(g.basis.size() == 3);
  CHECK(check_jacobi(g).ok());
  // X -> E, Y -> H/2, z -> -F by hand.
  std::map<std::string, LieVec> hand{{"X", lie_vec("E")}, {"Y", lie_vec("H", Q(1, 2))}, {"z", lie_vec("F", Q(-1))}};
  CHECK(check_lie_morphism(g, lie_sl2(), hand).ok());
  std::map<std::string, LieVec> wrong = hand;
  wrong["z"] = lie_vec("F");
  CHECK_FALSE(check_lie_morphism(g, lie_sl2(), wrong).ok());

  Sl2Iso iso = iso_to_sl2(g);
  REQUIRE(iso.found);
  CHECK(check_lie_morphism(g, lie_sl2(), iso.image).ok());
  CHECK(iso_to_sl2(lie_sl2()).found);
  CHECK(iso_to_sl2(lie_d0({0, 1, 2})).found);
  CHECK_FALSE(iso_to_sl2(lie_abelian(3)).found);
  CHECK_FALSE(iso_to_sl2(lie_bplus()).found);
}

TEST_CASE("group level") {
  // 1 - bc = 1/2: (1, 1/2) -> (4, 1), c <| g = 2.
  BPoint h = line_act(Q(1), {Q(1), Q(1, 2)});
  CHECK(h.a == Q(4));
  CHECK(h.b == Q(1));
  CHECK(line_react(Q(1), {Q(1), Q(1, 2)}) == Q(2));
  CHECK_THROWS_AS(line_act(Q(2), {Q(1), Q(1, 2)}), SingularSample);

  BPoint p = bplus_mul({Q(2), Q(3)}, {Q(5), Q(7)});
  CHECK(p.a == Q(10));
  CHECK(p.b == Q(17));

  auto samples = random_group_samples(100, 7);
  CHECK(samples.size() == 100);
  for (const auto& s : samples) {
    CHECK(s.g.a > 0);
    CHECK(1 - s.g.b * s.c != 0);
  }
  CHECK(group_actions_check(samples).ok());

  auto parsed = parse_group_samples("# c a b\n1 1 1/2\n-2 3 -1/3\n1/2 1 4\n");
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[1].c == Q(-2));
  CHECK(parsed[1].g.b == Q(-1) / 3);
  CHECK(group_actions_check(parsed).ok());
}
