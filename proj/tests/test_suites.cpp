#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmhopf/suites.hpp"

#include <stdexcept>

using namespace cmhopf;

TEST_CASE("verify groups") {
  SuiteConfig cfg;
  CHECK(run_verify_group("sl2", cfg).ok());
  CHECK(run_verify_group("oracle", cfg).ok());
  CHECK_THROWS_AS(run_verify_group("nonsense", cfg), std::invalid_argument);
  for (const auto& n : {"hopf", "bicross", "pairing", "schrodinger", "ideal", "scaling", "sl2"}) {
    bool listed = false;
    for (const auto& m : verify_group_names()) listed = listed || m == n;
    CHECK(listed);
  }
}

TEST_CASE("every check carries a citation tag") {
  SuiteConfig cfg;
  Report r = run_verify_group("ideal", cfg);
  for (const Check& c : r.checks) {
    CHECK_FALSE(c.tag.empty());
    CHECK_FALSE(c.id.empty());
  }
}

TEST_CASE("structured output is deterministic") {
  SuiteConfig cfg;
  cfg.seed = 11;
  Report a = run_verify_group("sl2", cfg), b = run_verify_group("sl2", cfg);
  a.sort();
  b.sort();
  CHECK(a.json() == b.json());
  cfg.lambdas = {Q(2)};
  Report s = run_verify_group("scaling", cfg), t = run_verify_group("scaling", cfg);
  s.sort();
  t.sort();
  CHECK(s.json() == t.json());
  CHECK(s.text() == t.text());
}

TEST_CASE("single algebra restriction adds notes") {
  SuiteConfig cfg;
  cfg.algebra = AlgebraTag{Family::Ubplus, Q(1), 0};
  cfg.lambdas = {Q(1)};
  Report r = run_verify_group("hopf", cfg);
  CHECK(r.ok());
  bool noted = false;
  for (const Check& c : r.checks) noted = noted || c.id.find("noncommutative") != std::string::npos;
  CHECK(noted);
}
