#include <doctest.h>

#include "tlab/generators.hpp"
#include "tlab/resilience.hpp"

using namespace tlab;

namespace {

TypeDist types(std::initializer_list<Rational> q) { return TypeDist(std::vector<Rational>(q)); }

}  // namespace

TEST_CASE("recovery checks") {
  const Graph star = family_graph(Family::Star, 5);
  CHECK(check_recovery(star, types({1, 0, 0, 0, 0}), 5).recovers);
  const Graph c4 = family_graph(Family::Cycle, 4);
  const auto r = check_recovery(c4, types({0, 0, 0, 0}), 1);
  CHECK_FALSE(r.recovers);
  REQUIRE(r.failing_seed);
  CHECK(r.failing_seed->count() == 1);
}

TEST_CASE("closed forms") {
  CHECK(resilience_closed_form(Family::Path, 5, 1) == Rational(3, 2));
  CHECK(resilience_closed_form(Family::Cycle, 6, 1) == Rational(2));
  CHECK(resilience_closed_form(Family::Cycle, 6, 3) == Rational(3));
  CHECK(resilience_closed_form(Family::Complete, 4, 2) == Rational(5, 3));
  CHECK(resilience_closed_form(Family::Star, 6, 4) == Rational(1));
  try {
    resilience_closed_form(Family::Path, 5, 3);
    FAIL("expected OutOfFormulaRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfFormulaRange);
  }
}

TEST_CASE("brute force agrees with the closed forms") {
  for (std::size_t K = 1; K <= 4; ++K)
    CHECK(resilience_bruteforce(family_graph(Family::Star, 4), K).mu == Rational(1));
  const auto k4 = resilience_bruteforce(family_graph(Family::Complete, 4), 2);
  CHECK(k4.mu == Rational(5, 3));
  CHECK(k4.witness_q.l1_norm() == k4.mu);
  CHECK(check_recovery(family_graph(Family::Complete, 4), k4.witness_q, 2).recovers);
  CHECK(resilience_bruteforce(family_graph(Family::Cycle, 6), 3).mu == Rational(3));
  CHECK(resilience_bruteforce(family_graph(Family::Path, 5), 1).mu == Rational(3, 2));
}

TEST_CASE("bounds") {
  const auto star = verify_bounds(family_graph(Family::Star, 5), 2);
  CHECK(star.holds);
  CHECK(star.lower_slack == Rational(0));
  const auto cyc = verify_bounds(family_graph(Family::Cycle, 6), 3);
  CHECK(cyc.upper_slack == Rational(0));
  const auto path = verify_bounds(family_graph(Family::Path, 5), 1);
  CHECK(path.lower_slack > Rational(0));
  CHECK(path.upper_slack > Rational(0));
}

TEST_CASE("greedy allocation") {
  const auto c4 = greedy_upper_bound_q(family_graph(Family::Cycle, 4));
  CHECK(c4.l1_norm() == Rational(2));
  const auto star = greedy_upper_bound_q(family_graph(Family::Star, 5));
  CHECK(star[0] == Rational(1));
  CHECK(star.l1_norm() == Rational(1));

  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const Graph g = random_connected_graph(n, 0.4, rng);
    const TypeDist q = greedy_upper_bound_q(g);
    REQUIRE(q.l1_norm() <= Rational(static_cast<std::int64_t>(n), 2));
    REQUIRE(check_recovery(g, q, n).recovers);
  }
}

TEST_CASE("family names") {
  CHECK(parse_family("complete") == Family::Complete);
  CHECK(to_string(Family::Path) == "path");
  CHECK_THROWS_AS(parse_family("wheel"), Error);
}
