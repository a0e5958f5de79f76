#include <doctest.h>

#include "tlab/generators.hpp"
#include "tlab/reductions.hpp"

using namespace tlab;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("formula validation") {
  using V = FormulaVariant;
  CHECK(kind_of([] { make_formula(V::Monotone2DNF, 3, {{1, 2}}); }) == ErrorKind::VariableMissing);
  CHECK_THROWS_AS(make_formula(V::Monotone2DNF, 2, {{1, -2}}), Error);
  CHECK_THROWS_AS(make_formula(V::CNF3, 2, {{1, 2, -1, 2}}), Error);
  CHECK_THROWS_AS(make_formula(V::CNF3, 2, {{3}}), Error);
  CHECK_THROWS_AS(make_formula(V::CNF3, 2, {}), Error);
  CHECK(parse_variant("3cnf") == V::CNF3);
  CHECK(to_string(V::Monotone2CNF) == "monotone-2cnf");
}

TEST_CASE("brute-force model counting") {
  using V = FormulaVariant;
  CHECK(count_sat(make_formula(V::Monotone2DNF, 2, {{1, 2}})) == 1);
  CHECK(count_sat(make_formula(V::Monotone2CNF, 2, {{1, 2}})) == 3);
  CHECK(count_sat(make_formula(V::CNF3, 1, {{1}, {-1}})) == 0);
  // A single-literal 2DNF term x is read as x AND x.
  const Formula x = make_formula(V::Monotone2DNF, 1, {{1}});
  CHECK(evaluate(x, 1));
  CHECK_FALSE(evaluate(x, 0));
}

TEST_CASE("fixed-point gadget anchor") {
  const Formula f = make_formula(FormulaVariant::Monotone2DNF, 2, {{1, 2}});
  const auto g = fix_reduction(f);
  CHECK(g.graph.size() == 18);
  CHECK(g.labels.size() == 18);
  CHECK(is_bipartite(g.graph));
  const auto F = count_fixed_points_backtracking(g.graph, g.thresholds);
  CHECK(F == 18);
  const auto counts = recover_sat_count(F, 2);
  CHECK(counts.sat == 1);
  CHECK(counts.nsat == 3);
  CHECK(kind_of([] { recover_sat_count(17, 2); }) == ErrorKind::InconsistentCount);
}

TEST_CASE("fixed-point gadget on random formulas") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 2 * m)(rng);
    const Formula f = random_monotone_2dnf(std::min<std::size_t>(n, 4), m, rng);
    const auto g = fix_reduction(f);
    REQUIRE(g.graph.size() == 3 * (f.num_vars + 3 * f.clauses.size() + 1));
    REQUIRE(g.graph.is_connected());
    REQUIRE(is_bipartite(g.graph));
    const auto sat = count_sat(f);
    const auto nsat = (std::uint64_t{1} << f.num_vars) - sat;
    const auto F = count_fixed_points_backtracking(g.graph, g.thresholds);
    REQUIRE(F == sat + 8 * (nsat - 1) + 1);
    REQUIRE(recover_sat_count(F, f.num_vars).sat == sat);
  }
}

TEST_CASE("predecessor gadget") {
  using V = FormulaVariant;
  const auto one = pred_reduction(make_formula(V::CNF3, 1, {{1}}));
  CHECK(one.graph.size() == 6);
  CHECK(is_reachable(one.graph, one.thresholds, one.target));
  const auto contradiction = pred_reduction(make_formula(V::CNF3, 1, {{1}, {-1}}));
  CHECK_FALSE(is_reachable(contradiction.graph, contradiction.thresholds, contradiction.target));

  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Formula f = random_3cnf(3, 3, rng);
    const auto g = pred_reduction(f);
    REQUIRE(g.graph.size() == 4 * f.num_vars + f.clauses.size() + 1);
    REQUIRE(is_reachable(g.graph, g.thresholds, g.target) == (count_sat(f) > 0));
  }
}

TEST_CASE("counting gadget for monotone 2-CNF reproduces the measured count") {
  const Formula f = make_formula(FormulaVariant::Monotone2CNF, 2, {{1, 2}});
  const auto r = reachable_pred_reduction(f);
  CHECK(r.instance.graph.size() == 4);
  CHECK(r.measured == 9);
  CHECK(r.claimed == 3);
  CHECK_FALSE(r.matches_claim);
  CHECK(r.factorizes);
  CHECK(r.measured == r.claimed * r.cover_count);
  CHECK_FALSE(r.notice.empty());
  CHECK(reachable_pred_construction(f).graph == r.instance.graph);

  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = reachable_pred_reduction(random_monotone_2cnf(3, 3, rng));
    REQUIRE(g.factorizes);
    REQUIRE(is_reachable(g.instance.graph, g.instance.thresholds, g.instance.target));
  }
}
