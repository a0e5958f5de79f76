#include <doctest.h>

#include "tlab/enumeration.hpp"
#include "tlab/generators.hpp"

using namespace tlab;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Node i = 0; i < n; ++i) e.push_back({i, static_cast<Node>((i + 1) % n)});
  return build_graph(n, e);
}

}  // namespace

TEST_CASE("packed step matches the profile step") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_connected_graph(7, 0.4, rng);
    const ThresholdDist k = random_thresholds(g, rng);
    const PackedStep f(g, k), inv(g, k, true);
    for (const auto& a : all_profiles(7)) {
      REQUIRE(f(a.code()) == step(g, k, a).code());
      REQUIRE(inv(a.code()) == step_inverted(g, k, a).code());
    }
  }
}

TEST_CASE("census on cycles") {
  const auto c5 = enumerate_limits(cycle(5), ThresholdDist::uniform(5, 1));
  CHECK(c5.fixed_points == 2);
  CHECK(c5.two_cycles == 0);

  const auto c4 = enumerate_limits(cycle(4), ThresholdDist::uniform(4, 1));
  CHECK(c4.fixed_points == 2);
  CHECK(c4.two_cycles == 1);
  CHECK(c4.cycle_classes == 3);

  const auto c6 = enumerate_limits(cycle(6), ThresholdDist{2, 1, 1, 2, 1, 1});
  CHECK(c6.fixed_points >= 4);
}

TEST_CASE("census guard") {
  EnumerationOptions o;
  o.guard_n = 4;
  CHECK_THROWS_AS(enumerate_limits(cycle(5), ThresholdDist::uniform(5, 1), o), Error);
}

TEST_CASE("backtracking fixed-point count agrees with the census") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected_graph(8, 0.35, rng);
    const ThresholdDist k = random_thresholds(g, rng);
    const auto census = enumerate_limits(g, k);
    REQUIRE(count_fixed_points_backtracking(g, k) == census.fixed_points);
    REQUIRE(list_fixed_points(g, k) == census.fixed_point_list);
  }
  const Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(count_fixed_points_backtracking(star, ThresholdDist::uniform(4, 1)) == 2);
}

TEST_CASE("bipartite cycle identity") {
  const auto r = bipartite_cycle_identity(cycle(4), ThresholdDist::uniform(4, 1));
  CHECK(r.fixed_points == 2);
  CHECK(r.predicted == 3);
  CHECK(r.cycle_classes == 3);
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  const auto p = bipartite_cycle_identity(path, ThresholdDist::uniform(3, 1));
  CHECK(p.cycle_classes == p.predicted);
  CHECK_THROWS_AS(bipartite_cycle_identity(build_graph(3, {{0, 1}, {1, 2}, {2, 0}}),
                                           ThresholdDist::uniform(3, 1)),
                  Error);
}

TEST_CASE("predecessors match an independent per-node product") {
  const Graph g = cycle(4);
  const auto k = ThresholdDist::uniform(4, 1);
  const auto all_b = ActionProfile::uniform(4, Action::B);
  // b steps to all-B iff every node has a B neighbour.
  std::uint64_t expected = 0;
  for (const auto& b : all_profiles(4)) {
    bool ok = true;
    for (Node i = 0; i < 4; ++i) ok = ok && (b[(i + 1) % 4] || b[(i + 3) % 4]);
    expected += ok;
  }
  CHECK(count_predecessors(g, k, all_b) == expected);
  CHECK(predecessors(g, k, all_b).size() == expected);
  CHECK(is_reachable(g, k, all_b));

  const Graph star = build_graph(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(is_reachable(star, ThresholdDist{1, 2, 2}, ActionProfile::parse("WBW")));
}

TEST_CASE("state-space summary") {
  const auto s = analyze_small(4, PackedStep(cycle(4), ThresholdDist::uniform(4, 1)));
  CHECK(s.states == 16);
  CHECK(s.fixed_points == 2);
  CHECK(s.two_cycles == 1);
  CHECK(s.longer_cycles == 0);
  CHECK(s.max_period <= 2);
}

TEST_CASE("extremal instances") {
  const Instance lo = build_extremal_cycle_instance(5, ExtremalKind::Min);
  const auto a = enumerate_limits(lo.graph, lo.thresholds);
  CHECK(a.fixed_points == 2);
  CHECK(a.two_cycles == 0);
  const Instance hi = build_extremal_cycle_instance(6, ExtremalKind::Max);
  CHECK(hi.thresholds == ThresholdDist{1, 1, 2, 1, 1, 2});
  const auto b = enumerate_limits(hi.graph, hi.thresholds);
  CHECK(b.fixed_points >= 4);
  CHECK(b.two_cycles >= 3);
}
