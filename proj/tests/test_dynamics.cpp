#include <doctest.h>

#include "tlab/dynamics.hpp"
#include "tlab/enumeration.hpp"
#include "tlab/generators.hpp"

using namespace tlab;

namespace {

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Node i = 0; i < n; ++i) e.push_back({i, static_cast<Node>((i + 1) % n)});
  return build_graph(n, e);
}
ActionProfile P(const char* s) { return ActionProfile::parse(s); }

}  // namespace

TEST_CASE("step applies the threshold rule synchronously") {
  CHECK(step(triangle(), ThresholdDist{1, 1, 2}, P("BWW")) == P("WBW"));
  // Threshold 0 always plays B.
  const Graph g = cycle(5);
  ThresholdDist k = ThresholdDist::uniform(5, 3);
  k.set(2, 0);
  for (const auto& a : all_profiles(5)) CHECK(step(g, k, a)[2]);
}

TEST_CASE("type rule matches the converted threshold rule") {
  const Graph g = triangle();
  const TypeDist q({Rational(2, 5), Rational(2, 5), Rational(9, 10)});
  CHECK(step_types(g, q, P("BBW")) == P("BBB"));
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph h = random_connected_graph(6, 0.5, rng);
    std::vector<Rational> qs;
    for (Node i = 0; i < 6; ++i) {
      const auto den = static_cast<std::int64_t>(std::uniform_int_distribution<int>(1, 6)(rng));
      qs.emplace_back(std::uniform_int_distribution<std::int64_t>(0, den)(rng), den);
    }
    const TypeDist t(qs);
    const ThresholdDist k = types_to_thresholds(h, t);
    for (const auto& a : all_profiles(6)) REQUIRE(step_types(h, t, a) == step(h, k, a));
  }
}

TEST_CASE("restricted and inverted steps") {
  const std::vector<Node> odd{1, 3};
  CHECK(step_restricted(cycle(4), ThresholdDist::uniform(4, 1), P("BWWW"), odd) == P("BBWB"));
  CHECK(step_inverted(triangle(), ThresholdDist{1, 1, 2}, P("BWW")) == P("BWB"));
}

TEST_CASE("weighted step") {
  const WeightedGraph plain = to_weighted(cycle(5), ThresholdDist{1, 2, 0, 3, 1});
  for (const auto& a : all_profiles(5))
    CHECK(step_weighted(plain, a) == step(cycle(5), ThresholdDist{1, 2, 0, 3, 1}, a));

  const WeightedGraph neg(2, {{0, 1, -1}}, {}, {0, 0});
  CHECK(step_weighted(neg, P("BW")) == P("BW"));

  const WeightedGraph loop(2, {{0, 1, 1}}, {2, 0}, {2, 1});
  CHECK(step_weighted(loop, P("BW"))[0]);

  CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, 0}}, {}, {0, 0}), Error);
}

TEST_CASE("weighted types use the exact rational floor") {
  const WeightedGraph w(3, {{0, 1, 2}, {0, 2, -1}}, {}, {0, 0, 0});
  const TypeDist q({Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(weighted_types_to_thresholds(w, q)[0] == 1);
}

TEST_CASE("limit_cycle reports transient and cycle") {
  const auto r = limit_cycle(triangle(), ThresholdDist::uniform(3, 1), P("BWW"));
  CHECK(r.transient == 2);
  REQUIRE(r.cycle.size() == 1);
  CHECK(r.cycle[0] == P("BBB"));

  const auto s = limit_cycle(cycle(4), ThresholdDist::uniform(4, 1), P("BWBW"));
  CHECK(s.transient == 0);
  REQUIRE(s.cycle.size() == 2);
  CHECK(s.cycle[0] == P("BWBW"));
  CHECK(s.cycle[1] == P("WBWB"));

  // Guard counts distinct states: a 2-cycle from the start needs 2.
  const auto step_map = [&](const ActionProfile& a) {
    return step(cycle(4), ThresholdDist::uniform(4, 1), a);
  };
  CHECK_NOTHROW(limit_cycle(step_map, P("BWBW"), 2));
  CHECK_THROWS_AS(limit_cycle(step_map, P("BWBW"), 1), Error);
  CHECK(default_guard(4, 4) == 10 * (14 * 4 + 6 * 4) + 4);
}

TEST_CASE("conflict links count bichromatic edges") {
  CHECK(conflict_links(triangle(), P("BWW")) == 2);
  CHECK(conflict_links(cycle(4), P("BWBW")) == 4);
  CHECK(conflict_links(cycle(4), P("BBBB")) == 0);
}

TEST_CASE("strong assignments") {
  const Graph ring = cycle(6);
  const auto ones = ThresholdDist::uniform(6, 1);
  const auto sa = strong_assignments(ring, ones, 0);
  CHECK(std::find(sa.begin(), sa.end(), Action::B) != sa.end());

  // Star center with leaf children and 1 < k < d: both actions are strong.
  const Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto both = strong_assignments(star, ThresholdDist{2, 1, 1, 1}, 0);
  CHECK(both.size() == 2);

  // Every node on a ring with thresholds in {1, 2} has one.
  for (const auto& k : {ThresholdDist{1, 2, 2, 1, 2, 1}, ThresholdDist::uniform(6, 2)})
    for (Node i = 0; i < 6; ++i) CHECK_FALSE(strong_assignments(ring, k, i).empty());
}

TEST_CASE("ring two-step table agrees with two synchronous steps") {
  for (std::size_t n = 4; n <= 8; ++n) {
    const Graph g = cycle(n);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      std::vector<int> kv(n);
      for (Node i = 0; i < n; ++i) kv[i] = 1 + static_cast<int>((code >> i) & 1u);
      const ThresholdDist k(kv);
      for (const auto& a : all_profiles(n)) {
        const auto b = step(g, k, step(g, k, a));
        for (Node i = 0; i < n; ++i) {
          const auto nb = ring_neighborhood(g, i);
          const int row = ring_table_row(g, k, i);
          REQUIRE(ring_table_value(row, a[i], a[nb.ss], a[nb.pp]) == b[i]);
        }
      }
    }
  }
}

TEST_CASE("ring rows 1, 2, 3, 5 make B strong, the others W") {
  for (int row = 1; row <= 8; ++row) {
    const bool b = row == 1 || row == 2 || row == 3 || row == 5;
    CHECK(ring_row_strong(row, Action::B) == b);
    CHECK(ring_row_strong(row, Action::W) == !b);
  }
}

TEST_CASE("steps are deterministic") {
  Rng rng(31);
  const Graph g = random_connected_graph(7, 0.4, rng);
  const ThresholdDist k = random_thresholds(g, rng);
  for (const auto& a : all_profiles(7)) REQUIRE(step(g, k, a) == step(g, k, a));
}

TEST_CASE("decoupling identities and fixed points on bipartite graphs") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : trees(n)) {
      const auto parts = two_partition(g);
      for_each_threshold(g, [&](const ThresholdDist& k) {
        for (const auto& a : all_profiles(n)) {
          const auto one = step(g, k, a), two = step(g, k, one);
          const auto b = step_restricted(g, k, step_restricted(g, k, a, parts.odd), parts.even);
          for (Node i : parts.odd) REQUIRE(b[i] == one[i]);
          for (Node i : parts.even) REQUIRE(b[i] == two[i]);
          REQUIRE((one == a) == (b == a));
        }
      });
    }
  }
}

TEST_CASE("restricted steps on symmetric bipartite models strictly reduce conflict links") {
  std::vector<Graph> graphs{
      build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
      build_graph(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4},
                      {0, 4}, {1, 5}, {2, 6}, {3, 7}})};
  for (std::size_t n = 2; n <= 10; n += 2)
    for (const Graph& t : trees(n)) {
      bool odd = true;
      for (Node i = 0; i < n; ++i) odd = odd && t.degree(i) % 2 == 1;
      if (odd) graphs.push_back(t);
    }
  REQUIRE(graphs.size() > 4);
  for (const Graph& g : graphs) {
    std::vector<int> kv(g.size());
    for (Node i = 0; i < g.size(); ++i) kv[i] = static_cast<int>(g.degree(i) + 1) / 2;
    const ThresholdDist k(kv);
    const auto parts = two_partition(g);
    for (const auto& a : all_profiles(g.size())) {
      for (const auto* part : {&parts.odd, &parts.even}) {
        const auto b = step_restricted(g, k, a, *part);
        REQUIRE((b != a) == (conflict_links(g, b) < conflict_links(g, a)));
      }
    }
  }
}
