#include <doctest.h>

#include "tlab/error.hpp"
#include "tlab/generators.hpp"
#include "tlab/graph.hpp"
#include "tlab/isomorphism.hpp"

using namespace tlab;

namespace {

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

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

TEST_CASE("build_graph normalizes and validates") {
  const Graph g = build_graph(3, {{2, 1}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(kind_of([] { build_graph(2, {{0, 0}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { build_graph(2, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { build_graph(2, {{0, 2}}); }) == ErrorKind::NodeOutOfRange);
  CHECK(kind_of([] { build_graph(3, {{0, 1}}); }) == ErrorKind::Disconnected);
  CHECK_NOTHROW(build_graph(3, {{0, 1}}, Connectivity::NotRequired));
  CHECK(kind_of([] { build_graph(0, {}); }) == ErrorKind::BadParameter);
}

TEST_CASE("threshold and type distributions") {
  CHECK(kind_of([] { ThresholdDist({1, -1}); }) == ErrorKind::InvalidInput);
  CHECK_THROWS_AS(TypeDist({Rational(3, 2)}), Error);
  CHECK_THROWS_AS(TypeDist({Rational(-1, 2)}), Error);
  const TypeDist q({Rational(1, 2), Rational(1, 3), Rational(1)});
  CHECK(q.l1_norm() == Rational(11, 6));
}

TEST_CASE("non-valid nodes") {
  const Graph g = triangle();
  CHECK_FALSE(is_valid_node(g, ThresholdDist{0, 1, 1}, 0));
  CHECK_FALSE(is_valid_node(g, ThresholdDist{3, 1, 1}, 0));
  CHECK(is_valid_node(g, ThresholdDist{2, 1, 1}, 0));
}

TEST_CASE("types convert to thresholds by floor(q d) + 1") {
  const Graph g = triangle();
  const TypeDist q({Rational(2, 5), Rational(2, 5), Rational(9, 10)});
  CHECK(types_to_thresholds(g, q) == ThresholdDist{1, 1, 2});
  // Exact boundary: q d integral gives strict inequality.
  const TypeDist half({Rational(1, 2), Rational(0), Rational(1)});
  CHECK(types_to_thresholds(g, half) == ThresholdDist{2, 1, 3});
}

TEST_CASE("two_partition finds bipartitions and odd cycles") {
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto p = two_partition(c4);
  CHECK(p.odd.size() + p.even.size() == 4);
  for (const auto& e : c4.edges()) {
    const bool u_odd = std::find(p.odd.begin(), p.odd.end(), e.u) != p.odd.end();
    const bool v_odd = std::find(p.odd.begin(), p.odd.end(), e.v) != p.odd.end();
    CHECK(u_odd != v_odd);
  }
  CHECK(is_bipartite(c4));
  CHECK_FALSE(is_bipartite(triangle()));
  try {
    two_partition(build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    FAIL("expected NotBipartite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBipartite);
    CHECK(e.witness().size() % 2 == 1);
  }
}

TEST_CASE("connected graph and tree generators match known counts") {
  // Unlabeled connected graphs: 1, 1, 2, 6, 21, 112; trees: 1, 1, 1, 2, 3, 6, 11, 23.
  const std::size_t graphs[] = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == graphs[n - 1]);
  const std::size_t tree_counts[] = {1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(trees(n).size() == tree_counts[n - 1]);
}

TEST_CASE("isomorphism respects thresholds") {
  const Graph p1 = build_graph(3, {{0, 1}, {1, 2}});
  const Graph p2 = build_graph(3, {{2, 0}, {0, 1}});
  CHECK(isomorphic(p1, ThresholdDist{1, 2, 1}, p2, ThresholdDist{2, 1, 1}));
  CHECK_FALSE(isomorphic(p1, ThresholdDist{1, 2, 1}, p2, ThresholdDist{1, 2, 1}));
  const auto m = find_isomorphism(p1, ThresholdDist{1, 2, 1}, p2, ThresholdDist{2, 1, 1});
  REQUIRE(m);
  CHECK((*m)[1] == 0);
  // Regular graphs where refinement alone cannot decide.
  const Graph c6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Graph two_triangles =
      build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, Connectivity::NotRequired);
  const auto k = ThresholdDist::uniform(6, 1);
  CHECK_FALSE(isomorphic(c6, k, two_triangles, k));
  const Graph c6b = build_graph(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  CHECK(isomorphic(c6, k, c6b, k));
}
