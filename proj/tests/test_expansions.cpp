#include <doctest.h>

#include "tlab/dynamics.hpp"
#include "tlab/expansions.hpp"
#include "tlab/generators.hpp"
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

bool commutes(const Graph& g, const ThresholdDist& k, const ExpansionResult& r) {
  const auto samples = all_profiles(g.size());
  return commutation_check([&](const ActionProfile& a) { return step(g, k, a); },
                           [&](const ActionProfile& a) { return step(r.graph, r.thresholds, a); },
                           r.lift, samples)
      .holds;
}

bool commutes(const WeightedGraph& w, const WeightedExpansionResult& r) {
  const auto samples = all_profiles(w.size());
  return commutation_check([&](const ActionProfile& a) { return step_weighted(w, a); },
                           [&](const ActionProfile& a) { return step_weighted(r.graph, a); },
                           r.lift, samples)
      .holds;
}

}  // namespace

TEST_CASE("profile lifts compose") {
  using K = LiftEntry::Kind;
  const ProfileLift f(2, {{K::Copy, 0}, {K::Negate, 1}, {K::ConstB, 0}});
  const ProfileLift g(3, {{K::Negate, 0}, {K::Copy, 1}, {K::Copy, 2}, {K::ConstW, 0}});
  const auto a = ActionProfile::parse("BW");
  CHECK(f(a) == ActionProfile::parse("BBB"));
  CHECK(f.then(g)(a) == g(f(a)));
  CHECK(f.is_injective());
  CHECK_FALSE(ProfileLift(2, {{K::Copy, 0}}).is_injective());
  CHECK(ProfileLift::identity(3)(ActionProfile::parse("BWB")) == ActionProfile::parse("BWB"));
}

TEST_CASE("bipartite expansion of the triangle is a 6-cycle") {
  const ThresholdDist k{1, 1, 2};
  const auto r = bipartite_expansion(triangle(), k);
  CHECK(r.thresholds == ThresholdDist{1, 1, 2, 1, 1, 2});
  const Graph c6 = build_graph(6, {{0, 4}, {4, 2}, {2, 3}, {3, 1}, {1, 5}, {5, 0}});
  CHECK(isomorphic(r.graph, r.thresholds, c6, ThresholdDist{1, 1, 2, 1, 1, 2}));
  CHECK(is_bipartite(r.graph));
  CHECK(commutes(triangle(), k, r));
}

TEST_CASE("bipartite expansion of an already bipartite graph doubles it") {
  const Graph edge = build_graph(2, {{0, 1}});
  const auto r = bipartite_expansion(edge, ThresholdDist{1, 1});
  CHECK(r.graph.size() == 4);
  CHECK(r.graph.edge_count() == 2);
  CHECK_FALSE(r.graph.is_connected());
  CHECK(commutes(edge, ThresholdDist{1, 1}, r));
}

TEST_CASE("one-step symmetric expansion") {
  const ThresholdDist k{1, 1, 2};
  CHECK_FALSE(is_symmetric_model(triangle(), k));
  const auto r = one_step_symmetric_expansion(triangle(), k, Node{0});
  CHECK(r.graph.size() == 12);
  CHECK(r.thresholds[0] == 3);
  std::size_t centers = 0;
  for (Node v = 3; v < 12; ++v) {
    const auto& o = r.node_map[v];
    if (o.role == NodeOrigin::Role::GadgetCenter) {
      ++centers;
      CHECK(r.thresholds[v] == 2);
    } else {
      CHECK(o.role == NodeOrigin::Role::GadgetLeaf);
      CHECK(r.thresholds[v] == 1);
    }
  }
  CHECK(centers == 3);
  CHECK(commutes(triangle(), k, r));

  const Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto sym = ThresholdDist::uniform(4, 2);
  CHECK(is_symmetric_model(k4, sym));
  CHECK_FALSE(is_symmetric_model(k4, ThresholdDist::uniform(4, 1)));
  CHECK(kind_of([&] { one_step_symmetric_expansion(k4, sym); }) == ErrorKind::AlreadySymmetric);
}

TEST_CASE("full symmetric expansion") {
  const ThresholdDist k{1, 1, 2};
  CHECK(pivot_candidates(triangle(), k).size() == 3);
  const auto r = symmetric_expansion(triangle(), k);
  CHECK(r.graph.size() == 30);
  CHECK(is_symmetric_model(r.graph, r.thresholds));
  CHECK(commutes(triangle(), k, r));

  SymmetricOptions reverse;
  reverse.highest_first = true;
  const auto s = symmetric_expansion(triangle(), k, reverse);
  CHECK(isomorphic(r.graph, r.thresholds, s.graph, s.thresholds));

  SymmetricOptions tiny;
  tiny.max_nodes = 20;
  CHECK(kind_of([&] { symmetric_expansion(triangle(), k, tiny); }) == ErrorKind::GuardExceeded);
}

TEST_CASE("expansions commute on random instances") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_connected_graph(5, 0.5, rng);
    const ThresholdDist k = random_thresholds(g, rng);
    REQUIRE(commutes(g, k, bipartite_expansion(g, k)));
    if (!is_symmetric_model(g, k)) REQUIRE(commutes(g, k, symmetric_expansion(g, k)));
    const auto inv = inverted_to_primary(g, k);
    const auto samples = all_profiles(5);
    REQUIRE(commutation_check([&](const ActionProfile& a) { return step_inverted(g, k, a); },
                              [&](const ActionProfile& a) { return step(inv.graph, inv.thresholds, a); },
                              inv.lift, samples)
                .holds);
  }
}

TEST_CASE("inverted simulation thresholds") {
  const auto r = inverted_to_primary(triangle(), ThresholdDist::uniform(3, 1));
  for (Node i = 0; i < 3; ++i) CHECK(r.thresholds[i] == 2);
  for (Node i = 3; i < 6; ++i) CHECK(r.thresholds[i] == 1);
}

TEST_CASE("signed simulation") {
  const WeightedGraph w(2, {{0, 1, -1}}, {}, {0, 0});
  const auto r = signed_to_primary(w);
  CHECK(r.graph.size() == 4);
  const auto samples = all_profiles(2);
  CHECK(commutation_check([&](const ActionProfile& a) { return step_weighted(w, a); },
                          [&](const ActionProfile& a) { return step(r.graph, r.thresholds, a); },
                          r.lift, samples)
            .holds);
  CHECK(kind_of([] { signed_to_primary(WeightedGraph(2, {{0, 1, 2}}, {}, {0, 0})); }) ==
        ErrorKind::WeightOutOfRange);
  CHECK(kind_of([] { signed_to_primary(WeightedGraph(2, {{0, 1, 1}}, {}, {2, 0})); }) ==
        ErrorKind::ValidityViolated);

  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph s = random_signed(5, 0.5, rng);
    const auto e = signed_to_primary(s);
    const auto all = all_profiles(5);
    REQUIRE(commutation_check([&](const ActionProfile& a) { return step_weighted(s, a); },
                              [&](const ActionProfile& a) { return step(e.graph, e.thresholds, a); },
                              e.lift, all)
                .holds);
    for (const auto& a : all) REQUIRE(limit_cycle_weighted(s, a).cycle.size() <= 2);
  }
}

TEST_CASE("integer weights to unit weights") {
  const WeightedGraph edge(2, {{0, 1, 2}}, {}, {1, 1});
  const auto r = integer_weights_to_unit(edge);
  CHECK(r.graph.size() == 4);
  CHECK(r.graph.edges().size() == 4);
  for (const auto& e : r.graph.edges()) CHECK(e.w == 1);
  CHECK(commutes(edge, r));

  const WeightedGraph path(3, {{0, 1, 2}, {1, 2, -1}}, {}, {1, 0, 0});
  const auto p = integer_weights_to_unit(path);
  CHECK(p.graph.size() == 6);
  CHECK(commutes(path, p));

  CHECK_THROWS_AS(integer_weights_to_unit(path, 5), Error);
  CHECK_THROWS_AS(integer_weights_to_unit(WeightedGraph(2, {{0, 1, 1}}, {1, 0}, {0, 0})), Error);
}

TEST_CASE("self-loop removal") {
  const WeightedGraph w(2, {{0, 1, 1}}, {1, 0}, {1, 1});
  const auto r = remove_self_loops(w);
  CHECK(r.graph.size() == 4);
  CHECK_FALSE(r.graph.has_self_loops());
  CHECK(r.graph.weight(0, 2) == 1);
  CHECK(commutes(w, r));

  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph x = random_weighted(5, 0.5, 0.5, rng);
    if (!x.has_self_loops()) continue;
    const auto y = remove_self_loops(x);
    REQUIRE(commutes(x, y));
    for (const auto& a : all_profiles(5)) REQUIRE(limit_cycle_weighted(x, a).cycle.size() <= 2);
  }
}

TEST_CASE("removing a constant node decrements thresholds") {
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  const auto parts = remove_constant_node(path, ThresholdDist{1, 2, 1}, 0, Action::B);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].nodes == std::vector<Node>{1, 2});
  CHECK(parts[0].thresholds == ThresholdDist{1, 1});

  const auto split = remove_constant_node(path, ThresholdDist{1, 2, 1}, 1, Action::W);
  REQUIRE(split.size() == 2);
  CHECK(split[0].nodes == std::vector<Node>{0});
  CHECK(split[1].nodes == std::vector<Node>{2});
}
