#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tlab/dynamics.hpp"
#include "tlab/graph.hpp"
#include "tlab/reductions.hpp"

namespace tlab {

using Rng = std::mt19937_64;

/// One representative of every isomorphism class of connected graphs on n
/// nodes (1 <= n <= 7), via the minimum permuted edge mask.
std::vector<Graph> connected_graphs(std::size_t n);
/// One representative of every isomorphism class of trees on n nodes
/// (1 <= n <= 12), from Pruefer sequences and a centre-rooted canonical code.
std::vector<Graph> trees(std::size_t n);

/// Calls visit(k) for every k with 0 <= k_i <= d_i + 1 (odometer order).
template <class Visit>
void for_each_threshold(const Graph& g, Visit&& visit) {
  const std::size_t n = g.size();
  std::vector<int> k(n, 0);
  for (;;) {
    visit(ThresholdDist(k));
    std::size_t i = 0;
    while (i < n && k[i] == static_cast<int>(g.degree(i)) + 1) k[i++] = 0;
    if (i == n) return;
    ++k[i];
  }
}

/// Random spanning tree plus each remaining edge with probability p.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);
/// k_i uniform in [0, d_i + 1].
ThresholdDist random_thresholds(const Graph& g, Rng& rng);
ActionProfile random_profile(std::size_t n, Rng& rng);

/// Weights from {-2,-1,1,2}, each self-loop present with probability
/// loop_p (weight from the same set), thresholds in [-4, 4].
WeightedGraph random_weighted(std::size_t n, double edge_p, double loop_p, Rng& rng);
/// Weights +-1, no loops, thresholds in [-d-_i, d+_i].
WeightedGraph random_signed(std::size_t n, double edge_p, Rng& rng);

/// Monotone 2-DNF over n variables (every variable occurs) with m clauses.
/// Requires n <= 2m.
Formula random_monotone_2dnf(std::size_t n, std::size_t m, Rng& rng);
/// 3-CNF with m clauses of 1..3 literals over n variables.
Formula random_3cnf(std::size_t n, std::size_t m, Rng& rng);
/// Monotone 2-CNF with m clauses of 1..2 literals over n variables.
Formula random_monotone_2cnf(std::size_t n, std::size_t m, Rng& rng);

}  // namespace tlab
