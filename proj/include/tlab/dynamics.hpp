#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tlab/error.hpp"
#include "tlab/graph.hpp"
#include "tlab/profile.hpp"

namespace tlab {

struct WeightedEdge {
  Node u = 0;
  Node v = 0;
  std::int64_t w = 0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Integer-weighted graph with optional self-loops and integer thresholds.
///
/// Weights are symmetric by construction (each undirected edge carries one
/// weight). Self-loop weight 0 means "no loop".
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Throws like build_graph for the underlying graph, plus InvalidInput for
  /// zero edge weights and LengthMismatch for the per-node vectors.
  /// `self_loops` may be empty (no loops).
  WeightedGraph(std::size_t n, std::vector<WeightedEdge> edges,
                std::vector<std::int64_t> self_loops,
                std::vector<std::int64_t> thresholds,
                Connectivity connectivity = Connectivity::Required);

  std::size_t size() const noexcept { return thresholds_.size(); }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  /// (neighbour, weight) pairs sorted by neighbour; excludes the self-loop.
  std::span<const std::pair<Node, std::int64_t>> neighbors(Node i) const noexcept {
    return adjacency_[i];
  }
  std::int64_t self_loop(Node i) const noexcept { return self_loops_[i]; }
  bool has_self_loops() const noexcept;
  std::int64_t threshold(Node i) const noexcept { return thresholds_[i]; }
  const std::vector<std::int64_t>& thresholds() const noexcept { return thresholds_; }
  const std::vector<std::int64_t>& self_loops() const noexcept { return self_loops_; }
  std::int64_t weight(Node i, Node j) const noexcept;
  /// The underlying unweighted graph (self-loops dropped).
  const Graph& graph() const noexcept { return graph_; }

  /// Same structure with new thresholds.
  WeightedGraph with_thresholds(std::vector<std::int64_t> thresholds) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.edges_ == b.edges_ && a.self_loops_ == b.self_loops_ &&
           a.thresholds_ == b.thresholds_;
  }

 private:
  Graph graph_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::pair<Node, std::int64_t>>> adjacency_;
  std::vector<std::int64_t> self_loops_;
  std::vector<std::int64_t> thresholds_;
};

/// Unit weights, no loops, thresholds copied from k.
WeightedGraph to_weighted(const Graph& g, const ThresholdDist& k);

/// out_i = B iff at least k_i neighbours play B.
ActionProfile step(const Graph& g, const ThresholdDist& k, const ActionProfile& a);
/// out_i = B iff strictly more than q_i d_i neighbours play B (exact).
ActionProfile step_types(const Graph& g, const TypeDist& q, const ActionProfile& a);
/// Updates only the nodes in `part`; every other node keeps its action.
ActionProfile step_restricted(const Graph& g, const ThresholdDist& k,
                              const ActionProfile& a, std::span<const Node> part);
/// Complement of `step`: B iff at most k_i - 1 neighbours play B.
ActionProfile step_inverted(const Graph& g, const ThresholdDist& k,
                            const ActionProfile& a);
/// B iff the weighted B-sum over neighbours (and self when looped) >= k_i.
ActionProfile step_weighted(const WeightedGraph& w, const ActionProfile& a);

/// k_i = floor(theta_i) + 1 with theta_i = q_i * sum of w_ij over the closed
/// neighbourhood (self-loop included when present). Ignores w's thresholds.
std::vector<std::int64_t> weighted_types_to_thresholds(const WeightedGraph& w,
                                                       const TypeDist& q);

struct LimitReport {
  std::size_t transient = 0;
  std::vector<ActionProfile> cycle;
  std::size_t trajectory_length = 0;
};

/// 14|E| + 6n: the convergence-time envelope used throughout the test suites.
std::size_t convergence_envelope(std::size_t edges, std::size_t n) noexcept;
/// 10 * envelope + 4.
std::size_t default_guard(std::size_t edges, std::size_t n) noexcept;

/// Iterates `step_map` from `start`, recording first-visit times. On the first
/// revisit at time t of a state first seen at time s, returns transient s and
/// the states s..t-1. Throws GuardExceeded once more than `guard` distinct
/// states have been visited. Makes no assumption about the cycle length.
template <class StepMap>
LimitReport limit_cycle(StepMap&& step_map, const ActionProfile& start,
                        std::size_t guard) {
  if (guard == 0) throw Error(ErrorKind::BadParameter, "guard must be >= 1");
  std::unordered_map<ActionProfile, std::size_t, ActionProfileHash> first_seen;
  std::vector<ActionProfile> trajectory;
  ActionProfile a = start;
  for (std::size_t t = 0;; ++t) {
    auto [it, inserted] = first_seen.emplace(a, t);
    if (!inserted) {
      LimitReport report;
      report.transient = it->second;
      report.cycle.assign(trajectory.begin() + static_cast<std::ptrdiff_t>(it->second),
                          trajectory.end());
      report.trajectory_length = t;
      return report;
    }
    if (first_seen.size() > guard)
      throw Error(ErrorKind::GuardExceeded,
                  "trajectory exceeded " + std::to_string(guard) + " states");
    trajectory.push_back(a);
    a = step_map(a);
  }
}

LimitReport limit_cycle(const Graph& g, const ThresholdDist& k, const ActionProfile& a);
LimitReport limit_cycle_types(const Graph& g, const TypeDist& q, const ActionProfile& a);
LimitReport limit_cycle_inverted(const Graph& g, const ThresholdDist& k,
                                 const ActionProfile& a);
LimitReport limit_cycle_weighted(const WeightedGraph& w, const ActionProfile& a);

/// Number of edges whose endpoints play different actions.
std::size_t conflict_links(const Graph& g, const ActionProfile& a);

/// Actions c such that every profile with a_i = c keeps node i at c after two
/// steps. Enumerates the radius-2 closed neighbourhood of i; throws
/// GuardExceeded when that needs more than `guard` local profiles.
/// Result is ordered B before W.
std::vector<Action> strong_assignments(const Graph& g, const ThresholdDist& k, Node i,
                                       std::size_t guard = std::size_t{1} << 22);

/// Two-step rule on 2-regular graphs. With neighbours p = first and s = second
/// neighbour of i, pp/ss the far neighbours of p/s, and each node acting as OR
/// when k = 1 and AND when k = 2, the eight rows describe step^2(a)_i.
struct RingNeighborhood {
  Node p, s, pp, ss;
};
RingNeighborhood ring_neighborhood(const Graph& g, Node i);
/// Row 1..8 from the (p, i, s) pattern; k outside {1,2} throws BadParameter.
int ring_table_row(const Graph& g, const ThresholdDist& k, Node i);
/// Table expression for `row` applied to a_i, a_ss, a_pp.
bool ring_table_value(int row, bool a_i, bool a_ss, bool a_pp);
/// Row of the table in which `c` is a strong assignment for node i.
bool ring_row_strong(int row, Action c);

}  // namespace tlab
