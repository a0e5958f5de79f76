#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tlab/profile.hpp"
#include "tlab/rational.hpp"

namespace tlab {

/// Undirected edge in canonical form, u < v.
struct Edge {
  Node u = 0;
  Node v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Connectivity { Required, NotRequired };

/// Undirected simple graph on nodes 0..n-1 with sorted adjacency lists.
///
/// Graphs from `build_graph` are connected unless the caller opts out; the
/// transforms in expansions.hpp opt out because doubling a bipartite graph
/// yields two components.
class Graph {
 public:
  Graph() = default;

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::span<const Node> neighbors(Node i) const noexcept { return adjacency_[i]; }
  std::size_t degree(Node i) const noexcept { return adjacency_[i].size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(Node i, Node j) const noexcept;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>, Connectivity);
  std::vector<std::vector<Node>> adjacency_;
  std::vector<Edge> edges_;
};

/// Validates and builds a graph. Edge endpoints may come in either order.
/// Throws SelfLoop, DuplicateEdge, NodeOutOfRange, or Disconnected.
Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  Connectivity connectivity = Connectivity::Required);
Graph build_graph(std::size_t n, std::initializer_list<Edge> edges,
                  Connectivity connectivity = Connectivity::Required);

/// Natural thresholds k_i. Zero and values above the degree are allowed.
class ThresholdDist {
 public:
  ThresholdDist() = default;
  ThresholdDist(std::vector<int> k);
  ThresholdDist(std::initializer_list<int> k) : ThresholdDist(std::vector<int>(k)) {}
  static ThresholdDist uniform(std::size_t n, int k) {
    return ThresholdDist(std::vector<int>(n, k));
  }

  std::size_t size() const noexcept { return k_.size(); }
  int operator[](Node i) const noexcept { return k_[i]; }
  void set(Node i, int k);
  const std::vector<int>& values() const noexcept { return k_; }

  friend bool operator==(const ThresholdDist&, const ThresholdDist&) = default;

 private:
  std::vector<int> k_;
};

/// Exact rational types q_i in [0,1].
class TypeDist {
 public:
  TypeDist() = default;
  TypeDist(std::vector<Rational> q);

  std::size_t size() const noexcept { return q_.size(); }
  const Rational& operator[](Node i) const noexcept { return q_[i]; }
  const std::vector<Rational>& values() const noexcept { return q_; }
  Rational l1_norm() const;

  friend bool operator==(const TypeDist&, const TypeDist&) = default;

 private:
  std::vector<Rational> q_;
};

/// A primary-model instance (G, k).
struct Instance {
  Graph graph;
  ThresholdDist thresholds;
};

/// Sides of a bipartition: `even` holds nodes at even BFS distance from the
/// lowest node of their component, `odd` the rest. Both sorted ascending.
struct TwoPartition {
  std::vector<Node> odd;
  std::vector<Node> even;
};

/// True iff 1 <= k_i <= d_i.
bool is_valid_node(const Graph& g, const ThresholdDist& k, Node i);

/// Breadth-first 2-colouring from node 0 (from the lowest unvisited node for
/// each further component). Throws NotBipartite with an odd cycle witness.
TwoPartition two_partition(const Graph& g);
bool is_bipartite(const Graph& g);

/// k_i = floor(q_i d_i) + 1, the least integer with
/// (count >= k_i) <=> (count > q_i d_i).
ThresholdDist types_to_thresholds(const Graph& g, const TypeDist& q);

}  // namespace tlab
