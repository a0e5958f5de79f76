#include "tlab/dynamics.hpp"

#include <algorithm>

namespace tlab {

namespace {

void require_length(std::size_t n, const ActionProfile& a) {
  if (a.size() != n)
    throw Error(ErrorKind::LengthMismatch,
                "profile has length " + std::to_string(a.size()) + ", graph has " +
                    std::to_string(n) + " nodes");
}

std::size_t black_neighbors(const Graph& g, const ActionProfile& a, Node i) {
  std::size_t c = 0;
  for (Node j : g.neighbors(i)) c += a[j];
  return c;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::vector<WeightedEdge> edges,
                             std::vector<std::int64_t> self_loops,
                             std::vector<std::int64_t> thresholds,
                             Connectivity connectivity)
    : self_loops_(std::move(self_loops)), thresholds_(std::move(thresholds)) {
  if (self_loops_.empty()) self_loops_.assign(n, 0);
  if (self_loops_.size() != n || thresholds_.size() != n)
    throw Error(ErrorKind::LengthMismatch,
                "self-loop and threshold vectors must have length n=" + std::to_string(n));
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (auto& e : edges) {
    if (e.w == 0)
      throw Error(ErrorKind::InvalidInput,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has weight 0",
                  {e.u, e.v});
    if (e.u > e.v) std::swap(e.u, e.v);
    plain.push_back({e.u, e.v});
  }
  graph_ = build_graph(n, plain, connectivity);
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.w});
    adjacency_[e.v].push_back({e.u, e.w});
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool WeightedGraph::has_self_loops() const noexcept {
  return std::any_of(self_loops_.begin(), self_loops_.end(),
                     [](std::int64_t w) { return w != 0; });
}

std::int64_t WeightedGraph::weight(Node i, Node j) const noexcept {
  if (i == j) return self_loops_[i];
  const auto& adj = adjacency_[i];
  auto it = std::lower_bound(adj.begin(), adj.end(), std::pair<Node, std::int64_t>(j, INT64_MIN));
  return it != adj.end() && it->first == j ? it->second : 0;
}

WeightedGraph WeightedGraph::with_thresholds(std::vector<std::int64_t> thresholds) const {
  if (thresholds.size() != size())
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
  WeightedGraph w = *this;
  w.thresholds_ = std::move(thresholds);
  return w;
}

WeightedGraph to_weighted(const Graph& g, const ThresholdDist& k) {
  if (k.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
  std::vector<WeightedEdge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 1});
  std::vector<std::int64_t> t(k.values().begin(), k.values().end());
  return WeightedGraph(g.size(), std::move(edges), {}, std::move(t),
                       g.is_connected() ? Connectivity::Required : Connectivity::NotRequired);
}

ActionProfile step(const Graph& g, const ThresholdDist& k, const ActionProfile& a) {
  require_length(g.size(), a);
  if (k.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
  ActionProfile out(g.size());
  for (Node i = 0; i < g.size(); ++i)
    out.set(i, black_neighbors(g, a, i) >= static_cast<std::size_t>(k[i]));
  return out;
}

ActionProfile step_types(const Graph& g, const TypeDist& q, const ActionProfile& a) {
  require_length(g.size(), a);
  if (q.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "type vector length differs from n");
  ActionProfile out(g.size());
  for (Node i = 0; i < g.size(); ++i) {
    auto count = static_cast<std::int64_t>(black_neighbors(g, a, i));
    out.set(i, Rational(count) > q[i] * static_cast<std::int64_t>(g.degree(i)));
  }
  return out;
}

ActionProfile step_restricted(const Graph& g, const ThresholdDist& k,
                              const ActionProfile& a, std::span<const Node> part) {
  require_length(g.size(), a);
  if (k.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
  ActionProfile out = a;
  for (Node i : part) {
    if (i >= g.size())
      throw Error(ErrorKind::NodeOutOfRange,
                  "node " + std::to_string(i) + " is not in the graph", {i});
    out.set(i, black_neighbors(g, a, i) >= static_cast<std::size_t>(k[i]));
  }
  return out;
}

ActionProfile step_inverted(const Graph& g, const ThresholdDist& k,
                            const ActionProfile& a) {
  return step(g, k, a).inverted();
}

ActionProfile step_weighted(const WeightedGraph& w, const ActionProfile& a) {
  require_length(w.size(), a);
  ActionProfile out(w.size());
  for (Node i = 0; i < w.size(); ++i) {
    std::int64_t sum = a[i] ? w.self_loop(i) : 0;
    for (auto [j, wij] : w.neighbors(i))
      if (a[j]) sum += wij;
    out.set(i, sum >= w.threshold(i));
  }
  return out;
}

std::vector<std::int64_t> weighted_types_to_thresholds(const WeightedGraph& w,
                                                       const TypeDist& q) {
  if (q.size() != w.size())
    throw Error(ErrorKind::LengthMismatch, "type vector length differs from n");
  std::vector<std::int64_t> k(w.size());
  for (Node i = 0; i < w.size(); ++i) {
    std::int64_t total = w.self_loop(i);
    for (auto [j, wij] : w.neighbors(i)) total += wij;
    k[i] = floor(q[i] * total) + 1;
  }
  return k;
}

std::size_t convergence_envelope(std::size_t edges, std::size_t n) noexcept {
  return 14 * edges + 6 * n;
}

std::size_t default_guard(std::size_t edges, std::size_t n) noexcept {
  return 10 * convergence_envelope(edges, n) + 4;
}

LimitReport limit_cycle(const Graph& g, const ThresholdDist& k, const ActionProfile& a) {
  return limit_cycle([&](const ActionProfile& x) { return step(g, k, x); }, a,
                     default_guard(g.edge_count(), g.size()));
}

LimitReport limit_cycle_types(const Graph& g, const TypeDist& q, const ActionProfile& a) {
  return limit_cycle([&](const ActionProfile& x) { return step_types(g, q, x); }, a,
                     default_guard(g.edge_count(), g.size()));
}

LimitReport limit_cycle_inverted(const Graph& g, const ThresholdDist& k,
                                 const ActionProfile& a) {
  return limit_cycle([&](const ActionProfile& x) { return step_inverted(g, k, x); }, a,
                     default_guard(g.edge_count(), g.size()));
}

LimitReport limit_cycle_weighted(const WeightedGraph& w, const ActionProfile& a) {
  // Weighted instances are simulated by unit-weight blowups whose size scales
  // with the absolute weights, so the guard scales with the total weight.
  std::size_t total = 0;
  for (const auto& e : w.edges()) total += static_cast<std::size_t>(std::abs(e.w));
  for (auto l : w.self_loops()) total += 2 * static_cast<std::size_t>(std::abs(l));
  return limit_cycle([&](const ActionProfile& x) { return step_weighted(w, x); }, a,
                     default_guard(total, 2 * w.size()) * (1 + total));
}

std::size_t conflict_links(const Graph& g, const ActionProfile& a) {
  require_length(g.size(), a);
  std::size_t c = 0;
  for (const Edge& e : g.edges()) c += a[e.u] != a[e.v];
  return c;
}

std::vector<Action> strong_assignments(const Graph& g, const ThresholdDist& k, Node i,
                                       std::size_t guard) {
  if (i >= g.size())
    throw Error(ErrorKind::NodeOutOfRange, "node " + std::to_string(i) + " is not in the graph", {i});
  if (k.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
  // Closed radius-2 neighbourhood, node i first.
  std::vector<Node> local{i};
  for (Node j : g.neighbors(i)) local.push_back(j);
  for (Node j : g.neighbors(i))
    for (Node l : g.neighbors(j))
      if (std::find(local.begin(), local.end(), l) == local.end()) local.push_back(l);
  const std::size_t free_nodes = local.size() - 1;
  if (free_nodes >= 63 || (std::size_t{1} << free_nodes) > guard)
    throw Error(ErrorKind::GuardExceeded,
                "radius-2 neighbourhood of node " + std::to_string(i) + " has " +
                    std::to_string(free_nodes) + " free nodes",
                {i});
  std::vector<std::size_t> slot(g.size(), SIZE_MAX);
  for (std::size_t s = 0; s < local.size(); ++s) slot[local[s]] = s;

  std::vector<Action> result;
  for (Action c : {Action::B, Action::W}) {
    bool strong = true;
    std::vector<bool> bits(local.size());
    for (std::uint64_t code = 0; strong && code < (std::uint64_t{1} << free_nodes); ++code) {
      bits[0] = c == Action::B;
      for (std::size_t s = 1; s < local.size(); ++s) bits[s] = (code >> (s - 1)) & 1u;
      std::size_t count = 0;
      for (Node j : g.neighbors(i)) {
        std::size_t cj = 0;
        for (Node l : g.neighbors(j)) cj += bits[slot[l]];
        count += cj >= static_cast<std::size_t>(k[j]);
      }
      bool next = count >= static_cast<std::size_t>(k[i]);
      strong = next == (c == Action::B);
    }
    if (strong) result.push_back(c);
  }
  return result;
}

RingNeighborhood ring_neighborhood(const Graph& g, Node i) {
  auto other = [&](Node v, Node from) {
    auto nb = g.neighbors(v);
    if (nb.size() != 2)
      throw Error(ErrorKind::BadParameter,
                  "node " + std::to_string(v) + " does not have degree 2", {v});
    return nb[0] == from ? nb[1] : nb[0];
  };
  auto nb = g.neighbors(i);
  if (nb.size() != 2)
    throw Error(ErrorKind::BadParameter, "node " + std::to_string(i) + " does not have degree 2", {i});
  RingNeighborhood r{nb[0], nb[1], 0, 0};
  r.pp = other(r.p, i);
  r.ss = other(r.s, i);
  return r;
}

int ring_table_row(const Graph& g, const ThresholdDist& k, Node i) {
  auto r = ring_neighborhood(g, i);
  auto is_and = [&](Node v) {
    if (k[v] != 1 && k[v] != 2)
      throw Error(ErrorKind::BadParameter,
                  "ring table needs thresholds in {1,2}; node " + std::to_string(v), {v});
    return k[v] == 2 ? 1 : 0;
  };
  return 1 + 4 * is_and(r.p) + 2 * is_and(i) + is_and(r.s);
}

bool ring_table_value(int row, bool a_i, bool a_ss, bool a_pp) {
  switch (row) {
    case 1: return a_i || (a_ss || a_pp);
    case 2: return a_i || a_pp;
    case 3: return a_i || (a_ss && a_pp);
    case 4: return a_i && a_ss;
    case 5: return a_i || a_ss;
    case 6: return a_i && (a_ss || a_pp);
    case 7: return a_i && a_pp;
    case 8: return a_i && (a_ss && a_pp);
    default: throw Error(ErrorKind::BadParameter, "ring table row must be 1..8");
  }
}

bool ring_row_strong(int row, Action c) {
  const bool black_strong = row == 1 || row == 2 || row == 3 || row == 5;
  if (row < 1 || row > 8) throw Error(ErrorKind::BadParameter, "ring table row must be 1..8");
  return (c == Action::B) == black_strong;
}

}  // namespace tlab
