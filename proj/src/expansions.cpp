#include "tlab/expansions.hpp"

#include <algorithm>
#include <cstdlib>

namespace tlab {

namespace {

using Kind = LiftEntry::Kind;

void require_thresholds(const Graph& g, const ThresholdDist& k) {
  if (k.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
}

ProfileLift doubled_lift(std::size_t n, Kind mirror_kind) {
  std::vector<LiftEntry> entries;
  entries.reserve(2 * n);
  for (Node i = 0; i < n; ++i) entries.push_back({Kind::Copy, i});
  for (Node i = 0; i < n; ++i) entries.push_back({mirror_kind, i});
  return ProfileLift(n, std::move(entries));
}

std::vector<NodeOrigin> doubled_map(std::size_t n) {
  std::vector<NodeOrigin> map;
  for (Node i = 0; i < n; ++i) map.push_back({NodeOrigin::Role::Original, i, 0});
  for (Node i = 0; i < n; ++i) map.push_back({NodeOrigin::Role::Mirror, i, 0});
  return map;
}

std::vector<Edge> doubled_edges(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, n + e.v});
    edges.push_back({e.v, n + e.u});
  }
  return edges;
}

}  // namespace

ProfileLift::ProfileLift(std::size_t source_size, std::vector<LiftEntry> entries)
    : source_size_(source_size), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if ((e.kind == Kind::Copy || e.kind == Kind::Negate) && e.source >= source_size_)
      throw Error(ErrorKind::NodeOutOfRange, "lift entry references a missing source node",
                  {e.source});
}

ProfileLift ProfileLift::identity(std::size_t n) {
  std::vector<LiftEntry> entries;
  for (Node i = 0; i < n; ++i) entries.push_back({Kind::Copy, i});
  return ProfileLift(n, std::move(entries));
}

ActionProfile ProfileLift::operator()(const ActionProfile& a) const {
  if (a.size() != source_size_)
    throw Error(ErrorKind::LengthMismatch, "profile length differs from the lift source");
  ActionProfile out(entries_.size());
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    const auto& e = entries_[t];
    switch (e.kind) {
      case Kind::Copy: out.set(t, a[e.source]); break;
      case Kind::Negate: out.set(t, !a[e.source]); break;
      case Kind::ConstB: out.set(t, true); break;
      case Kind::ConstW: break;
    }
  }
  return out;
}

ProfileLift ProfileLift::then(const ProfileLift& next) const {
  if (next.source_size_ != target_size())
    throw Error(ErrorKind::LengthMismatch, "composed lifts do not chain");
  std::vector<LiftEntry> entries;
  entries.reserve(next.entries_.size());
  for (const auto& e : next.entries_) {
    if (e.kind == Kind::ConstB || e.kind == Kind::ConstW) {
      entries.push_back(e);
      continue;
    }
    LiftEntry inner = entries_[e.source];
    if (e.kind == Kind::Negate) {
      switch (inner.kind) {
        case Kind::Copy: inner.kind = Kind::Negate; break;
        case Kind::Negate: inner.kind = Kind::Copy; break;
        case Kind::ConstB: inner.kind = Kind::ConstW; break;
        case Kind::ConstW: inner.kind = Kind::ConstB; break;
      }
    }
    entries.push_back(inner);
  }
  return ProfileLift(source_size_, std::move(entries));
}

bool ProfileLift::is_injective() const {
  std::vector<char> used(source_size_, 0);
  for (const auto& e : entries_)
    if (e.kind == Kind::Copy || e.kind == Kind::Negate) used[e.source] = 1;
  return std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
}

std::string to_string(NodeOrigin::Role role) {
  switch (role) {
    case NodeOrigin::Role::Original: return "original";
    case NodeOrigin::Role::Mirror: return "mirror";
    case NodeOrigin::Role::GadgetCenter: return "gadget-center";
    case NodeOrigin::Role::GadgetLeaf: return "gadget-leaf";
    case NodeOrigin::Role::BlockCopy: return "block-copy";
  }
  return "unknown";
}

ExpansionResult bipartite_expansion(const Graph& g, const ThresholdDist& k) {
  require_thresholds(g, k);
  const std::size_t n = g.size();
  std::vector<int> t(k.values());
  t.insert(t.end(), k.values().begin(), k.values().end());
  return {build_graph(2 * n, doubled_edges(g), Connectivity::NotRequired),
          ThresholdDist(std::move(t)), doubled_lift(n, Kind::Copy), doubled_map(n)};
}

bool is_symmetric_model(const Graph& g, const ThresholdDist& k) {
  require_thresholds(g, k);
  for (Node i = 0; i < g.size(); ++i) {
    const std::size_t d = g.degree(i);
    if (d % 2 == 0 || static_cast<std::size_t>(k[i]) != (d + 1) / 2) return false;
  }
  return true;
}

std::vector<Node> pivot_candidates(const Graph& g, const ThresholdDist& k) {
  require_thresholds(g, k);
  std::vector<Node> out;
  for (Node i = 0; i < g.size(); ++i) {
    const std::size_t d = g.degree(i);
    if (d % 2 == 0 || static_cast<std::size_t>(k[i]) != (d + 1) / 2) out.push_back(i);
  }
  return out;
}

ExpansionResult one_step_symmetric_expansion(const Graph& g, const ThresholdDist& k,
                                             std::optional<Node> pivot) {
  auto candidates = pivot_candidates(g, k);
  if (candidates.empty())
    throw Error(ErrorKind::AlreadySymmetric, "the model is already symmetric");
  const Node p = pivot.value_or(candidates.front());
  if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
    throw Error(ErrorKind::BadParameter,
                "node " + std::to_string(p) + " is not an eligible pivot", {p});

  const std::size_t n = g.size();
  const std::size_t d = g.degree(p);
  const std::size_t gadgets = d + 1;
  // k_p gadgets frozen at W and d - k_p + 1 at B keep the pivot's rule:
  // c + (d - k_p + 1) >= d + 1  <=>  c >= k_p. Thresholds above d+1 behave
  // like d+1 (the pivot never plays B), so the W count is clamped.
  const std::size_t frozen_white = std::min<std::size_t>(static_cast<std::size_t>(k[p]), gadgets);

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<int> t(k.values());
  t[p] = static_cast<int>(d + 1);
  auto lift_entries = ProfileLift::identity(n).entries();
  std::vector<NodeOrigin> node_map;
  for (Node i = 0; i < n; ++i) node_map.push_back({NodeOrigin::Role::Original, i, 0});
  for (std::size_t j = 0; j < gadgets; ++j) {
    const Node center = n + 3 * j;
    edges.push_back({p, center});
    edges.push_back({center, center + 1});
    edges.push_back({center, center + 2});
    t.insert(t.end(), {2, 1, 1});
    const Kind frozen = j < frozen_white ? Kind::ConstW : Kind::ConstB;
    lift_entries.insert(lift_entries.end(), 3, LiftEntry{frozen, 0});
    node_map.push_back({NodeOrigin::Role::GadgetCenter, p, j});
    node_map.push_back({NodeOrigin::Role::GadgetLeaf, p, j});
    node_map.push_back({NodeOrigin::Role::GadgetLeaf, p, j});
  }
  const auto connectivity = g.is_connected() ? Connectivity::Required : Connectivity::NotRequired;
  return {build_graph(n + 3 * gadgets, edges, connectivity), ThresholdDist(std::move(t)),
          ProfileLift(n, std::move(lift_entries)), std::move(node_map)};
}

ExpansionResult symmetric_expansion(const Graph& g, const ThresholdDist& k,
                                    const SymmetricOptions& options) {
  auto candidates = pivot_candidates(g, k);
  std::size_t total = g.size();
  for (Node p : candidates) total += 3 * (g.degree(p) + 1);
  if (total > options.max_nodes)
    throw Error(ErrorKind::GuardExceeded, "symmetric expansion would have " +
                                              std::to_string(total) + " nodes");
  ExpansionResult result{g, k, ProfileLift::identity(g.size()), {}};
  for (Node i = 0; i < g.size(); ++i) result.node_map.push_back({NodeOrigin::Role::Original, i, 0});
  if (options.highest_first) std::reverse(candidates.begin(), candidates.end());
  // Gadget nodes are symmetric on creation and original ids never move, so the
  // eligible set only shrinks by the pivot just expanded.
  for (Node p : candidates) {
    auto next = one_step_symmetric_expansion(result.graph, result.thresholds, p);
    std::vector<NodeOrigin> map = result.node_map;
    map.insert(map.end(), next.node_map.begin() + static_cast<std::ptrdiff_t>(result.graph.size()),
               next.node_map.end());
    result = {std::move(next.graph), std::move(next.thresholds), result.lift.then(next.lift),
              std::move(map)};
  }
  return result;
}

ExpansionResult inverted_to_primary(const Graph& g, const ThresholdDist& k) {
  require_thresholds(g, k);
  const std::size_t n = g.size();
  std::vector<int> t(2 * n);
  for (Node i = 0; i < n; ++i) {
    t[i] = std::max(0, static_cast<int>(g.degree(i)) - k[i] + 1);
    t[n + i] = k[i];
  }
  return {build_graph(2 * n, doubled_edges(g), Connectivity::NotRequired),
          ThresholdDist(std::move(t)), doubled_lift(n, Kind::Negate), doubled_map(n)};
}

ExpansionResult signed_to_primary(const WeightedGraph& w) {
  const std::size_t n = w.size();
  if (w.has_self_loops())
    throw Error(ErrorKind::WeightOutOfRange, "signed simulation does not accept self-loops");
  std::vector<std::int64_t> positive(n, 0), negative(n, 0);
  std::vector<Edge> edges;
  for (const auto& e : w.edges()) {
    if (e.w == 1) {
      edges.push_back({e.u, e.v});
      edges.push_back({n + e.u, n + e.v});
      ++positive[e.u], ++positive[e.v];
    } else if (e.w == -1) {
      edges.push_back({e.u, n + e.v});
      edges.push_back({e.v, n + e.u});
      ++negative[e.u], ++negative[e.v];
    } else {
      throw Error(ErrorKind::WeightOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has weight " + std::to_string(e.w) + ", expected -1 or +1",
                  {e.u, e.v});
    }
  }
  std::vector<int> t(2 * n);
  for (Node i = 0; i < n; ++i) {
    const std::int64_t k = w.threshold(i);
    if (k < -negative[i] || k > positive[i])
      throw Error(ErrorKind::ValidityViolated,
                  "node " + std::to_string(i) + " has threshold " + std::to_string(k) +
                      " outside [-d-, d+] = [" + std::to_string(-negative[i]) + "," +
                      std::to_string(positive[i]) + "]",
                  {i});
    t[i] = static_cast<int>(k + negative[i]);
    t[n + i] = static_cast<int>(positive[i] - k + 1);
  }
  return {build_graph(2 * n, edges, Connectivity::NotRequired), ThresholdDist(std::move(t)),
          doubled_lift(n, Kind::Negate), doubled_map(n)};
}

WeightedExpansionResult integer_weights_to_unit(const WeightedGraph& w, std::size_t max_nodes) {
  if (w.has_self_loops())
    throw Error(ErrorKind::BadParameter, "remove self-loops before the unit-weight blowup");
  const std::size_t n = w.size();
  const auto edges = w.edges();
  // Mixed-radix block index: digit e ranges over [|w_e|].
  std::vector<std::size_t> radix, stride;
  std::size_t blocks = 1;
  for (const auto& e : edges) {
    const auto r = static_cast<std::size_t>(std::llabs(e.w));
    radix.push_back(r);
    stride.push_back(blocks);
    if (blocks > max_nodes / r)
      throw Error(ErrorKind::GuardExceeded, "unit-weight blowup exceeds " +
                                                std::to_string(max_nodes) + " nodes");
    blocks *= r;
  }
  if (blocks * n > max_nodes)
    throw Error(ErrorKind::GuardExceeded, "unit-weight blowup needs " +
                                              std::to_string(blocks * n) + " nodes, guard is " +
                                              std::to_string(max_nodes));
  std::vector<WeightedEdge> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::int64_t sign = edges[e].w > 0 ? 1 : -1;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t digit = (b / stride[e]) % radix[e];
      const std::size_t base = b - digit * stride[e];
      // Block b links to every block agreeing with it off coordinate e; each
      // unordered pair is emitted once, from the u side.
      for (std::size_t v = 0; v < radix[e]; ++v) {
        const std::size_t other = base + v * stride[e];
        out.push_back({b * n + edges[e].u, other * n + edges[e].v, sign});
      }
    }
  }
  std::vector<std::int64_t> t;
  std::vector<LiftEntry> entries;
  std::vector<NodeOrigin> map;
  for (std::size_t b = 0; b < blocks; ++b)
    for (Node i = 0; i < n; ++i) {
      t.push_back(w.threshold(i));
      entries.push_back({Kind::Copy, i});
      map.push_back({NodeOrigin::Role::BlockCopy, i, b});
    }
  return {WeightedGraph(blocks * n, std::move(out), {}, std::move(t), Connectivity::NotRequired),
          ProfileLift(n, std::move(entries)), std::move(map)};
}

WeightedExpansionResult remove_self_loops(const WeightedGraph& w) {
  const std::size_t n = w.size();
  std::vector<WeightedEdge> edges;
  for (const auto& e : w.edges()) {
    edges.push_back(e);
    edges.push_back({n + e.u, n + e.v, e.w});
  }
  for (Node i = 0; i < n; ++i)
    if (w.self_loop(i) != 0) edges.push_back({i, n + i, w.self_loop(i)});
  std::vector<std::int64_t> t(w.thresholds());
  t.insert(t.end(), w.thresholds().begin(), w.thresholds().end());
  return {WeightedGraph(2 * n, std::move(edges), {}, std::move(t), Connectivity::NotRequired),
          doubled_lift(n, Kind::Copy), doubled_map(n)};
}

std::vector<Component> remove_constant_node(const Graph& g, const ThresholdDist& k, Node i,
                                            Action c) {
  require_thresholds(g, k);
  if (i >= g.size())
    throw Error(ErrorKind::NodeOutOfRange, "node " + std::to_string(i) + " is not in the graph", {i});
  const std::size_t n = g.size();
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::vector<Component> out;
  for (Node root = 0; root < n; ++root) {
    if (root == i || comp[root] != SIZE_MAX) continue;
    std::vector<Node> members{root}, stack{root};
    comp[root] = out.size();
    while (!stack.empty()) {
      Node v = stack.back();
      stack.pop_back();
      for (Node u : g.neighbors(v))
        if (u != i && comp[u] == SIZE_MAX) {
          comp[u] = out.size();
          members.push_back(u);
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    std::vector<std::size_t> local(n, SIZE_MAX);
    for (std::size_t m = 0; m < members.size(); ++m) local[members[m]] = m;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
      if (e.u != i && e.v != i && local[e.u] != SIZE_MAX && local[e.v] != SIZE_MAX)
        edges.push_back({local[e.u], local[e.v]});
    std::vector<int> t;
    for (Node v : members) {
      int kv = k[v];
      if (c == Action::B && g.has_edge(v, i)) kv = std::max(kv - 1, 0);
      t.push_back(kv);
    }
    out.push_back({build_graph(members.size(), edges), ThresholdDist(std::move(t)),
                   std::move(members)});
  }
  return out;
}

}  // namespace tlab
