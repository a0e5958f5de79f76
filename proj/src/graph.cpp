#include "tlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "tlab/error.hpp"

namespace tlab {

bool Graph::has_edge(Node i, Node j) const noexcept {
  if (i >= size() || j >= size()) return false;
  const auto& adj = adjacency_[i];
  return std::binary_search(adj.begin(), adj.end(), j);
}

bool Graph::is_connected() const {
  const std::size_t n = size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node u : adjacency_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  Connectivity connectivity) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "a graph needs at least one node");
  Graph g;
  g.adjacency_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u >= n || raw.v >= n) {
      Node bad = raw.u >= n ? raw.u : raw.v;
      throw Error(ErrorKind::NodeOutOfRange,
                  "edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                      "} references node " + std::to_string(bad) + " >= n=" +
                      std::to_string(n),
                  {raw.u, raw.v});
    }
    if (raw.u == raw.v)
      throw Error(ErrorKind::SelfLoop,
                  "self-loop at node " + std::to_string(raw.u), {raw.u});
    g.edges_.push_back({std::min(raw.u, raw.v), std::max(raw.u, raw.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
      dup != g.edges_.end())
    throw Error(ErrorKind::DuplicateEdge,
                "duplicate edge {" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + "}",
                {dup->u, dup->v});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());

  if (connectivity == Connectivity::Required && !g.is_connected()) {
    std::vector<char> seen(n, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      Node v = stack.back();
      stack.pop_back();
      for (Node u : g.adjacency_[v])
        if (!seen[u]) seen[u] = 1, stack.push_back(u);
    }
    Node first = static_cast<Node>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw Error(ErrorKind::Disconnected,
                "graph is disconnected: node " + std::to_string(first) +
                    " is unreachable from node 0",
                {first});
  }
  return g;
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges,
                  Connectivity connectivity) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()),
                     connectivity);
}

ThresholdDist::ThresholdDist(std::vector<int> k) : k_(std::move(k)) {
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (k_[i] < 0)
      throw Error(ErrorKind::InvalidInput,
                  "threshold of node " + std::to_string(i) + " is negative", {i});
}

void ThresholdDist::set(Node i, int k) {
  if (i >= k_.size())
    throw Error(ErrorKind::NodeOutOfRange, "threshold index out of range", {i});
  if (k < 0)
    throw Error(ErrorKind::InvalidInput,
                "threshold of node " + std::to_string(i) + " is negative", {i});
  k_[i] = k;
}

TypeDist::TypeDist(std::vector<Rational> q) : q_(std::move(q)) {
  for (std::size_t i = 0; i < q_.size(); ++i)
    if (q_[i] < 0 || q_[i] > 1)
      throw Error(ErrorKind::InvalidInput,
                  "type of node " + std::to_string(i) + " is outside [0,1]", {i});
}

Rational TypeDist::l1_norm() const {
  Rational s = 0;
  for (const auto& q : q_) s += q;
  return s;
}

bool is_valid_node(const Graph& g, const ThresholdDist& k, Node i) {
  return k[i] >= 1 && static_cast<std::size_t>(k[i]) <= g.degree(i);
}

namespace {

// BFS 2-colouring; returns the odd cycle closed by the first conflicting edge.
std::vector<Node> bipartition(const Graph& g, std::vector<int>& side) {
  const std::size_t n = g.size();
  side.assign(n, -1);
  std::vector<Node> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  for (Node root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    parent[root] = root;
    std::queue<Node> queue;
    queue.push(root);
    while (!queue.empty()) {
      Node v = queue.front();
      queue.pop();
      for (Node u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push(u);
        } else if (side[u] == side[v]) {
          // Walk both endpoints up to their lowest common ancestor.
          std::vector<Node> left{v}, right{u};
          Node a = v, b = u;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // the ancestor is already the last entry of `left`
          std::vector<Node> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          return cycle;
        }
      }
    }
  }
  return {};
}

}  // namespace

TwoPartition two_partition(const Graph& g) {
  std::vector<int> side;
  auto cycle = bipartition(g, side);
  if (!cycle.empty()) {
    std::string text;
    for (Node v : cycle) text += (text.empty() ? "" : ",") + std::to_string(v);
    throw Error(ErrorKind::NotBipartite, "odd cycle (" + text + ")", cycle);
  }
  TwoPartition p;
  for (Node i = 0; i < g.size(); ++i) (side[i] == 0 ? p.even : p.odd).push_back(i);
  return p;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side;
  return bipartition(g, side).empty();
}

ThresholdDist types_to_thresholds(const Graph& g, const TypeDist& q) {
  if (q.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "type vector length differs from n");
  std::vector<int> k(g.size());
  for (Node i = 0; i < g.size(); ++i)
    k[i] = static_cast<int>(floor(q[i] * static_cast<std::int64_t>(g.degree(i)))) + 1;
  return ThresholdDist(std::move(k));
}

}  // namespace tlab
