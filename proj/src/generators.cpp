#include "tlab/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "tlab/error.hpp"

namespace tlab {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Canonical code of the tree rooted at `v` (parent `from`).
std::string rooted_code(const std::vector<std::vector<Node>>& adj, Node v, Node from) {
  std::vector<std::string> children;
  for (Node u : adj[v])
    if (u != from) children.push_back(rooted_code(adj, u, v));
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (auto& c : children) code += c;
  return code + ")";
}

std::string tree_code(const Graph& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Node>> adj(n);
  for (Node i = 0; i < n; ++i) adj[i].assign(t.neighbors(i).begin(), t.neighbors(i).end());
  // Peel leaves layer by layer; the last one or two nodes are the centres.
  std::vector<std::size_t> deg(n);
  std::vector<Node> layer;
  for (Node i = 0; i < n; ++i) {
    deg[i] = adj[i].size();
    if (deg[i] <= 1) layer.push_back(i);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Node> next;
    for (Node v : layer)
      for (Node u : adj[v])
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::string best;
  for (Node c : layer) {
    auto code = rooted_code(adj, c, SIZE_MAX);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n < 1 || n > 6)
    throw Error(ErrorKind::BadParameter, "connected graph catalogue supports 1 <= n <= 6");
  std::vector<Edge> all;
  for (Node i = 0; i < n; ++i)
    for (Node j = i + 1; j < n; ++j) all.push_back({i, j});
  const std::size_t m = all.size();
  std::map<std::pair<Node, Node>, std::size_t> index;
  for (std::size_t e = 0; e < m; ++e) index[{all[e].u, all[e].v}] = e;
  // Each permutation as a map on edge indices.
  std::vector<std::vector<std::size_t>> perms;
  std::vector<Node> p(n);
  std::iota(p.begin(), p.end(), Node{0});
  do {
    std::vector<std::size_t> map(m);
    for (std::size_t e = 0; e < m; ++e) {
      Node a = p[all[e].u], b = p[all[e].v];
      map[e] = index[{std::min(a, b), std::max(a, b)}];
    }
    perms.push_back(std::move(map));
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint64_t> canonical;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    // Connectivity by flood fill over the mask.
    std::uint64_t reached = 1, frontier = 1;
    while (frontier) {
      std::uint64_t grow = 0;
      for (std::size_t e = 0; e < m; ++e)
        if ((mask >> e) & 1u) {
          if ((frontier >> all[e].u) & 1u) grow |= std::uint64_t{1} << all[e].v;
          if ((frontier >> all[e].v) & 1u) grow |= std::uint64_t{1} << all[e].u;
        }
      frontier = grow & ~reached;
      reached |= grow;
    }
    if (reached != (std::uint64_t{1} << n) - 1) continue;
    std::uint64_t best = mask;
    for (const auto& map : perms) {
      std::uint64_t image = 0;
      for (std::size_t e = 0; e < m; ++e)
        if ((mask >> e) & 1u) image |= std::uint64_t{1} << map[e];
      best = std::min(best, image);
    }
    if (best == mask) canonical.insert(mask);
  }
  std::vector<Graph> out;
  for (auto mask : canonical) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < m; ++e)
      if ((mask >> e) & 1u) edges.push_back(all[e]);
    out.push_back(build_graph(n, edges));
  }
  return out;
}

std::vector<Graph> trees(std::size_t n) {
  if (n < 1 || n > 12) throw Error(ErrorKind::BadParameter, "tree catalogue supports 1 <= n <= 12");
  std::vector<Graph> level{build_graph(1, {})};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& t : level)
      for (Node v = 0; v < t.size(); ++v) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.push_back({v, size - 1});
        Graph grown = build_graph(size, edges);
        next.try_emplace(tree_code(grown), std::move(grown));
      }
    level.clear();
    for (auto& [code, t] : next) level.push_back(std::move(t));
  }
  return level;
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "a graph needs at least one node");
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), Node{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<Node, Node>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    Node a = order[i], b = order[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  for (Node i = 0; i < n; ++i)
    for (Node j = i + 1; j < n; ++j)
      if (!edges.count({i, j}) && coin(rng, p)) edges.insert({i, j});
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return build_graph(n, list);
}

ThresholdDist random_thresholds(const Graph& g, Rng& rng) {
  std::vector<int> k(g.size());
  for (Node i = 0; i < g.size(); ++i) k[i] = uniform_int(rng, 0, static_cast<int>(g.degree(i)) + 1);
  return ThresholdDist(std::move(k));
}

ActionProfile random_profile(std::size_t n, Rng& rng) {
  ActionProfile a(n);
  for (Node i = 0; i < n; ++i) a.set(i, coin(rng, 0.5));
  return a;
}

WeightedGraph random_weighted(std::size_t n, double edge_p, double loop_p, Rng& rng) {
  static constexpr std::int64_t kWeights[] = {-2, -1, 1, 2};
  const Graph g = random_connected_graph(n, edge_p, rng);
  std::vector<WeightedEdge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, kWeights[uniform_int(rng, 0, 3)]});
  std::vector<std::int64_t> loops(n, 0), k(n);
  for (Node i = 0; i < n; ++i) {
    if (coin(rng, loop_p)) loops[i] = kWeights[uniform_int(rng, 0, 3)];
    k[i] = uniform_int(rng, -4, 4);
  }
  return WeightedGraph(n, std::move(edges), std::move(loops), std::move(k));
}

WeightedGraph random_signed(std::size_t n, double edge_p, Rng& rng) {
  const Graph g = random_connected_graph(n, edge_p, rng);
  std::vector<WeightedEdge> edges;
  std::vector<int> pos(n, 0), neg(n, 0);
  for (const Edge& e : g.edges()) {
    const std::int64_t w = coin(rng, 0.5) ? 1 : -1;
    edges.push_back({e.u, e.v, w});
    auto& side = w > 0 ? pos : neg;
    ++side[e.u], ++side[e.v];
  }
  std::vector<std::int64_t> k(n);
  for (Node i = 0; i < n; ++i) k[i] = uniform_int(rng, -neg[i], pos[i]);
  return WeightedGraph(n, std::move(edges), {}, std::move(k));
}

Formula random_monotone_2dnf(std::size_t n, std::size_t m, Rng& rng) {
  if (n < 1 || m < 1 || n > 2 * m)
    throw Error(ErrorKind::BadParameter, "need 1 <= n <= 2m for every variable to occur");
  // Clause arities: mostly 2, some 1, as long as every variable can still occur.
  std::vector<std::size_t> arity(m, 2);
  std::size_t slots = 2 * m;
  for (auto& a : arity)
    if (slots > n && coin(rng, 0.25)) a = 1, --slots;
  std::vector<std::size_t> vars(n);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  while (vars.size() < slots) vars.push_back(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1)));
  std::shuffle(vars.begin(), vars.end(), rng);
  Formula f{FormulaVariant::Monotone2DNF, n, {}};
  std::size_t next = 0;
  for (auto a : arity) {
    std::vector<Literal> clause;
    for (std::size_t t = 0; t < a; ++t) clause.push_back({vars[next++], false});
    f.clauses.push_back(std::move(clause));
  }
  validate(f);
  return f;
}

namespace {

Formula random_cnf(FormulaVariant variant, std::size_t n, std::size_t m, std::size_t max_arity,
                   bool negations, Rng& rng) {
  if (n < 1 || m < 1) throw Error(ErrorKind::BadParameter, "need n >= 1 and m >= 1");
  Formula f{variant, n, {}};
  for (std::size_t c = 0; c < m; ++c) {
    const auto arity = static_cast<std::size_t>(
        uniform_int(rng, 1, static_cast<int>(std::min(max_arity, n))));
    std::vector<std::size_t> vars(n);
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<Literal> clause;
    for (std::size_t t = 0; t < arity; ++t) clause.push_back({vars[t], negations && coin(rng, 0.5)});
    f.clauses.push_back(std::move(clause));
  }
  validate(f);
  return f;
}

}  // namespace

Formula random_3cnf(std::size_t n, std::size_t m, Rng& rng) {
  return random_cnf(FormulaVariant::CNF3, n, m, 3, true, rng);
}

Formula random_monotone_2cnf(std::size_t n, std::size_t m, Rng& rng) {
  return random_cnf(FormulaVariant::Monotone2CNF, n, m, 2, false, rng);
}

}  // namespace tlab
