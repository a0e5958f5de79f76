#include "tlab/io.hpp"

#include <fstream>
#include <set>

#include "tlab/error.hpp"

namespace tlab {

namespace {

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key()))
      throw Error(ErrorKind::InvalidInput, std::string(what) + " has unknown field '" + it.key() + "'");
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<Edge> parse_edges(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& pair : get<std::vector<std::vector<std::int64_t>>>(j, "edges")) {
    if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0)
      throw Error(ErrorKind::InvalidInput, "each edge must be a pair of node ids");
    edges.push_back({static_cast<Node>(pair[0]), static_cast<Node>(pair[1])});
  }
  return edges;
}

std::size_t parse_n(const Json& j) {
  const auto n = get<std::int64_t>(field(j, "n"), "n");
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be >= 1");
  return static_cast<std::size_t>(n);
}

Rational parse_rational(const Json& j) {
  const auto pair = get<std::vector<std::int64_t>>(j, "rational");
  if (pair.size() != 2 || pair[1] == 0)
    throw Error(ErrorKind::InvalidInput, "rationals are [numerator, nonzero denominator]");
  return Rational(pair[0], pair[1]);
}

Json profile_list(const std::vector<ActionProfile>& list) {
  Json out = Json::array();
  for (const auto& a : list) out.push_back(a.str());
  return out;
}

Json node_map_json(const std::vector<NodeOrigin>& map) {
  Json out = Json::array();
  for (const auto& o : map) {
    Json entry;
    entry["role"] = to_string(o.role);
    entry["source"] = o.source;
    if (o.role == NodeOrigin::Role::GadgetCenter || o.role == NodeOrigin::Role::GadgetLeaf)
      entry["gadget"] = o.index;
    if (o.role == NodeOrigin::Role::BlockCopy) entry["block"] = o.index;
    out.push_back(std::move(entry));
  }
  return out;
}

Json lift_json(const ProfileLift& lift) {
  Json out = Json::array();
  for (const auto& e : lift.entries()) {
    switch (e.kind) {
      case LiftEntry::Kind::Copy: out.push_back(Json{{"copy", e.source}}); break;
      case LiftEntry::Kind::Negate: out.push_back(Json{{"negate", e.source}}); break;
      case LiftEntry::Kind::ConstB: out.push_back("B"); break;
      case LiftEntry::Kind::ConstW: out.push_back("W"); break;
    }
  }
  return out;
}

}  // namespace

ThresholdDist InstanceFile::effective_thresholds() const {
  if (thresholds) return *thresholds;
  if (types) return types_to_thresholds(graph, *types);
  throw Error(ErrorKind::InvalidInput, "instance has neither 'thresholds' nor 'types'");
}

InstanceFile parse_instance(const Json& j) {
  only_keys(j, {"n", "edges", "thresholds", "types"}, "instance");
  InstanceFile out;
  const std::size_t n = parse_n(j);
  out.graph = build_graph(n, parse_edges(field(j, "edges")));
  if (j.contains("thresholds") && j.contains("types"))
    throw Error(ErrorKind::InvalidInput, "instance has both 'thresholds' and 'types'");
  if (j.contains("thresholds")) {
    auto k = get<std::vector<int>>(j.at("thresholds"), "thresholds");
    if (k.size() != n) throw Error(ErrorKind::LengthMismatch, "thresholds must have n entries");
    out.thresholds = ThresholdDist(std::move(k));
  } else if (j.contains("types")) {
    std::vector<Rational> q;
    for (const auto& r : j.at("types")) q.push_back(parse_rational(r));
    if (q.size() != n) throw Error(ErrorKind::LengthMismatch, "types must have n entries");
    out.types = TypeDist(std::move(q));
  }
  return out;
}

WeightedGraph parse_weighted(const Json& j) {
  only_keys(j, {"n", "edges", "weights", "self_loops", "thresholds"}, "weighted instance");
  const std::size_t n = parse_n(j);
  const auto edges = parse_edges(field(j, "edges"));
  const auto weights = get<std::vector<std::int64_t>>(field(j, "weights"), "weights");
  if (weights.size() != edges.size())
    throw Error(ErrorKind::LengthMismatch, "weights must parallel edges");
  std::vector<WeightedEdge> wedges;
  for (std::size_t e = 0; e < edges.size(); ++e) wedges.push_back({edges[e].u, edges[e].v, weights[e]});
  std::vector<std::int64_t> loops(n, 0);
  if (j.contains("self_loops"))
    for (const auto& pair : get<std::vector<std::vector<std::int64_t>>>(j.at("self_loops"), "self_loops")) {
      if (pair.size() != 2 || pair[0] < 0 || static_cast<std::size_t>(pair[0]) >= n)
        throw Error(ErrorKind::InvalidInput, "self_loops entries are [node, weight]");
      loops[static_cast<std::size_t>(pair[0])] = pair[1];
    }
  auto k = get<std::vector<std::int64_t>>(field(j, "thresholds"), "thresholds");
  if (k.size() != n) throw Error(ErrorKind::LengthMismatch, "thresholds must have n entries");
  return WeightedGraph(n, std::move(wedges), std::move(loops), std::move(k));
}

Formula parse_formula(const Json& j) {
  only_keys(j, {"variant", "n", "clauses"}, "formula");
  const auto variant = parse_variant(get<std::string>(field(j, "variant"), "variant"));
  const std::size_t n = parse_n(j);
  const auto clauses = get<std::vector<std::vector<int>>>(field(j, "clauses"), "clauses");
  return make_formula(variant, n, clauses);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

Json to_json(const Rational& r) { return Json::array({r.numerator(), r.denominator()}); }

Json to_json(const Graph& g, const ThresholdDist& k) {
  Json out;
  out["n"] = g.size();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  out["edges"] = std::move(edges);
  out["thresholds"] = k.values();
  return out;
}

Json to_json(const WeightedGraph& w) {
  Json out;
  out["n"] = w.size();
  Json edges = Json::array(), weights = Json::array();
  for (const auto& e : w.edges()) {
    edges.push_back(Json::array({e.u, e.v}));
    weights.push_back(e.w);
  }
  out["edges"] = std::move(edges);
  out["weights"] = std::move(weights);
  Json loops = Json::array();
  for (Node i = 0; i < w.size(); ++i)
    if (w.self_loop(i) != 0) loops.push_back(Json::array({i, w.self_loop(i)}));
  if (!loops.empty()) out["self_loops"] = std::move(loops);
  out["thresholds"] = w.thresholds();
  return out;
}

Json to_json(const Formula& f) {
  Json out;
  out["variant"] = to_string(f.variant);
  out["n"] = f.num_vars;
  Json clauses = Json::array();
  for (const auto& clause : f.clauses) {
    Json c = Json::array();
    for (const auto& lit : clause) {
      const auto v = static_cast<std::int64_t>(lit.var) + 1;
      c.push_back(lit.negated ? -v : v);
    }
    clauses.push_back(std::move(c));
  }
  out["clauses"] = std::move(clauses);
  return out;
}

Json to_json(const LimitReport& r) {
  Json out;
  out["transient"] = r.transient;
  out["cycle_length"] = r.cycle.size();
  out["cycle"] = profile_list(r.cycle);
  out["trajectory_length"] = r.trajectory_length;
  return out;
}

Json to_json(const LimitCensus& c) {
  Json out;
  out["fixed_points"] = c.fixed_points;
  out["two_cycles"] = c.two_cycles;
  out["cycle_classes"] = c.cycle_classes;
  return out;
}

Json to_json(const ExpansionResult& r) {
  Json out = to_json(r.graph, r.thresholds);
  out["node_map"] = node_map_json(r.node_map);
  out["lift"] = lift_json(r.lift);
  return out;
}

Json to_json(const WeightedExpansionResult& r) {
  Json out = to_json(r.graph);
  out["node_map"] = node_map_json(r.node_map);
  out["lift"] = lift_json(r.lift);
  return out;
}

Json to_json(const GadgetInstance& g) {
  Json out = to_json(g.graph, g.thresholds);
  out["labels"] = g.labels;
  if (g.target.size() > 0) out["target"] = g.target.str();
  return out;
}

Json to_json(const TypeDist& q) {
  Json out = Json::array();
  for (const auto& r : q.values()) out.push_back(to_json(r));
  return out;
}

Json to_json(const ResilienceResult& r) {
  Json out;
  out["mu"] = to_json(r.mu);
  out["witness_q"] = to_json(r.witness_q);
  out["evaluations"] = r.evaluations;
  out["candidates"] = r.candidates;
  return out;
}

}  // namespace tlab
