#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tlab/dynamics.hpp"
#include "tlab/enumeration.hpp"
#include "tlab/expansions.hpp"
#include "tlab/graph.hpp"
#include "tlab/reductions.hpp"
#include "tlab/resilience.hpp"

namespace tlab {

using Json = nlohmann::ordered_json;

/// A parsed instance file; at most one of thresholds/types is set (neither for
/// commands that only need the graph).
struct InstanceFile {
  Graph graph;
  std::optional<ThresholdDist> thresholds;
  std::optional<TypeDist> types;
  /// Thresholds, converting types when needed; InvalidInput if neither is set.
  ThresholdDist effective_thresholds() const;
};

/// {"n", "edges": [[i,j],...], "thresholds": [...] | "types": [[num,den],...]}.
/// Unknown keys and malformed values throw InvalidInput.
InstanceFile parse_instance(const Json& j);
/// Adds "weights" (parallel to "edges") and optional "self_loops": [[i,w],...];
/// "thresholds" may be negative.
WeightedGraph parse_weighted(const Json& j);
/// {"variant", "n", "clauses": [[lit,...],...]}, lit = +-(index+1).
Formula parse_formula(const Json& j);

/// Reads and parses a JSON file; throws InvalidInput on I/O or syntax errors.
Json read_json_file(const std::string& path);

Json to_json(const Rational& r);
Json to_json(const Graph& g, const ThresholdDist& k);
Json to_json(const WeightedGraph& w);
Json to_json(const Formula& f);
Json to_json(const LimitReport& r);
Json to_json(const LimitCensus& c);
Json to_json(const ExpansionResult& r);
Json to_json(const WeightedExpansionResult& r);
Json to_json(const GadgetInstance& g);
Json to_json(const ResilienceResult& r);
Json to_json(const TypeDist& q);

}  // namespace tlab
