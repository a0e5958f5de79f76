#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlab/dynamics.hpp"
#include "tlab/graph.hpp"
#include "tlab/profile.hpp"

namespace tlab {

/// How one target node's action is derived from a source profile.
struct LiftEntry {
  enum class Kind { Copy, Negate, ConstB, ConstW };
  Kind kind = Kind::Copy;
  Node source = 0;  // meaningful for Copy and Negate
  friend bool operator==(const LiftEntry&, const LiftEntry&) = default;
};

/// Profile-lifting map from source profiles to target profiles. Every target
/// node copies or negates one source node or is frozen to a constant, which
/// covers every lift used by the expansions.
class ProfileLift {
 public:
  ProfileLift() = default;
  ProfileLift(std::size_t source_size, std::vector<LiftEntry> entries);
  static ProfileLift identity(std::size_t n);

  std::size_t source_size() const noexcept { return source_size_; }
  std::size_t target_size() const noexcept { return entries_.size(); }
  const std::vector<LiftEntry>& entries() const noexcept { return entries_; }

  ActionProfile operator()(const ActionProfile& a) const;
  /// `next` applied after this lift.
  ProfileLift then(const ProfileLift& next) const;
  /// Injective iff every source node is copied or negated somewhere.
  bool is_injective() const;

 private:
  std::size_t source_size_ = 0;
  std::vector<LiftEntry> entries_;
};

/// Provenance of a target node.
struct NodeOrigin {
  enum class Role { Original, Mirror, GadgetCenter, GadgetLeaf, BlockCopy };
  Role role = Role::Original;
  Node source = 0;        // original node (pivot for gadget nodes)
  std::size_t index = 0;  // gadget number, or block index for BlockCopy
  friend bool operator==(const NodeOrigin&, const NodeOrigin&) = default;
};
std::string to_string(NodeOrigin::Role role);

struct ExpansionResult {
  Graph graph;
  ThresholdDist thresholds;
  ProfileLift lift;
  std::vector<NodeOrigin> node_map;
};

struct WeightedExpansionResult {
  WeightedGraph graph;
  ProfileLift lift;
  std::vector<NodeOrigin> node_map;
};

/// Mirror copy on nodes n..2n-1; each edge {i,j} becomes {i, n+j} and {j, n+i}.
/// Lift (a, a). Applied uniformly, so a bipartite input yields two disjoint
/// copies of itself.
ExpansionResult bipartite_expansion(const Graph& g, const ThresholdDist& k);

/// True iff every degree is odd and every k_i = (d_i + 1) / 2.
bool is_symmetric_model(const Graph& g, const ThresholdDist& k);
/// Nodes eligible as pivots: even degree, or odd degree with k_i != (d_i+1)/2.
std::vector<Node> pivot_candidates(const Graph& g, const ThresholdDist& k);

/// Attaches d+1 Y-gadgets (centre threshold 2, leaves threshold 1) to `pivot`,
/// whose threshold becomes d+1. The lift freezes min(k, d+1) gadgets at W and
/// the rest at B. Defaults to the lowest eligible pivot; throws
/// AlreadySymmetric when there is none and BadParameter for an ineligible pivot.
ExpansionResult one_step_symmetric_expansion(const Graph& g, const ThresholdDist& k,
                                             std::optional<Node> pivot = std::nullopt);

struct SymmetricOptions {
  std::size_t max_nodes = 1u << 20;
  /// Expand pivots highest id first instead of lowest first.
  bool highest_first = false;
};
/// Repeats the one-step expansion until the model is symmetric; the lift is
/// the composition of the per-step lifts. Throws GuardExceeded when the
/// output would exceed `max_nodes`.
ExpansionResult symmetric_expansion(const Graph& g, const ThresholdDist& k,
                                    const SymmetricOptions& options = {});

/// Primary-model instance simulating the inverted rule: originals get
/// max(0, d_i - k_i + 1), mirrors k_i; lift (a, not a).
ExpansionResult inverted_to_primary(const Graph& g, const ThresholdDist& k);

/// Primary-model instance simulating a +-1 weighted model without loops.
/// Originals get k_i + d-_i, mirrors d+_i - k_i + 1; lift (a, not a).
/// Throws WeightOutOfRange and ValidityViolated (unless -d-_i <= k_i <= d+_i).
ExpansionResult signed_to_primary(const WeightedGraph& w);

/// Blows an integer-weighted loop-free model up into +-1 weights over
/// N = prod |w_e| blocks; node (b, i) has id b*n + i. Throws GuardExceeded when
/// N*n > max_nodes and BadParameter when self-loops are present.
WeightedExpansionResult integer_weights_to_unit(const WeightedGraph& w,
                                                std::size_t max_nodes = 4096);

/// Doubles the model; a loop w_ii becomes the edge {i, n+i}. Lift (a, a).
WeightedExpansionResult remove_self_loops(const WeightedGraph& w);

struct Component {
  Graph graph;
  ThresholdDist thresholds;
  std::vector<Node> nodes;  // component id -> original id
};
/// Components of g - i (ordered by lowest original id) with thresholds of the
/// neighbours of i decremented (floored at 0) iff c = B.
std::vector<Component> remove_constant_node(const Graph& g, const ThresholdDist& k,
                                            Node i, Action c);

struct CommutationReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<ActionProfile> counterexample;
};

/// Checks lift(source(a)) == target(lift(a)) on every sample.
template <class SourceStep, class TargetStep>
CommutationReport commutation_check(SourceStep&& source, TargetStep&& target,
                                    const ProfileLift& lift,
                                    std::span<const ActionProfile> samples) {
  CommutationReport report;
  for (const auto& a : samples) {
    ++report.checked;
    if (lift(source(a)) != target(lift(a))) {
      report.holds = false;
      report.counterexample = a;
      return report;
    }
  }
  return report;
}

}  // namespace tlab
