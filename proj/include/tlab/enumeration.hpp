#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tlab/dynamics.hpp"
#include "tlab/graph.hpp"
#include "tlab/profile.hpp"

namespace tlab {

/// Threshold map on profiles packed into the low n bits of a word (n <= 64):
/// one AND plus popcount per node.
class PackedStep {
 public:
  PackedStep(const Graph& g, const ThresholdDist& k, bool inverted = false);
  std::size_t size() const noexcept { return masks_.size(); }
  std::uint64_t operator()(std::uint64_t a) const noexcept {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < masks_.size(); ++i)
      out |= std::uint64_t{std::popcount(masks_[i] & a) >= k_[i]} << i;
    return out ^ flip_;
  }

 private:
  std::vector<std::uint64_t> masks_;
  std::vector<int> k_;
  std::uint64_t flip_ = 0;
};

/// Weighted map (self-loops included) on packed profiles, n <= 64.
class PackedWeightedStep {
 public:
  explicit PackedWeightedStep(const WeightedGraph& w);
  std::size_t size() const noexcept { return thresholds_.size(); }
  std::uint64_t operator()(std::uint64_t a) const noexcept {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < thresholds_.size(); ++i) {
      std::int64_t sum = 0;
      for (std::size_t t = offsets_[i]; t < offsets_[i + 1]; ++t)
        if ((a >> terms_[t].first) & 1u) sum += terms_[t].second;
      out |= std::uint64_t{sum >= thresholds_[i]} << i;
    }
    return out;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<std::size_t, std::int64_t>> terms_;
  std::vector<std::int64_t> thresholds_;
};

/// Default enumeration guard: THRESHOLD_LAB_GUARD_N when set, else 24.
std::size_t default_guard_n();
/// Worker count used when 0 is requested: available hardware parallelism.
std::size_t resolve_workers(std::size_t requested);

/// Periods and transients of every profile under a packed map.
struct StateSpaceSummary {
  std::uint64_t states = 0;
  std::uint64_t fixed_points = 0;
  std::uint64_t two_cycles = 0;
  std::uint64_t longer_cycles = 0;  // cycles of length > 2
  std::size_t max_period = 0;
  std::size_t max_transient = 0;
  std::uint64_t slowest_start = 0;  // a profile attaining max_transient
};

/// Full successor table for all 2^n profiles, sharded over `workers` threads.
std::vector<std::uint32_t> successor_table(std::size_t n,
                                           const std::function<std::uint64_t(std::uint64_t)>& f,
                                           std::size_t workers);
std::vector<std::uint32_t> successor_table(const PackedStep& f, std::size_t workers);
std::vector<std::uint32_t> successor_table(const PackedWeightedStep& f, std::size_t workers);

/// Functional-graph analysis of a successor table: every cycle is found by
/// walking, and every profile's transient is the distance to its cycle.
StateSpaceSummary analyze_successors(const std::vector<std::uint32_t>& next);

/// Small-n analysis without threads or a stored table (n <= 16).
template <class Step>
StateSpaceSummary analyze_small(std::size_t n, const Step& f) {
  std::vector<std::uint32_t> next(std::size_t{1} << n);
  for (std::uint64_t a = 0; a < next.size(); ++a) next[a] = static_cast<std::uint32_t>(f(a));
  return analyze_successors(next);
}

struct EnumerationOptions {
  std::size_t guard_n = default_guard_n();
  std::size_t workers = 0;  // 0 = hardware parallelism
  std::size_t witness_cap = 1024;
};

struct LimitCensus {
  std::uint64_t fixed_points = 0;
  std::uint64_t two_cycles = 0;
  std::uint64_t cycle_classes = 0;
  std::vector<ActionProfile> fixed_point_list;
  std::vector<std::pair<ActionProfile, ActionProfile>> two_cycle_list;  // first < second
  bool lists_truncated = false;
  std::size_t max_transient = 0;
};

/// Scans all 2^n profiles. Throws GuardExceeded for n > guard_n and
/// IdentityViolated if a cycle longer than 2 exists.
LimitCensus enumerate_limits(const Graph& g, const ThresholdDist& k,
                             const EnumerationOptions& options = {});

/// Exact count of fixed points by depth-first assignment with pruning on
/// every node whose neighbourhood bounds already decide its constraint.
/// Throws Timeout after `timeout_seconds`.
std::uint64_t count_fixed_points_backtracking(const Graph& g, const ThresholdDist& k,
                                              double timeout_seconds = 60.0);
/// All fixed points in increasing profile order (same search, collecting).
std::vector<ActionProfile> list_fixed_points(const Graph& g, const ThresholdDist& k,
                                             double timeout_seconds = 60.0);

struct CycleIdentityRecord {
  std::uint64_t fixed_points = 0;
  std::uint64_t cycle_classes = 0;
  std::uint64_t predicted = 0;       // F(F-1)/2 + F
  std::uint64_t pairs_checked = 0;   // ordered pairs of distinct fixed points
  bool pairing_generates_all = false;
};

/// Checks |cycles| = F(F-1)/2 + F on a bipartite instance, and that swapping
/// the two partition halves of distinct fixed points yields every 2-cycle.
/// Throws NotBipartite, GuardExceeded, or IdentityViolated.
CycleIdentityRecord bipartite_cycle_identity(const Graph& g, const ThresholdDist& k,
                                             const EnumerationOptions& options = {});

/// Every b with step(b) = a, in increasing order.
std::vector<ActionProfile> predecessors(const Graph& g, const ThresholdDist& k,
                                        const ActionProfile& a,
                                        const EnumerationOptions& options = {});
std::uint64_t count_predecessors(const Graph& g, const ThresholdDist& k, const ActionProfile& a,
                                 const EnumerationOptions& options = {});
/// True iff some profile steps to `a`; stops at the first predecessor.
bool is_reachable(const Graph& g, const ThresholdDist& k, const ActionProfile& a,
                  const EnumerationOptions& options = {});

enum class ExtremalKind { Min, Max };
/// Min: odd cycle with k = 1 everywhere (n odd, n >= 3).
/// Max: cycle with thresholds 1,1,2 repeating (n a positive multiple of 3).
/// Throws BadParameter otherwise.
Instance build_extremal_cycle_instance(std::size_t n, ExtremalKind kind);

}  // namespace tlab
