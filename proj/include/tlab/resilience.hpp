#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "tlab/graph.hpp"
#include "tlab/profile.hpp"
#include "tlab/rational.hpp"

namespace tlab {

struct RecoveryCheck {
  bool recovers = true;
  std::optional<ActionProfile> failing_seed;
  std::uint64_t seeds_checked = 0;
};

/// True iff every profile with at most K B-nodes converges, under the type
/// rule, to a limit set that is exactly {all-W}. K > n is clamped to n.
/// Throws GuardExceeded when there are more than `max_seeds` seeds.
RecoveryCheck check_recovery(const Graph& g, const TypeDist& q, std::size_t K,
                             std::uint64_t max_seeds = std::uint64_t{1} << 22);

struct ResilienceOptions {
  std::uint64_t max_grid = std::uint64_t{1} << 24;   // candidate type vectors
  std::uint64_t max_seeds = std::uint64_t{1} << 22;  // seeds per recovery check
};

struct ResilienceResult {
  Rational mu;
  TypeDist witness_q;
  std::uint64_t evaluations = 0;  // (q, seed) pairs checked
  std::uint64_t candidates = 0;   // type vectors checked
};

/// Least l1 norm over the grid q_i in {0, 1/d_i, ..., 1} of a q that
/// recovers from every seed of weight <= K. Candidates are visited in
/// nondecreasing norm, so the first feasible one is optimal.
ResilienceResult resilience_bruteforce(const Graph& g, std::size_t K,
                                       const ResilienceOptions& options = {});

enum class Family { Star, Path, Cycle, Complete };
std::string_view to_string(Family f);
/// Accepts "star", "path", "cycle", "complete"; throws InvalidInput.
Family parse_family(std::string_view text);
/// The family member on n nodes (star centre is node 0).
Graph family_graph(Family f, std::size_t n);

/// Closed-form resilience. Throws OutOfFormulaRange for a path with
/// K >= ceil(n/2) and BadParameter for sizes the family does not have.
Rational resilience_closed_form(Family f, std::size_t n, std::size_t K);

/// q_i = (number of neighbours before i) / d_i in the order by (degree, id).
TypeDist greedy_upper_bound_q(const Graph& g);

struct BoundsReport {
  Rational mu;
  Rational lower_slack;  // mu - 1
  Rational upper_slack;  // n/2 - mu
  bool holds = false;
};
/// Computes mu by brute force and checks 1 <= mu <= n/2 (n >= 2).
BoundsReport verify_bounds(const Graph& g, std::size_t K, const ResilienceOptions& options = {});

}  // namespace tlab
