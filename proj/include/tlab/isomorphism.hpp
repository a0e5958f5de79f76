#pragma once

#include <optional>
#include <vector>

#include "tlab/graph.hpp"

namespace tlab {

/// Threshold-preserving isomorphism from `a` onto `b` (result[i] is the image
/// of node i), found by colour refinement seeded with thresholds and degrees,
/// with individualisation and backtracking when refinement stalls.
std::optional<std::vector<Node>> find_isomorphism(const Graph& a, const ThresholdDist& ka,
                                                  const Graph& b, const ThresholdDist& kb);

bool isomorphic(const Graph& a, const ThresholdDist& ka, const Graph& b,
                const ThresholdDist& kb);

}  // namespace tlab
