#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tlab/enumeration.hpp"
#include "tlab/graph.hpp"
#include "tlab/profile.hpp"

namespace tlab {

enum class FormulaVariant { Monotone2DNF, CNF3, Monotone2CNF };
std::string_view to_string(FormulaVariant v);
/// Accepts "monotone-2dnf", "3cnf", "monotone-2cnf"; throws InvalidInput.
FormulaVariant parse_variant(std::string_view text);

struct Literal {
  std::size_t var = 0;  // 0-based
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// A DNF (disjunction of conjunctions) or CNF (conjunction of disjunctions),
/// depending on the variant.
struct Formula {
  FormulaVariant variant = FormulaVariant::CNF3;
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;
};

/// Checks arity, monotonicity, variable ranges, and at least one clause
/// (InvalidInput); for monotone 2-DNF also that every variable occurs
/// (VariableMissing).
void validate(const Formula& f);
/// Builds from signed 1-based literals (+p for x_p, -p for not x_p) and validates.
Formula make_formula(FormulaVariant variant, std::size_t num_vars,
                     const std::vector<std::vector<int>>& clauses);
/// Bit p of `assignment` is the value of variable p.
bool evaluate(const Formula& f, std::uint64_t assignment);
/// Satisfying assignments by exhaustive scan; GuardExceeded beyond 24 variables.
std::uint64_t count_sat(const Formula& f);

/// A dynamics instance built from a formula, with a label per node.
struct GadgetInstance {
  Graph graph;
  ThresholdDist thresholds;
  ActionProfile target;  // empty for the fixed-point gadget
  std::vector<std::string> labels;
};

/// Fixed-point counting gadget for a monotone 2-DNF with n variables and m
/// clauses: 3(n + 3m + 1) nodes. Ids: s_p^l = 3p + l, then per clause
/// y_c^1..3 and z_c^1..3, then b_c^1..3 per clause, then d^1..3. Threshold 2
/// everywhere except d (threshold 1). A one-literal clause x is read as x AND x.
GadgetInstance fix_reduction(const Formula& f);

struct SatCounts {
  std::uint64_t sat = 0;
  std::uint64_t nsat = 0;
};
/// Solves sat + nsat = 2^n and sat + 8(nsat - 1) + 1 = F exactly; throws
/// InconsistentCount when the solution is not a valid pair of counts.
SatCounts recover_sat_count(std::uint64_t fixed_points, std::size_t num_vars);

/// Predecessor gadget for a 3-CNF: 4n + m + 1 nodes with ids v_p = 4p,
/// v'_p = 4p+1, o_p = 4p+2, t_p = 4p+3, s_c = 4n + c, u = 4n + m. Thresholds
/// 1 except t_p = 2; the target is all-B except t_p = W. Variables absent from
/// every clause still get their gadget.
GadgetInstance pred_reduction(const Formula& f);

/// Predecessor-counting gadget for a monotone 2-CNF: n + m + 1 nodes with ids
/// v_p = p, u_c = n + c, d = n + m; thresholds 1; target all-B.
GadgetInstance reachable_pred_construction(const Formula& f);

struct ReachablePredReport {
  GadgetInstance instance;
  std::uint64_t claimed = 0;     // #sat(f), the count the construction is meant to give
  std::uint64_t measured = 0;    // predecessors of the target, by scan
  std::uint64_t cover_count = 0; // (u, d) assignments giving every v_p a B neighbour
  bool matches_claim = false;
  bool factorizes = false;       // measured == claimed * cover_count
  std::string notice;            // non-empty when measured != claimed
};
ReachablePredReport reachable_pred_reduction(const Formula& f,
                                             const EnumerationOptions& options = {});

}  // namespace tlab
