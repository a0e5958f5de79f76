#include "tlab/reductions.hpp"

#include <algorithm>
#include <cstdlib>

#include "tlab/error.hpp"

namespace tlab {

namespace {

std::size_t arity_bound(FormulaVariant v) { return v == FormulaVariant::CNF3 ? 3 : 2; }

bool is_monotone(FormulaVariant v) { return v != FormulaVariant::CNF3; }

void require_variant(const Formula& f, FormulaVariant expected) {
  if (f.variant != expected)
    throw Error(ErrorKind::InvalidInput, "expected a " + std::string(to_string(expected)) +
                                             " formula, got " + std::string(to_string(f.variant)));
}

std::vector<Edge> dedupe(std::vector<Edge> edges) {
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

std::string_view to_string(FormulaVariant v) {
  switch (v) {
    case FormulaVariant::Monotone2DNF: return "monotone-2dnf";
    case FormulaVariant::CNF3: return "3cnf";
    case FormulaVariant::Monotone2CNF: return "monotone-2cnf";
  }
  return "unknown";
}

FormulaVariant parse_variant(std::string_view text) {
  for (auto v : {FormulaVariant::Monotone2DNF, FormulaVariant::CNF3, FormulaVariant::Monotone2CNF})
    if (text == to_string(v)) return v;
  throw Error(ErrorKind::InvalidInput, "unknown formula variant '" + std::string(text) + "'");
}

void validate(const Formula& f) {
  if (f.clauses.empty()) throw Error(ErrorKind::InvalidInput, "formula has no clauses");
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    if (clause.empty() || clause.size() > arity_bound(f.variant))
      throw Error(ErrorKind::InvalidInput,
                  "clause " + std::to_string(c + 1) + " has " + std::to_string(clause.size()) +
                      " literals; " + std::string(to_string(f.variant)) + " allows 1.." +
                      std::to_string(arity_bound(f.variant)),
                  {c});
    for (const auto& lit : clause) {
      if (lit.var >= f.num_vars)
        throw Error(ErrorKind::InvalidInput,
                    "clause " + std::to_string(c + 1) + " references variable x" +
                        std::to_string(lit.var + 1) + " beyond n=" + std::to_string(f.num_vars),
                    {c});
      if (lit.negated && is_monotone(f.variant))
        throw Error(ErrorKind::InvalidInput,
                    "clause " + std::to_string(c + 1) + " negates a variable in a monotone formula",
                    {c});
    }
  }
  if (f.variant == FormulaVariant::Monotone2DNF) {
    std::vector<char> seen(f.num_vars, 0);
    for (const auto& clause : f.clauses)
      for (const auto& lit : clause) seen[lit.var] = 1;
    for (std::size_t p = 0; p < f.num_vars; ++p)
      if (!seen[p])
        throw Error(ErrorKind::VariableMissing,
                    "variable x" + std::to_string(p + 1) + " does not occur in the formula", {p});
  }
}

Formula make_formula(FormulaVariant variant, std::size_t num_vars,
                     const std::vector<std::vector<int>>& clauses) {
  Formula f{variant, num_vars, {}};
  for (const auto& clause : clauses) {
    std::vector<Literal> lits;
    for (int lit : clause) {
      if (lit == 0) throw Error(ErrorKind::InvalidInput, "literal 0 is not allowed");
      lits.push_back({static_cast<std::size_t>(std::abs(lit)) - 1, lit < 0});
    }
    f.clauses.push_back(std::move(lits));
  }
  validate(f);
  return f;
}

bool evaluate(const Formula& f, std::uint64_t assignment) {
  auto value = [&](const Literal& lit) { return (((assignment >> lit.var) & 1u) != 0) != lit.negated; };
  if (f.variant == FormulaVariant::Monotone2DNF) {
    return std::any_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
      return std::all_of(clause.begin(), clause.end(), value);
    });
  }
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(), value);
  });
}

std::uint64_t count_sat(const Formula& f) {
  validate(f);
  if (f.num_vars > 24)
    throw Error(ErrorKind::GuardExceeded, "model counting by scan needs n <= 24 variables");
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.num_vars); ++a) count += evaluate(f, a);
  return count;
}

GadgetInstance fix_reduction(const Formula& f) {
  require_variant(f, FormulaVariant::Monotone2DNF);
  validate(f);
  const std::size_t n = f.num_vars, m = f.clauses.size();
  const std::size_t total = 3 * (n + 3 * m + 1);
  auto s = [](std::size_t p, std::size_t l) { return 3 * p + l; };
  auto y = [&](std::size_t c, std::size_t l) { return 3 * n + 6 * c + l; };
  auto z = [&](std::size_t c, std::size_t l) { return 3 * n + 6 * c + 3 + l; };
  auto b = [&](std::size_t c, std::size_t l) { return 3 * n + 6 * m + 3 * c + l; };
  auto d = [&](std::size_t l) { return 3 * n + 9 * m + l; };

  GadgetInstance out;
  out.labels.resize(total);
  for (std::size_t l = 0; l < 3; ++l) {
    const std::string sup = "^" + std::to_string(l + 1);
    for (std::size_t p = 0; p < n; ++p) out.labels[s(p, l)] = "s" + std::to_string(p + 1) + sup;
    for (std::size_t c = 0; c < m; ++c) {
      out.labels[y(c, l)] = "y" + std::to_string(c + 1) + sup;
      out.labels[z(c, l)] = "z" + std::to_string(c + 1) + sup;
      out.labels[b(c, l)] = "b" + std::to_string(c + 1) + sup;
    }
    out.labels[d(l)] = "d" + sup;
  }

  std::vector<Edge> edges;
  for (std::size_t c = 0; c < m; ++c) {
    const auto& clause = f.clauses[c];
    const std::size_t yc = clause[0].var;
    const std::size_t zc = clause.size() > 1 ? clause[1].var : clause[0].var;
    for (std::size_t l = 0; l < 3; ++l) {
      edges.push_back({b(c, l), y(c, l)});
      edges.push_back({b(c, l), z(c, l)});
      edges.push_back({d(l), b(c, l)});
      for (std::size_t l2 = 0; l2 < 3; ++l2) {
        edges.push_back({s(yc, l), y(c, l2)});
        edges.push_back({s(zc, l), z(c, l2)});
      }
    }
  }
  std::vector<int> k(total, 2);
  for (std::size_t l = 0; l < 3; ++l) k[d(l)] = 1;
  out.graph = build_graph(total, edges);
  out.thresholds = ThresholdDist(std::move(k));
  return out;
}

SatCounts recover_sat_count(std::uint64_t fixed_points, std::size_t num_vars) {
  if (num_vars > 60) throw Error(ErrorKind::BadParameter, "num_vars must be <= 60");
  const std::int64_t all = std::int64_t{1} << num_vars;
  // sat + nsat = 2^n and sat + 8 nsat - 7 = F  =>  7 nsat = F + 7 - 2^n.
  const std::int64_t numerator = static_cast<std::int64_t>(fixed_points) + 7 - all;
  if (numerator % 7 != 0 || numerator / 7 < 1 || numerator / 7 > all)
    throw Error(ErrorKind::InconsistentCount,
                "F=" + std::to_string(fixed_points) + " with n=" + std::to_string(num_vars) +
                    " has no solution with 1 <= #nsat <= 2^n");
  const std::int64_t nsat = numerator / 7;
  return {static_cast<std::uint64_t>(all - nsat), static_cast<std::uint64_t>(nsat)};
}

GadgetInstance pred_reduction(const Formula& f) {
  require_variant(f, FormulaVariant::CNF3);
  validate(f);
  const std::size_t n = f.num_vars, m = f.clauses.size();
  const std::size_t total = 4 * n + m + 1;
  const Node u = 4 * n + m;
  GadgetInstance out;
  out.labels.resize(total);
  std::vector<Edge> edges;
  std::vector<int> k(total, 1);
  out.target = ActionProfile::uniform(total, Action::B);
  for (std::size_t p = 0; p < n; ++p) {
    const Node v = 4 * p, vn = v + 1, o = v + 2, t = v + 3;
    const std::string idx = std::to_string(p + 1);
    out.labels[v] = "v" + idx;
    out.labels[vn] = "v'" + idx;
    out.labels[o] = "o" + idx;
    out.labels[t] = "t" + idx;
    edges.insert(edges.end(), {{o, v}, {o, vn}, {t, v}, {t, vn}, {u, v}, {u, vn}});
    k[t] = 2;
    out.target.set(t, false);
  }
  for (std::size_t c = 0; c < m; ++c) {
    const Node sc = 4 * n + c;
    out.labels[sc] = "s" + std::to_string(c + 1);
    for (const auto& lit : f.clauses[c]) edges.push_back({sc, 4 * lit.var + (lit.negated ? 1 : 0)});
  }
  out.labels[u] = "u";
  out.graph = build_graph(total, dedupe(std::move(edges)));
  out.thresholds = ThresholdDist(std::move(k));
  return out;
}

GadgetInstance reachable_pred_construction(const Formula& f) {
  require_variant(f, FormulaVariant::Monotone2CNF);
  validate(f);
  const std::size_t n = f.num_vars, m = f.clauses.size();
  const std::size_t total = n + m + 1;
  const Node d = n + m;
  GadgetInstance out;
  out.labels.resize(total);
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < n; ++p) {
    out.labels[p] = "v" + std::to_string(p + 1);
    edges.push_back({d, p});
  }
  for (std::size_t c = 0; c < m; ++c) {
    out.labels[n + c] = "u" + std::to_string(c + 1);
    for (const auto& lit : f.clauses[c]) edges.push_back({n + c, lit.var});
  }
  out.labels[d] = "d";
  out.graph = build_graph(total, dedupe(std::move(edges)));
  out.thresholds = ThresholdDist::uniform(total, 1);
  out.target = ActionProfile::uniform(total, Action::B);
  return out;
}

ReachablePredReport reachable_pred_reduction(const Formula& f, const EnumerationOptions& options) {
  ReachablePredReport r;
  r.instance = reachable_pred_construction(f);
  r.claimed = count_sat(f);
  r.measured = count_predecessors(r.instance.graph, r.instance.thresholds, r.instance.target, options);
  // Every v_p needs a B neighbour among d and the u_c of clauses containing x_p;
  // that constraint involves only the (u, d) coordinates.
  const std::size_t n = f.num_vars, m = f.clauses.size();
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m + 1)); ++code) {
    const bool d_black = (code >> m) & 1u;
    bool covered = true;
    for (std::size_t p = 0; p < n && covered; ++p) {
      bool any = d_black;
      for (std::size_t c = 0; c < m && !any; ++c)
        for (const auto& lit : f.clauses[c])
          if (lit.var == p && ((code >> c) & 1u)) any = true;
      covered = any;
    }
    r.cover_count += covered;
  }
  r.matches_claim = r.measured == r.claimed;
  r.factorizes = r.measured == r.claimed * r.cover_count;
  if (!r.matches_claim)
    r.notice = "discrepancy: the construction has " + std::to_string(r.measured) +
               " predecessors of the all-B profile, but #sat = " + std::to_string(r.claimed) +
               "; the u/d coordinates are not forced to B (measured = #sat x " +
               std::to_string(r.cover_count) + " covering (u, d) assignments" +
               (r.factorizes ? ")" : ", factorization FAILED)");
  return r;
}

}  // namespace tlab
