#include "tlab/resilience.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tlab/enumeration.hpp"
#include "tlab/error.hpp"

namespace tlab {

namespace {

constexpr std::size_t kDenseMemo = 22;

std::uint64_t binomial_prefix(std::size_t n, std::size_t K) {
  std::uint64_t total = 0, c = 1;
  for (std::size_t j = 0; j <= K; ++j) {
    total += c;
    c = c * (n - j) / (j + 1);
  }
  return total;
}

// Recovery test for a fixed packed map; memoises the fate of every state seen.
class RecoveryOracle {
 public:
  explicit RecoveryOracle(const PackedStep& f) : f_(f), n_(f.size()) {
    if (n_ <= kDenseMemo) dense_.assign(std::size_t{1} << n_, kUnknown);
  }

  bool recovers_from(std::uint64_t seed) {
    path_.clear();
    std::uint64_t a = seed;
    std::uint8_t fate;
    for (;;) {
      fate = get(a);
      if (fate == kRecovers || fate == kFails) break;
      if (fate == kOnPath) {  // closed a cycle that avoids all-W
        fate = kFails;
        break;
      }
      if (a == 0) {
        fate = kRecovers;
        break;
      }
      put(a, kOnPath);
      path_.push_back(a);
      a = f_(a);
    }
    for (auto v : path_) put(v, fate);
    return fate == kRecovers;
  }

 private:
  enum : std::uint8_t { kUnknown, kOnPath, kRecovers, kFails };
  std::uint8_t get(std::uint64_t a) const {
    if (!dense_.empty()) return dense_[a];
    auto it = sparse_.find(a);
    return it == sparse_.end() ? kUnknown : it->second;
  }
  void put(std::uint64_t a, std::uint8_t v) {
    if (!dense_.empty())
      dense_[a] = v;
    else
      sparse_[a] = v;
  }

  const PackedStep& f_;
  std::size_t n_;
  std::vector<std::uint8_t> dense_;
  std::unordered_map<std::uint64_t, std::uint8_t> sparse_;
  std::vector<std::uint64_t> path_;
};

// Visits seeds of weight 0..K, by weight then by code; stops when `visit` is false.
template <class Visit>
void for_each_seed(std::size_t n, std::size_t K, Visit&& visit) {
  if (!visit(std::uint64_t{0})) return;
  for (std::size_t w = 1; w <= K; ++w) {
    const std::uint64_t limit = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t s = (w == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
    for (;;) {
      if (!visit(s)) return;
      // Next code with the same popcount (Gosper's hack).
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      if (r == 0 || r > limit) break;
      const std::uint64_t next = (((r ^ s) >> 2) / c) | r;
      if (next > limit) break;
      s = next;
    }
  }
}

void require_resilience_graph(const Graph& g, std::size_t K) {
  if (g.size() < 2) throw Error(ErrorKind::BadParameter, "resilience needs n >= 2");
  if (g.size() > 64) throw Error(ErrorKind::GuardExceeded, "resilience needs n <= 64");
  if (K == 0) throw Error(ErrorKind::BadParameter, "budget K must be >= 1");
}

RecoveryCheck check_thresholds(const Graph& g, const ThresholdDist& k, std::size_t K) {
  const PackedStep f(g, k);
  RecoveryOracle oracle(f);
  RecoveryCheck result;
  for_each_seed(g.size(), K, [&](std::uint64_t seed) {
    ++result.seeds_checked;
    if (oracle.recovers_from(seed)) return true;
    result.recovers = false;
    result.failing_seed = ActionProfile::from_code(g.size(), seed);
    return false;
  });
  return result;
}

}  // namespace

RecoveryCheck check_recovery(const Graph& g, const TypeDist& q, std::size_t K,
                             std::uint64_t max_seeds) {
  require_resilience_graph(g, K);
  K = std::min(K, g.size());
  if (binomial_prefix(g.size(), K) > max_seeds)
    throw Error(ErrorKind::GuardExceeded, "recovery check needs more than " +
                                              std::to_string(max_seeds) + " seeds");
  return check_thresholds(g, types_to_thresholds(g, q), K);
}

ResilienceResult resilience_bruteforce(const Graph& g, std::size_t K,
                                       const ResilienceOptions& options) {
  require_resilience_graph(g, K);
  K = std::min(K, g.size());
  const std::size_t n = g.size();
  if (binomial_prefix(n, K) > options.max_seeds)
    throw Error(ErrorKind::GuardExceeded, "recovery check needs more than " +
                                              std::to_string(options.max_seeds) + " seeds");
  std::uint64_t grid = 1;
  std::int64_t lcm = 1;
  for (Node i = 0; i < n; ++i) {
    const auto d = static_cast<std::uint64_t>(g.degree(i));
    if (grid > options.max_grid / (d + 1))
      throw Error(ErrorKind::GuardExceeded, "type grid exceeds " + std::to_string(options.max_grid) +
                                                " candidates");
    grid *= d + 1;
    lcm = std::lcm(lcm, static_cast<std::int64_t>(d));
  }
  // With q_i = m_i / d_i the norm is sum m_i * (L / d_i) / L for L = lcm(d),
  // and the threshold is floor(m_i) + 1 = m_i + 1.
  std::vector<std::int64_t> weight(n);
  for (Node i = 0; i < n; ++i) weight[i] = lcm / static_cast<std::int64_t>(g.degree(i));

  ResilienceResult result;
  std::vector<int> m(n, 0);
  bool found = false;
  auto descend = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (found) return;
    if (i == n) {
      if (remaining != 0) return;
      ++result.candidates;
      std::vector<int> k(n);
      for (Node j = 0; j < n; ++j) k[j] = m[j] + 1;
      const auto check = check_thresholds(g, ThresholdDist(std::move(k)), K);
      result.evaluations += check.seeds_checked;
      found = check.recovers;
      return;
    }
    const auto tail = static_cast<std::int64_t>(n - i - 1) * lcm;  // max norm of nodes after i
    const auto d = static_cast<int>(g.degree(i));
    for (int v = 0; v <= d && !found; ++v) {
      const std::int64_t rest = remaining - v * weight[i];
      if (rest < 0) break;
      if (rest > tail) continue;
      m[i] = v;
      self(self, i + 1, rest);
    }
    if (!found) m[i] = 0;
  };
  const auto max_total = static_cast<std::int64_t>(n) * lcm;
  for (std::int64_t total = 0; total <= max_total && !found; ++total) descend(descend, 0, total);
  if (!found) throw Error(ErrorKind::IdentityViolated, "q = 1 everywhere failed to recover");
  std::vector<Rational> q(n);
  Rational norm = 0;
  for (Node i = 0; i < n; ++i) {
    q[i] = Rational(m[i], static_cast<std::int64_t>(g.degree(i)));
    norm += q[i];
  }
  result.mu = norm;
  result.witness_q = TypeDist(std::move(q));
  return result;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Star: return "star";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  for (auto f : {Family::Star, Family::Path, Family::Cycle, Family::Complete})
    if (text == to_string(f)) return f;
  throw Error(ErrorKind::InvalidInput, "unknown family '" + std::string(text) + "'");
}

Graph family_graph(Family f, std::size_t n) {
  std::vector<Edge> edges;
  switch (f) {
    case Family::Star:
      if (n < 2) throw Error(ErrorKind::BadParameter, "a star needs n >= 2");
      for (Node i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case Family::Path:
      if (n < 1) throw Error(ErrorKind::BadParameter, "a path needs n >= 1");
      for (Node i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::Cycle:
      if (n < 3) throw Error(ErrorKind::BadParameter, "a cycle needs n >= 3");
      for (Node i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      break;
    case Family::Complete:
      if (n < 1) throw Error(ErrorKind::BadParameter, "a complete graph needs n >= 1");
      for (Node i = 0; i < n; ++i)
        for (Node j = i + 1; j < n; ++j) edges.push_back({i, j});
      break;
  }
  return build_graph(n, edges);
}

Rational resilience_closed_form(Family f, std::size_t n, std::size_t K) {
  if (K == 0) throw Error(ErrorKind::BadParameter, "budget K must be >= 1");
  K = std::min(K, n);
  const auto N = static_cast<std::int64_t>(n);
  const auto k = static_cast<std::int64_t>(K);
  const std::int64_t half_up = (N + 1) / 2;
  switch (f) {
    case Family::Star:
      if (n < 2) throw Error(ErrorKind::BadParameter, "a star needs n >= 2");
      return Rational(1);
    case Family::Path:
      if (n < 2) throw Error(ErrorKind::BadParameter, "the path formula needs n >= 2");
      if (k >= half_up)
        throw Error(ErrorKind::OutOfFormulaRange,
                    "the path formula holds only for K < ceil(n/2) = " + std::to_string(half_up));
      return Rational(N - 1 - (N - 1) / (2 * k + 1), 2);
    case Family::Cycle:
      if (n < 3) throw Error(ErrorKind::BadParameter, "a cycle needs n >= 3");
      if (k >= half_up) return Rational(N, 2);
      return Rational(N - N / (2 * k + 1), 2);
    case Family::Complete:
      if (n < 2) throw Error(ErrorKind::BadParameter, "the complete formula needs n >= 2");
      return Rational(k * (k - 1) / 2 + k * (N - k), N - 1);
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

TypeDist greedy_upper_bound_q(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), Node{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Node a, Node b) { return g.degree(a) < g.degree(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  std::vector<Rational> q(n, Rational(0));
  for (Node i = 0; i < n; ++i) {
    if (g.degree(i) == 0) continue;
    std::int64_t before = 0;
    for (Node j : g.neighbors(i)) before += rank[j] < rank[i];
    q[i] = Rational(before, static_cast<std::int64_t>(g.degree(i)));
  }
  return TypeDist(std::move(q));
}

BoundsReport verify_bounds(const Graph& g, std::size_t K, const ResilienceOptions& options) {
  BoundsReport report;
  report.mu = resilience_bruteforce(g, K, options).mu;
  report.lower_slack = report.mu - 1;
  report.upper_slack = Rational(static_cast<std::int64_t>(g.size()), 2) - report.mu;
  report.holds = report.lower_slack >= 0 && report.upper_slack >= 0;
  return report;
}

}  // namespace tlab
