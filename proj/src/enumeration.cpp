#include "tlab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "tlab/error.hpp"

namespace tlab {

namespace {

constexpr std::size_t kTableLimit = 32;  // successor tables use 32-bit entries

void require_packable(const Graph& g, const ThresholdDist& k) {
  if (k.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
  if (g.size() > 64) throw Error(ErrorKind::GuardExceeded, "packed profiles need n <= 64");
}

void require_guard(std::size_t n, const EnumerationOptions& options) {
  if (n > options.guard_n || n > kTableLimit)
    throw Error(ErrorKind::GuardExceeded,
                "exhaustive scan of n=" + std::to_string(n) + " exceeds the guard n <= " +
                    std::to_string(std::min(options.guard_n, kTableLimit)));
}

// Runs body(begin, end) over contiguous shards of [0, total).
template <class Body>
void sharded(std::uint64_t total, std::size_t workers, Body&& body) {
  workers = resolve_workers(workers);
  if (workers <= 1 || total < (std::uint64_t{1} << 14)) {
    body(std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
    if (begin < end) threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : threads) t.join();
}

template <class Step>
std::vector<std::uint32_t> table_of(std::size_t n, const Step& f, std::size_t workers) {
  if (n > kTableLimit) throw Error(ErrorKind::GuardExceeded, "successor table needs n <= 32");
  std::vector<std::uint32_t> next(std::size_t{1} << n);
  sharded(next.size(), workers, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t a = begin; a < end; ++a) next[a] = static_cast<std::uint32_t>(f(a));
  });
  return next;
}

std::uint64_t code_of(const ActionProfile& a, std::size_t n) {
  if (a.size() != n)
    throw Error(ErrorKind::LengthMismatch, "profile length differs from the graph size");
  return a.code();
}

}  // namespace

PackedStep::PackedStep(const Graph& g, const ThresholdDist& k, bool inverted) {
  require_packable(g, k);
  masks_.assign(g.size(), 0);
  k_ = k.values();
  for (Node i = 0; i < g.size(); ++i)
    for (Node j : g.neighbors(i)) masks_[i] |= std::uint64_t{1} << j;
  if (inverted)
    flip_ = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
}

PackedWeightedStep::PackedWeightedStep(const WeightedGraph& w) {
  if (w.size() > 64) throw Error(ErrorKind::GuardExceeded, "packed profiles need n <= 64");
  thresholds_ = w.thresholds();
  offsets_.push_back(0);
  for (Node i = 0; i < w.size(); ++i) {
    if (w.self_loop(i) != 0) terms_.push_back({i, w.self_loop(i)});
    for (auto [j, wij] : w.neighbors(i)) terms_.push_back({j, wij});
    offsets_.push_back(terms_.size());
  }
}

std::size_t default_guard_n() {
  if (const char* env = std::getenv("THRESHOLD_LAB_GUARD_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 24;
}

std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::vector<std::uint32_t> successor_table(std::size_t n,
                                           const std::function<std::uint64_t(std::uint64_t)>& f,
                                           std::size_t workers) {
  return table_of(n, f, workers);
}
std::vector<std::uint32_t> successor_table(const PackedStep& f, std::size_t workers) {
  return table_of(f.size(), f, workers);
}
std::vector<std::uint32_t> successor_table(const PackedWeightedStep& f, std::size_t workers) {
  return table_of(f.size(), f, workers);
}

StateSpaceSummary analyze_successors(const std::vector<std::uint32_t>& next) {
  StateSpaceSummary s;
  s.states = next.size();
  enum : std::uint8_t { kNew, kOnPath, kDone };
  std::vector<std::uint8_t> mark(next.size(), kNew);
  std::vector<std::uint32_t> dist(next.size(), 0);
  std::vector<std::uint32_t> path;
  for (std::uint64_t start = 0; start < next.size(); ++start) {
    if (mark[start] != kNew) continue;
    path.clear();
    std::uint32_t v = static_cast<std::uint32_t>(start);
    while (mark[v] == kNew) {
      mark[v] = kOnPath;
      path.push_back(v);
      v = next[v];
    }
    if (mark[v] == kOnPath) {
      std::size_t j = path.size();
      while (path[--j] != v) {
      }
      const std::size_t period = path.size() - j;
      for (std::size_t t = j; t < path.size(); ++t) mark[path[t]] = kDone;
      if (period == 1)
        ++s.fixed_points;
      else if (period == 2)
        ++s.two_cycles;
      else
        ++s.longer_cycles;
      s.max_period = std::max(s.max_period, period);
      path.resize(j);
    }
    for (std::size_t t = path.size(); t-- > 0;) {
      const std::uint32_t u = path[t];
      dist[u] = dist[next[u]] + 1;
      mark[u] = kDone;
      if (dist[u] > s.max_transient) {
        s.max_transient = dist[u];
        s.slowest_start = u;
      }
    }
  }
  return s;
}

LimitCensus enumerate_limits(const Graph& g, const ThresholdDist& k,
                             const EnumerationOptions& options) {
  require_packable(g, k);
  require_guard(g.size(), options);
  const std::size_t n = g.size();
  const auto next = successor_table(PackedStep(g, k), options.workers);
  const auto summary = analyze_successors(next);
  if (summary.longer_cycles > 0)
    throw Error(ErrorKind::IdentityViolated,
                "found " + std::to_string(summary.longer_cycles) +
                    " cycle(s) longer than 2, maximum period " +
                    std::to_string(summary.max_period));
  LimitCensus census;
  census.max_transient = summary.max_transient;
  for (std::uint64_t a = 0; a < next.size(); ++a) {
    const std::uint64_t b = next[a];
    if (b == a) {
      ++census.fixed_points;
      if (census.fixed_point_list.size() < options.witness_cap)
        census.fixed_point_list.push_back(ActionProfile::from_code(n, a));
      else
        census.lists_truncated = true;
    } else if (next[b] == a && a < b) {
      ++census.two_cycles;
      if (census.two_cycle_list.size() < options.witness_cap)
        census.two_cycle_list.emplace_back(ActionProfile::from_code(n, a),
                                           ActionProfile::from_code(n, b));
      else
        census.lists_truncated = true;
    }
  }
  if (census.fixed_points != summary.fixed_points || census.two_cycles != summary.two_cycles)
    throw Error(ErrorKind::IdentityViolated, "census scan disagrees with the cycle walk");
  census.cycle_classes = census.fixed_points + census.two_cycles;
  return census;
}

namespace {

class FixedPointSearch {
 public:
  FixedPointSearch(const Graph& g, const ThresholdDist& k, double timeout_seconds,
                   std::vector<ActionProfile>* sink)
      : g_(g), k_(k), sink_(sink), value_(g.size(), -1), black_(g.size(), 0),
        open_(g.size(), 0),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeout_seconds))) {
    if (k.size() != g.size())
      throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
    for (Node i = 0; i < g.size(); ++i) open_[i] = static_cast<int>(g.degree(i));
    // Breadth-first order keeps each node's neighbours close in the order, so
    // constraints are decided soon after a node is assigned.
    std::vector<char> seen(g.size(), 0);
    for (Node root = 0; root < g.size(); ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::size_t head = order_.size();
      order_.push_back(root);
      for (; head < order_.size(); ++head)
        for (Node u : g.neighbors(order_[head]))
          if (!seen[u]) seen[u] = 1, order_.push_back(u);
    }
  }

  std::uint64_t run() {
    descend(0);
    return count_;
  }

 private:
  // A decided node is consistent while its final neighbour count can still
  // land on the right side of its threshold.
  bool consistent(Node i) const {
    if (value_[i] < 0) return true;
    return value_[i] == 1 ? black_[i] + open_[i] >= k_[i] : black_[i] < k_[i];
  }

  void descend(std::size_t depth) {
    if ((++visited_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw Error(ErrorKind::Timeout, "fixed-point search exceeded its time budget");
    if (depth == order_.size()) {
      ++count_;
      if (sink_) {
        ActionProfile a(g_.size());
        for (Node i = 0; i < g_.size(); ++i) a.set(i, value_[i] == 1);
        sink_->push_back(std::move(a));
      }
      return;
    }
    const Node v = order_[depth];
    for (int c : {0, 1}) {
      value_[v] = static_cast<signed char>(c);
      for (Node u : g_.neighbors(v)) {
        --open_[u];
        black_[u] += c;
      }
      bool ok = consistent(v);
      for (Node u : g_.neighbors(v)) ok = ok && consistent(u);
      if (ok) descend(depth + 1);
      for (Node u : g_.neighbors(v)) {
        ++open_[u];
        black_[u] -= c;
      }
    }
    value_[v] = -1;
  }

  const Graph& g_;
  const ThresholdDist& k_;
  std::vector<ActionProfile>* sink_;
  std::vector<Node> order_;
  std::vector<signed char> value_;
  std::vector<int> black_;
  std::vector<int> open_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t count_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t count_fixed_points_backtracking(const Graph& g, const ThresholdDist& k,
                                              double timeout_seconds) {
  return FixedPointSearch(g, k, timeout_seconds, nullptr).run();
}

std::vector<ActionProfile> list_fixed_points(const Graph& g, const ThresholdDist& k,
                                             double timeout_seconds) {
  std::vector<ActionProfile> out;
  FixedPointSearch(g, k, timeout_seconds, &out).run();
  std::sort(out.begin(), out.end());
  return out;
}

CycleIdentityRecord bipartite_cycle_identity(const Graph& g, const ThresholdDist& k,
                                             const EnumerationOptions& options) {
  const TwoPartition parts = two_partition(g);
  require_packable(g, k);
  require_guard(g.size(), options);

  CycleIdentityRecord record;
  const auto fixed = list_fixed_points(g, k);
  record.fixed_points = fixed.size();
  const auto summary = analyze_successors(successor_table(PackedStep(g, k), options.workers));
  if (summary.longer_cycles > 0)
    throw Error(ErrorKind::IdentityViolated, "cycle longer than 2 on a bipartite instance");
  record.cycle_classes = summary.fixed_points + summary.two_cycles;
  const std::uint64_t f = record.fixed_points;
  record.predicted = f * (f - (f > 0 ? 1 : 0)) / 2 + f;
  if (record.predicted != record.cycle_classes)
    throw Error(ErrorKind::IdentityViolated,
                "F=" + std::to_string(f) + " predicts " + std::to_string(record.predicted) +
                    " cycle classes, scan found " + std::to_string(record.cycle_classes));

  std::uint64_t odd_mask = 0;
  for (Node i : parts.odd) odd_mask |= std::uint64_t{1} << i;
  const PackedStep step_map(g, k);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> generated;
  for (const auto& x : fixed)
    for (const auto& y : fixed) {
      if (x == y) continue;
      ++record.pairs_checked;
      const std::uint64_t a1 = (y.code() & odd_mask) | (x.code() & ~odd_mask);
      const std::uint64_t a2 = (x.code() & odd_mask) | (y.code() & ~odd_mask);
      if (step_map(a1) != a2 || step_map(a2) != a1 || a1 == a2)
        throw Error(ErrorKind::IdentityViolated,
                    "partition swap of fixed points " + x.str() + ", " + y.str() +
                        " is not a 2-cycle");
      generated.emplace_back(std::min(a1, a2), std::max(a1, a2));
    }
  std::sort(generated.begin(), generated.end());
  generated.erase(std::unique(generated.begin(), generated.end()), generated.end());
  record.pairing_generates_all = generated.size() == summary.two_cycles;
  if (!record.pairing_generates_all)
    throw Error(ErrorKind::IdentityViolated,
                "partition swaps produce " + std::to_string(generated.size()) +
                    " distinct 2-cycles, scan found " + std::to_string(summary.two_cycles));
  return record;
}

std::vector<ActionProfile> predecessors(const Graph& g, const ThresholdDist& k,
                                        const ActionProfile& a,
                                        const EnumerationOptions& options) {
  require_packable(g, k);
  require_guard(g.size(), options);
  const std::uint64_t target = code_of(a, g.size());
  const PackedStep f(g, k);
  std::vector<ActionProfile> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.size()); ++b)
    if (f(b) == target) out.push_back(ActionProfile::from_code(g.size(), b));
  return out;
}

std::uint64_t count_predecessors(const Graph& g, const ThresholdDist& k, const ActionProfile& a,
                                 const EnumerationOptions& options) {
  require_packable(g, k);
  require_guard(g.size(), options);
  const std::uint64_t target = code_of(a, g.size());
  const PackedStep f(g, k);
  std::atomic<std::uint64_t> total{0};
  sharded(std::uint64_t{1} << g.size(), options.workers,
          [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t local = 0;
            for (std::uint64_t b = begin; b < end; ++b) local += f(b) == target;
            total += local;
          });
  return total.load();
}

bool is_reachable(const Graph& g, const ThresholdDist& k, const ActionProfile& a,
                  const EnumerationOptions& options) {
  require_packable(g, k);
  require_guard(g.size(), options);
  const std::uint64_t target = code_of(a, g.size());
  const PackedStep f(g, k);
  std::atomic<bool> found{false};
  sharded(std::uint64_t{1} << g.size(), options.workers,
          [&](std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t b = begin; b < end; ++b) {
              if ((b & 0xffff) == 0 && found.load(std::memory_order_relaxed)) return;
              if (f(b) == target) {
                found = true;
                return;
              }
            }
          });
  return found.load();
}

Instance build_extremal_cycle_instance(std::size_t n, ExtremalKind kind) {
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  if (kind == ExtremalKind::Min) {
    if (n < 3 || n % 2 == 0)
      throw Error(ErrorKind::BadParameter, "the minimal instance needs an odd n >= 3");
    return {build_graph(n, edges), ThresholdDist::uniform(n, 1)};
  }
  if (n < 3 || n % 3 != 0)
    throw Error(ErrorKind::BadParameter, "the maximal instance needs n a positive multiple of 3");
  std::vector<int> k(n);
  for (Node i = 0; i < n; ++i) k[i] = i % 3 == 2 ? 2 : 1;
  return {build_graph(n, edges), ThresholdDist(std::move(k))};
}

}  // namespace tlab
