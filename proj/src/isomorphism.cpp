#include "tlab/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "tlab/error.hpp"

namespace tlab {

namespace {

// Both graphs live in one colour array: nodes of `a` first, then `b`.
class Matcher {
 public:
  Matcher(const Graph& a, const ThresholdDist& ka, const Graph& b, const ThresholdDist& kb)
      : a_(a), ka_(ka), b_(b), kb_(kb), na_(a.size()) {}

  std::optional<std::vector<Node>> run() {
    std::vector<std::size_t> colors(2 * na_);
    std::map<std::pair<int, std::size_t>, std::size_t> seed;
    for (Node i = 0; i < na_; ++i) {
      colors[i] = seed.try_emplace({ka_[i], a_.degree(i)}, seed.size()).first->second;
      colors[na_ + i] = seed.try_emplace({kb_[i], b_.degree(i)}, seed.size()).first->second;
    }
    return search(std::move(colors));
  }

 private:
  const Graph& neighbors_of(std::size_t v, Node& local) const {
    if (v < na_) {
      local = v;
      return a_;
    }
    local = v - na_;
    return b_;
  }

  // Refines to a stable partition; false if the two sides' histograms differ.
  bool refine(std::vector<std::size_t>& colors) const {
    std::size_t classes = 0;
    for (;;) {
      std::map<std::vector<std::size_t>, std::size_t> ids;
      std::vector<std::size_t> next(colors.size());
      for (std::size_t v = 0; v < colors.size(); ++v) {
        Node local;
        const Graph& g = neighbors_of(v, local);
        const std::size_t offset = v < na_ ? 0 : na_;
        std::vector<std::size_t> signature{colors[v]};
        for (Node u : g.neighbors(local)) signature.push_back(colors[offset + u]);
        std::sort(signature.begin() + 1, signature.end());
        next[v] = ids.try_emplace(std::move(signature), ids.size()).first->second;
      }
      std::vector<long> balance(ids.size(), 0);
      for (std::size_t v = 0; v < next.size(); ++v) balance[next[v]] += v < na_ ? 1 : -1;
      if (std::any_of(balance.begin(), balance.end(), [](long x) { return x != 0; }))
        return false;
      colors = std::move(next);
      if (ids.size() == classes) return true;
      classes = ids.size();
    }
  }

  std::optional<std::vector<Node>> search(std::vector<std::size_t> colors) const {
    if (!refine(colors)) return std::nullopt;
    std::map<std::size_t, std::size_t> size_a;
    for (Node i = 0; i < na_; ++i) ++size_a[colors[i]];
    std::size_t best_color = 0, best_size = 0;
    for (auto [c, s] : size_a)
      if (s > 1 && (best_size == 0 || s < best_size)) best_color = c, best_size = s;
    if (best_size == 0) {
      std::map<std::size_t, Node> image;
      for (Node i = 0; i < na_; ++i) image[colors[na_ + i]] = i;
      std::vector<Node> mapping(na_);
      for (Node i = 0; i < na_; ++i) mapping[i] = image.at(colors[i]);
      for (const Edge& e : a_.edges())
        if (!b_.has_edge(mapping[e.u], mapping[e.v])) return std::nullopt;
      for (Node i = 0; i < na_; ++i)
        if (ka_[i] != kb_[mapping[i]]) return std::nullopt;
      return mapping;
    }
    Node v = 0;
    while (colors[v] != best_color) ++v;
    const std::size_t fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    for (Node u = 0; u < na_; ++u) {
      if (colors[na_ + u] != best_color) continue;
      auto trial = colors;
      trial[v] = fresh;
      trial[na_ + u] = fresh;
      if (auto found = search(std::move(trial))) return found;
    }
    return std::nullopt;
  }

  const Graph& a_;
  const ThresholdDist& ka_;
  const Graph& b_;
  const ThresholdDist& kb_;
  std::size_t na_;
};

}  // namespace

std::optional<std::vector<Node>> find_isomorphism(const Graph& a, const ThresholdDist& ka,
                                                  const Graph& b, const ThresholdDist& kb) {
  if (ka.size() != a.size() || kb.size() != b.size())
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from n");
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  return Matcher(a, ka, b, kb).run();
}

bool isomorphic(const Graph& a, const ThresholdDist& ka, const Graph& b,
                const ThresholdDist& kb) {
  return find_isomorphism(a, ka, b, kb).has_value();
}

}  // namespace tlab
