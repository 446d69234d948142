#include "domgraph/subgraph.hpp"

#include <algorithm>
#include <numeric>

namespace domgraph {

bool is_induced_embedding(const Graph &host, const Graph &pattern, const Embedding &e) {
  if (e.map.size() != pattern.order())
    return false;
  Bitset used(host.order());
  for (Vertex image : e.map) {
    if (image >= host.order() || used.test(image))
      return false;
    used.set(image);
  }
  for (Vertex u = 0; u < pattern.order(); ++u)
    for (Vertex v = u + 1; v < pattern.order(); ++v)
      if (pattern.adjacent(u, v) != host.adjacent(e.map[u], e.map[v]))
        return false;
  return true;
}

namespace {

class InducedMatcher {
public:
  InducedMatcher(const Graph &host, const Graph &pattern)
      : host_(host), pattern_(pattern), order_(pattern.order()), map_(pattern.order()),
        used_(host.order()) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
  }

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order())
      return std::nullopt;
    if (!place(0))
      return std::nullopt;
    return Embedding{map_};
  }

private:
  bool place(std::size_t depth) {
    if (depth == order_.size())
      return true;
    const Vertex p = order_[depth];
    const std::size_t need = pattern_.degree(p);
    for (Vertex c = 0; c < host_.order(); ++c) {
      if (used_.test(c) || host_.degree(c) < need)
        continue;
      if (!consistent(depth, p, c))
        continue;
      map_[p] = c;
      used_.set(c);
      if (place(depth + 1))
        return true;
      used_.reset(c);
    }
    return false;
  }

  bool consistent(std::size_t depth, Vertex p, Vertex c) const {
    for (std::size_t d = 0; d < depth; ++d) {
      const Vertex q = order_[d];
      if (pattern_.adjacent(p, q) != host_.adjacent(c, map_[q]))
        return false;
    }
    return true;
  }

  const Graph &host_;
  const Graph &pattern_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  Bitset used_;
};

} // namespace

std::optional<Embedding> contains_induced(const Graph &host, const Graph &pattern) {
  return InducedMatcher(host, pattern).run();
}

FreenessResult is_free(const Graph &host, const std::vector<Graph> &patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (auto e = contains_induced(host, patterns[i]))
      return FreenessResult{false, i, std::move(e)};
  }
  return {};
}

bool leq_relation(const std::vector<Graph> &h1, const std::vector<Graph> &h2) {
  return std::all_of(h2.begin(), h2.end(), [&](const Graph &big) {
    return std::any_of(h1.begin(), h1.end(),
                       [&](const Graph &small) { return contains_induced(big, small).has_value(); });
  });
}

bool bfs_depth_consistent_with_path_free(const Graph &g, std::size_t m) {
  if (m < 2)
    throw GraphError(GraphErrorKind::invalid_argument, "path length m must be at least 2");
  require_connected(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (bfs_layers(g, v).depth() >= m - 1)
      return false;
  return true;
}

} // namespace domgraph
