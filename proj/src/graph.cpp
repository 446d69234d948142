#include "domgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace domgraph {

const char *to_string(GraphErrorKind kind) {
  switch (kind) {
  case GraphErrorKind::vertex_out_of_range:
    return "vertex_out_of_range";
  case GraphErrorKind::loop_edge:
    return "loop_edge";
  case GraphErrorKind::duplicate_edge:
    return "duplicate_edge";
  case GraphErrorKind::empty_graph:
    return "empty_graph";
  case GraphErrorKind::disconnected:
    return "disconnected";
  case GraphErrorKind::invalid_argument:
    return "invalid_argument";
  case GraphErrorKind::precondition:
    return "precondition";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(Vertex n) {
  VertexSet s;
  s.ids_.resize(n);
  for (Vertex v = 0; v < n; ++v)
    s.ids_[v] = v;
  return s;
}

VertexSet VertexSet::from_bits(const Bitset &bits) {
  VertexSet s;
  s.ids_.reserve(bits.count());
  for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v))
    s.ids_.push_back(static_cast<Vertex>(v));
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v)
    ids_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v)
    ids_.erase(it);
}

Bitset VertexSet::to_bits(std::size_t n) const {
  Bitset bits(n);
  for (Vertex v : ids_)
    bits.set(v);
  return bits;
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet set_intersection(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.ids_));
  return out;
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max())
    throw GraphError(GraphErrorKind::invalid_argument, "vertex count too large");
  Graph g;
  g.adj_.resize(n);
  g.bits_.assign(n, Bitset(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError(GraphErrorKind::vertex_out_of_range,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an id outside [0," + std::to_string(n) + ")");
    if (u == v)
      throw GraphError(GraphErrorKind::loop_edge, "loop edge at vertex " + std::to_string(u));
    if (g.bits_[u].test(v))
      throw GraphError(GraphErrorKind::duplicate_edge,
                       "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.bits_[u].set(v);
    g.bits_[v].set(u);
    ++g.edge_count_;
  }
  for (std::size_t v = 0; v < n; ++v)
    g.adj_[v] = VertexSet::from_bits(g.bits_[v]).ids();
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto &nb : adj_)
    best = std::max(best, nb.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> seq;
  seq.reserve(adj_.size());
  for (const auto &nb : adj_)
    seq.push_back(nb.size());
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

Graph Graph::induced(const VertexSet &vs) const {
  check_set(vs);
  const auto &ids = vs.ids();
  std::vector<Edge> es;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (adjacent(ids[i], ids[j]))
        es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return from_edge_list(ids.size(), es);
}

Graph Graph::complement() const {
  std::vector<Edge> es;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (!adjacent(u, v))
        es.emplace_back(u, v);
  return from_edge_list(order(), es);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order())
    throw GraphError(GraphErrorKind::vertex_out_of_range,
                     "vertex " + std::to_string(v) + " outside [0," + std::to_string(order()) + ")");
}

void Graph::check_set(const VertexSet &vs) const {
  if (!vs.empty())
    check_vertex(vs.ids().back());
}

// ---------------------------------------------------------------------------
// Neighbourhoods and layers

VertexSet open_neighborhood(const Graph &g, Vertex v) {
  g.check_vertex(v);
  const auto nb = g.neighbors(v);
  return VertexSet(std::vector<Vertex>(nb.begin(), nb.end()));
}

Bitset closed_neighborhood_bits(const Graph &g, const VertexSet &xs) {
  g.check_set(xs);
  Bitset covered(g.order());
  for (Vertex x : xs) {
    covered |= g.neighbor_bits(x);
    covered.set(x);
  }
  return covered;
}

VertexSet closed_neighborhood(const Graph &g, const VertexSet &xs) {
  return VertexSet::from_bits(closed_neighborhood_bits(g, xs));
}

bool dominates(const Graph &g, const VertexSet &xs, const VertexSet &ys) {
  g.check_set(ys);
  const Bitset covered = closed_neighborhood_bits(g, xs);
  return std::all_of(ys.begin(), ys.end(), [&](Vertex y) { return covered.test(y); });
}

const VertexSet &LayerDecomposition::layer(std::size_t i) const {
  if (i >= layers.size())
    throw GraphError(GraphErrorKind::invalid_argument,
                     "layer " + std::to_string(i) + " is empty (depth " + std::to_string(depth()) + ")");
  return layers[i];
}

VertexSet LayerDecomposition::layer_or_empty(std::size_t i) const {
  return i < layers.size() ? layers[i] : VertexSet{};
}

namespace {

std::vector<std::size_t> distances_from(const Graph &g, Vertex root) {
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), unseen);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == unseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

} // namespace

LayerDecomposition bfs_layers(const Graph &g, Vertex root) {
  g.check_vertex(root);
  const auto dist = distances_from(g, root);
  LayerDecomposition out;
  out.root = root;
  std::vector<std::vector<Vertex>> buckets;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] == std::numeric_limits<std::size_t>::max())
      continue;
    if (buckets.size() <= dist[v])
      buckets.resize(dist[v] + 1);
    buckets[dist[v]].push_back(v);
  }
  out.layers.reserve(buckets.size());
  for (auto &b : buckets)
    out.layers.emplace_back(std::move(b));
  return out;
}

bool is_connected(const Graph &g) {
  if (g.order() == 0)
    return false;
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

void require_connected(const Graph &g) {
  if (g.order() == 0)
    throw GraphError(GraphErrorKind::empty_graph, "graph has no vertices");
  if (!is_connected(g))
    throw GraphError(GraphErrorKind::disconnected, "graph is not connected");
}

std::size_t eccentricity(const Graph &g, Vertex v) {
  g.check_vertex(v);
  const auto dist = distances_from(g, v);
  std::size_t ecc = 0;
  for (auto d : dist) {
    if (d == std::numeric_limits<std::size_t>::max())
      throw GraphError(GraphErrorKind::disconnected, "eccentricity is infinite in a disconnected graph");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

Vertex central_vertex(const Graph &g) {
  require_connected(g);
  Vertex best = 0;
  std::size_t best_ecc = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (e < best_ecc) {
      best_ecc = e;
      best = v;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

void require_positive(std::size_t n, const char *family) {
  if (n == 0)
    throw GraphError(GraphErrorKind::invalid_argument, std::string(family) + " requires n >= 1");
}

} // namespace

Graph gen_path(std::size_t n) {
  require_positive(n, "path");
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v)
    es.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, es);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3)
    throw GraphError(GraphErrorKind::invalid_argument, "cycle requires n >= 3");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v)
    es.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edge_list(n, es);
}

Graph gen_complete(std::size_t n) {
  require_positive(n, "complete");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      es.emplace_back(u, v);
  return Graph::from_edge_list(n, es);
}

Graph gen_empty(std::size_t n) { return Graph::from_edge_list(n, {}); }

Graph gen_star(std::size_t leaves) {
  require_positive(leaves, "star");
  std::vector<Edge> es;
  for (Vertex v = 1; v <= leaves; ++v)
    es.emplace_back(0, v);
  return Graph::from_edge_list(leaves + 1, es);
}

Graph gen_k_star(std::size_t n) {
  require_positive(n, "kstar");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j)
      es.emplace_back(i, j);
    es.emplace_back(i, static_cast<Vertex>(n + i));
  }
  return Graph::from_edge_list(2 * n, es);
}

Graph gen_s_star(std::size_t n) {
  require_positive(n, "sstar");
  std::vector<Edge> es;
  for (Vertex i = 1; i <= n; ++i) {
    es.emplace_back(0, i);
    es.emplace_back(i, static_cast<Vertex>(n + i));
  }
  return Graph::from_edge_list(2 * n + 1, es);
}

} // namespace domgraph
