#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domgraph {

using Vertex = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

enum class GraphErrorKind {
  vertex_out_of_range,
  loop_edge,
  duplicate_edge,
  empty_graph,
  disconnected,
  invalid_argument,
  precondition,
};

const char *to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
public:
  GraphError(GraphErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

private:
  GraphErrorKind kind_;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(Vertex n);
  static VertexSet from_bits(const Bitset &bits);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Vertex front() const { return ids_.front(); }

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Vertex> &ids() const noexcept { return ids_; }

  Bitset to_bits(std::size_t n) const;

  friend VertexSet set_union(const VertexSet &a, const VertexSet &b);
  friend VertexSet set_difference(const VertexSet &a, const VertexSet &b);
  friend VertexSet set_intersection(const VertexSet &a, const VertexSet &b);

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_difference(const VertexSet &a, const VertexSet &b);
VertexSet set_intersection(const VertexSet &a, const VertexSet &b);

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
  Graph() = default;

  /// Rejects out-of-range ids, loops and repeated edges (in either orientation).
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  const Bitset &neighbor_bits(Vertex v) const { return bits_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return bits_[u].test(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  std::size_t max_degree() const noexcept;

  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const; // non-increasing

  /// Subgraph induced by `vs`, relabelled 0..|vs|-1 in ascending id order.
  Graph induced(const VertexSet &vs) const;
  Graph complement() const;

  void check_vertex(Vertex v) const;
  void check_set(const VertexSet &vs) const;

  friend bool operator==(const Graph &a, const Graph &b) { return a.adj_ == b.adj_; }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> bits_;
  std::size_t edge_count_ = 0;
};

/// N(v) as a set.
VertexSet open_neighborhood(const Graph &g, Vertex v);

/// N[X]: X together with every neighbour of a member of X.
VertexSet closed_neighborhood(const Graph &g, const VertexSet &xs);
Bitset closed_neighborhood_bits(const Graph &g, const VertexSet &xs);

/// True iff Y is contained in N[X].
bool dominates(const Graph &g, const VertexSet &xs, const VertexSet &ys);

struct LayerDecomposition {
  Vertex root = 0;
  std::vector<VertexSet> layers; // layers[i] = vertices at distance exactly i

  std::size_t depth() const noexcept { return layers.empty() ? 0 : layers.size() - 1; }
  const VertexSet &layer(std::size_t i) const;
  /// Empty set for indices past the last layer.
  VertexSet layer_or_empty(std::size_t i) const;
};

LayerDecomposition bfs_layers(const Graph &g, Vertex root);

/// False for the empty graph.
bool is_connected(const Graph &g);

std::size_t eccentricity(const Graph &g, Vertex v);

/// Lowest-id vertex of minimum eccentricity. Requires a connected graph.
Vertex central_vertex(const Graph &g);

void require_connected(const Graph &g);

// Family generators. Labelling is fixed:
//   K*_n : x_1..x_n -> 0..n-1, pendant y_i -> n+i-1
//   S*_n : centre x -> 0, y_i -> i, z_i -> n+i
Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_empty(std::size_t n);
Graph gen_star(std::size_t leaves); // K_{1,leaves}
Graph gen_k_star(std::size_t n);
Graph gen_s_star(std::size_t n);

} // namespace domgraph
