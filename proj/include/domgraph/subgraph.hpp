#pragma once

#include "domgraph/graph.hpp"

#include <optional>
#include <vector>

namespace domgraph {

/// Injective map pattern vertex -> host vertex; map[p] is the image of p.
struct Embedding {
  std::vector<Vertex> map;

  friend bool operator==(const Embedding &, const Embedding &) = default;
};

/// Re-checks injectivity and the induced condition pair by pair.
bool is_induced_embedding(const Graph &host, const Graph &pattern, const Embedding &e);

/// Exhaustive backtracking search for an induced copy of `pattern` in `host`.
/// Pattern vertices are placed in descending-degree order (ties by id) and
/// host candidates are tried in ascending id, so the result is deterministic.
/// An empty result certifies that `host` is pattern-free.
std::optional<Embedding> contains_induced(const Graph &host, const Graph &pattern);

struct FreenessResult {
  bool free = true;
  std::optional<std::size_t> violated_pattern; // index into the pattern list
  std::optional<Embedding> embedding;

  explicit operator bool() const noexcept { return free; }
};

FreenessResult is_free(const Graph &host, const std::vector<Graph> &patterns);

/// H1 <= H2: every member of H2 contains some member of H1 as an induced subgraph.
bool leq_relation(const std::vector<Graph> &h1, const std::vector<Graph> &h2);

/// Necessary condition for P_m-freeness of a connected graph: no BFS layer of
/// index >= m-1 from any root. One-sided; use is_free for the exact answer.
bool bfs_depth_consistent_with_path_free(const Graph &g, std::size_t m);

} // namespace domgraph
