#pragma once

#include "domgraph/graph.hpp"

#include <map>

namespace domgraph {

struct GammaResult {
  std::size_t gamma = 0;
  VertexSet witness;
};

/// Minimum dominating set by branch and bound with an increasing size target.
/// Branches on the lowest-id undominated vertex v over N[v] in ascending id;
/// a partial solution is cut when the undominated count cannot be covered by
/// the remaining budget at Delta+1 vertices per pick.
GammaResult gamma_exact(const Graph &g);

/// N[D] = V(G).
bool is_dominating(const Graph &g, const VertexSet &d);

/// Inclusion-minimal U' of U dominating X. Members are dropped greedily from
/// the highest id down, so lower ids survive ties.
VertexSet minimal_dominating_subset(const Graph &g, const VertexSet &u, const VertexSet &x);

/// Greedy maximal independent subset of S in ascending id order.
VertexSet maximal_independent_subset(const Graph &g, const VertexSet &s);

/// For every u in U, the lowest-id x in X whose closed neighbourhood meets U
/// only in u. Throws GraphError(precondition) if some u has none, i.e. U is
/// not inclusion-minimal for X.
std::map<Vertex, Vertex> private_neighbors(const Graph &g, const VertexSet &u, const VertexSet &x);

bool is_independent(const Graph &g, const VertexSet &s);
bool is_clique(const Graph &g, const VertexSet &s);

} // namespace domgraph
