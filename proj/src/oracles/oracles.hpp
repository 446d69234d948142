#pragma once

// Brute-force reference routines. They read only Graph::order/adjacent so
// they share no code path with the solvers they check.

#include "domgraph/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace domgraph::oracle {

/// Every vertex is in D or adjacent to a member of D.
bool dominates_all(const Graph &g, const std::vector<Vertex> &d);

/// Domination number by scanning all subsets in increasing size.
std::size_t naive_gamma(const Graph &g);

/// Induced containment by trying every |V(H)|-subset of the host under
/// every ordering.
bool brute_contains_induced(const Graph &host, const Graph &pattern);

/// Some s-subset of `pool` is a clique or some t-subset is independent.
bool brute_ramsey_property(const Graph &g, const std::vector<Vertex> &pool, std::size_t s, std::size_t t);

/// Largest independent set size by subset scan.
std::size_t brute_independence_number(const Graph &g);

} // namespace domgraph::oracle
