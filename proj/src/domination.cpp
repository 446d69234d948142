#include "domgraph/domination.hpp"

#include <algorithm>

namespace domgraph {

namespace {

class DominationSearch {
public:
  explicit DominationSearch(const Graph &g) : g_(g), span_(g.max_degree() + 1) {
    closed_.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      Bitset b = g.neighbor_bits(v);
      b.set(v);
      closed_.push_back(std::move(b));
    }
  }

  bool search(std::size_t budget) {
    chosen_.clear();
    return extend(Bitset(g_.order()), budget);
  }

  const std::vector<Vertex> &chosen() const { return chosen_; }

private:
  bool extend(const Bitset &dominated, std::size_t budget) {
    const std::size_t missing = g_.order() - dominated.count();
    if (missing == 0)
      return true;
    // Each further pick covers at most Delta+1 vertices.
    if (chosen_.size() + (missing + span_ - 1) / span_ > budget)
      return false;
    Bitset open = ~dominated;
    const auto v = static_cast<Vertex>(open.find_first());
    for (auto u = closed_[v].find_first(); u != Bitset::npos; u = closed_[v].find_next(u)) {
      chosen_.push_back(static_cast<Vertex>(u));
      if (extend(dominated | closed_[u], budget))
        return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph &g_;
  std::size_t span_;
  std::vector<Bitset> closed_;
  std::vector<Vertex> chosen_;
};

} // namespace

GammaResult gamma_exact(const Graph &g) {
  if (g.order() == 0)
    throw GraphError(GraphErrorKind::empty_graph, "domination number of the empty graph is undefined");
  DominationSearch search(g);
  const std::size_t span = g.max_degree() + 1;
  for (std::size_t budget = (g.order() + span - 1) / span; budget <= g.order(); ++budget) {
    if (search.search(budget))
      return {budget, VertexSet(search.chosen())};
  }
  // Unreachable: V(G) itself dominates.
  throw GraphError(GraphErrorKind::precondition, "domination search exhausted without a solution");
}

bool is_dominating(const Graph &g, const VertexSet &d) {
  return closed_neighborhood_bits(g, d).all();
}

VertexSet minimal_dominating_subset(const Graph &g, const VertexSet &u, const VertexSet &x) {
  g.check_set(u);
  g.check_set(x);
  // cover[y] = number of members of the current set in N[y]
  std::vector<std::size_t> cover(g.order(), 0);
  for (Vertex w : u) {
    ++cover[w];
    for (Vertex y : g.neighbors(w))
      ++cover[y];
  }
  const Bitset targets = x.to_bits(g.order());
  for (Vertex y : x)
    if (cover[y] == 0)
      throw GraphError(GraphErrorKind::precondition,
                       "U does not dominate X (vertex " + std::to_string(y) + " uncovered)");

  auto keeps_coverage = [&](Vertex w) {
    if (targets.test(w) && cover[w] == 1)
      return false;
    for (Vertex y : g.neighbors(w))
      if (targets.test(y) && cover[y] == 1)
        return false;
    return true;
  };

  std::vector<Vertex> kept(u.begin(), u.end());
  for (std::size_t i = kept.size(); i-- > 0;) {
    const Vertex w = kept[i];
    if (!keeps_coverage(w))
      continue;
    --cover[w];
    for (Vertex y : g.neighbors(w))
      --cover[y];
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return VertexSet(std::move(kept));
}

VertexSet maximal_independent_subset(const Graph &g, const VertexSet &s) {
  g.check_set(s);
  Bitset blocked(g.order());
  std::vector<Vertex> picked;
  for (Vertex v : s) {
    if (blocked.test(v))
      continue;
    picked.push_back(v);
    blocked |= g.neighbor_bits(v);
  }
  return VertexSet(std::move(picked));
}

std::map<Vertex, Vertex> private_neighbors(const Graph &g, const VertexSet &u, const VertexSet &x) {
  g.check_set(u);
  g.check_set(x);
  const Bitset members = u.to_bits(g.order());
  std::map<Vertex, Vertex> out;
  for (Vertex y : x) {
    Bitset hits = g.neighbor_bits(y) & members;
    if (members.test(y))
      hits.set(y);
    if (hits.count() == 1) {
      const auto owner = static_cast<Vertex>(hits.find_first());
      out.try_emplace(owner, y); // x is scanned in ascending id
    }
  }
  for (Vertex w : u)
    if (!out.contains(w))
      throw GraphError(GraphErrorKind::precondition,
                       "vertex " + std::to_string(w) + " has no private neighbour in X");
  return out;
}

bool is_independent(const Graph &g, const VertexSet &s) {
  g.check_set(s);
  const auto &ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j]))
        return false;
  return true;
}

bool is_clique(const Graph &g, const VertexSet &s) {
  g.check_set(s);
  const auto &ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!g.adjacent(ids[i], ids[j]))
        return false;
  return true;
}

} // namespace domgraph
