#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace domgraph::oracle {

namespace {

// Calls visit(subset) for every k-subset of pool in lexicographic order;
// stops early when visit returns true.
template <class Visit>
bool for_each_subset(const std::vector<Vertex> &pool, std::size_t k, Visit visit) {
  if (k > pool.size())
    return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<Vertex> subset(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i)
      subset[i] = pool[idx[i]];
    if (visit(subset))
      return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1)
      --i;
    if (i == 0)
      return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Vertex> all_vertices(const Graph &g) {
  std::vector<Vertex> vs(g.order());
  std::iota(vs.begin(), vs.end(), Vertex{0});
  return vs;
}

bool homogeneous(const Graph &g, const std::vector<Vertex> &s, bool edges) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j]) != edges)
        return false;
  return true;
}

} // namespace

bool dominates_all(const Graph &g, const std::vector<Vertex> &d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    bool covered = false;
    for (Vertex u : d)
      covered = covered || u == v || g.adjacent(u, v);
    if (!covered)
      return false;
  }
  return true;
}

std::size_t naive_gamma(const Graph &g) {
  const auto vs = all_vertices(g);
  for (std::size_t k = 0; k <= g.order(); ++k)
    if (for_each_subset(vs, k, [&](const std::vector<Vertex> &d) { return dominates_all(g, d); }))
      return k;
  return g.order();
}

bool brute_contains_induced(const Graph &host, const Graph &pattern) {
  const std::size_t k = pattern.order();
  return for_each_subset(all_vertices(host), k, [&](std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    do {
      bool ok = true;
      for (Vertex u = 0; u < k && ok; ++u)
        for (Vertex v = u + 1; v < k && ok; ++v)
          ok = pattern.adjacent(u, v) == host.adjacent(s[u], s[v]);
      if (ok)
        return true;
    } while (std::next_permutation(s.begin(), s.end()));
    return false;
  });
}

bool brute_ramsey_property(const Graph &g, const std::vector<Vertex> &pool, std::size_t s, std::size_t t) {
  return for_each_subset(pool, s, [&](const std::vector<Vertex> &c) { return homogeneous(g, c, true); }) ||
         for_each_subset(pool, t, [&](const std::vector<Vertex> &c) { return homogeneous(g, c, false); });
}

std::size_t brute_independence_number(const Graph &g) {
  const auto vs = all_vertices(g);
  std::size_t best = 0;
  for (std::size_t k = 1; k <= g.order(); ++k)
    if (for_each_subset(vs, k, [&](const std::vector<Vertex> &c) { return homogeneous(g, c, false); }))
      best = k;
    else
      break;
  return best;
}

} // namespace domgraph::oracle
