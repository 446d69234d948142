#include "domgraph/ramsey.hpp"

#include <algorithm>
#include <array>

namespace domgraph {

const char *to_string(RamseyKind kind) {
  return kind == RamseyKind::exact_known ? "exact-known" : "derived-upper";
}

const char *to_string(RamseyOutcome outcome) {
  switch (outcome) {
  case RamseyOutcome::clique:
    return "clique";
  case RamseyOutcome::independent:
    return "independent";
  case RamseyOutcome::not_found:
    return "not-found";
  }
  return "unknown";
}

namespace {

struct KnownRamsey {
  unsigned s;
  unsigned t;
  unsigned value;
};

// Established two-colour Ramsey numbers with 3 <= s <= t. Rows with s <= 2
// follow from R(1,t) = 1 and R(2,t) = t.
constexpr std::array<KnownRamsey, 9> kKnown{{
    {3, 3, 6},
    {3, 4, 9},
    {3, 5, 14},
    {3, 6, 18},
    {3, 7, 23},
    {3, 8, 28},
    {3, 9, 36},
    {4, 4, 18},
    {4, 5, 25},
}};

void check_width(const BigInt &v) {
  if (v > 0 && boost::multiprecision::msb(v) >= max_bound_bits)
    throw BoundOverflow("Ramsey bound exceeds " + std::to_string(max_bound_bits) + " bits");
}

} // namespace

BigInt ramsey_binomial_bound(const BigInt &s, const BigInt &t) {
  if (s < 1 || t < 1)
    throw GraphError(GraphErrorKind::invalid_argument, "Ramsey arguments must be positive");
  // C(s+t-2, r) with r = min(s,t)-1, evaluated as a running product that
  // stays integral at every step.
  const BigInt r = std::min(s, t) - 1;
  const BigInt top = s + t - 2;
  if (r > BigInt(max_bound_bits))
    throw BoundOverflow("Ramsey binomial bound has too many factors");
  BigInt acc = 1;
  for (BigInt j = 1; j <= r; ++j) {
    acc = acc * (top - r + j) / j;
    check_width(acc);
  }
  return acc;
}

RamseyValue ramsey_upper(const BigInt &s, const BigInt &t) {
  if (s < 1 || t < 1)
    throw GraphError(GraphErrorKind::invalid_argument, "Ramsey arguments must be positive");
  RamseyValue out{s, t, 0, RamseyKind::exact_known};
  const BigInt lo = std::min(s, t);
  const BigInt hi = std::max(s, t);
  if (lo == 1) {
    out.bound = 1;
    return out;
  }
  if (lo == 2) {
    out.bound = hi;
    return out;
  }
  for (const auto &k : kKnown) {
    if (lo == k.s && hi == k.t) {
      out.bound = k.value;
      return out;
    }
  }
  out.bound = ramsey_binomial_bound(lo, hi);
  out.kind = RamseyKind::derived_upper;
  return out;
}

RamseyValue ramsey_upper(std::uint64_t s, std::uint64_t t) { return ramsey_upper(BigInt(s), BigInt(t)); }

namespace {

// Lexicographically first k-subset of `pool` that is pairwise adjacent
// (want_edges) or pairwise non-adjacent (!want_edges).
class HomogeneousSearch {
public:
  HomogeneousSearch(const Graph &g, const VertexSet &pool, bool want_edges)
      : g_(g), pool_(pool.ids()), want_edges_(want_edges) {}

  bool find(std::size_t k) {
    picked_.clear();
    target_ = k;
    std::vector<std::size_t> cand(pool_.size());
    for (std::size_t i = 0; i < cand.size(); ++i)
      cand[i] = i;
    return grow(cand);
  }

  VertexSet result() const { return VertexSet(picked_); }

private:
  bool grow(const std::vector<std::size_t> &cand) {
    if (picked_.size() == target_)
      return true;
    if (picked_.size() + cand.size() < target_)
      return false;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (picked_.size() + (cand.size() - c) < target_)
        return false;
      const Vertex v = pool_[cand[c]];
      std::vector<std::size_t> next;
      for (std::size_t d = c + 1; d < cand.size(); ++d)
        if (g_.adjacent(v, pool_[cand[d]]) == want_edges_)
          next.push_back(cand[d]);
      picked_.push_back(v);
      if (grow(next))
        return true;
      picked_.pop_back();
    }
    return false;
  }

  const Graph &g_;
  const std::vector<Vertex> &pool_;
  bool want_edges_;
  std::size_t target_ = 0;
  std::vector<Vertex> picked_;
};

} // namespace

RamseyWitness ramsey_witness(const Graph &g, const VertexSet &s_set, std::size_t s, std::size_t t) {
  g.check_set(s_set);
  HomogeneousSearch cliques(g, s_set, true);
  if (cliques.find(s))
    return {RamseyOutcome::clique, cliques.result()};
  HomogeneousSearch independents(g, s_set, false);
  if (independents.find(t))
    return {RamseyOutcome::independent, independents.result()};
  return {};
}

} // namespace domgraph
