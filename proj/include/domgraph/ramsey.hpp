#pragma once

#include "domgraph/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace domgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Bound values wider than this many bits are refused with BoundOverflow.
inline constexpr std::size_t max_bound_bits = 1u << 16;

class BoundOverflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

enum class RamseyKind { exact_known, derived_upper };

const char *to_string(RamseyKind kind);

struct RamseyValue {
  BigInt s;
  BigInt t;
  BigInt bound;
  RamseyKind kind = RamseyKind::exact_known;
};

/// Upper bound on R(s,t): a published exact value when one is tabulated,
/// otherwise the Erdos-Szekeres bound C(s+t-2, s-1).
RamseyValue ramsey_upper(const BigInt &s, const BigInt &t);
RamseyValue ramsey_upper(std::uint64_t s, std::uint64_t t);

/// C(s+t-2, s-1), the table-free bound.
BigInt ramsey_binomial_bound(const BigInt &s, const BigInt &t);

enum class RamseyOutcome { clique, independent, not_found };

const char *to_string(RamseyOutcome outcome);

struct RamseyWitness {
  RamseyOutcome outcome = RamseyOutcome::not_found;
  VertexSet members;

  bool found() const noexcept { return outcome != RamseyOutcome::not_found; }
};

/// Lexicographically first clique of size s inside S, else the first
/// independent set of size t, else not_found. Exhaustive.
RamseyWitness ramsey_witness(const Graph &g, const VertexSet &s_set, std::size_t s, std::size_t t);

} // namespace domgraph
