#include "domgraph/domination.hpp"
#include "domgraph/ramsey.hpp"

#include <doctest.h>

using namespace domgraph;

TEST_CASE("ramsey_upper table values") {
  const auto r22 = ramsey_upper(2, 2);
  CHECK(r22.bound == 2);
  CHECK(r22.kind == RamseyKind::exact_known);
  CHECK(ramsey_upper(3, 3).bound == 6);
  CHECK(ramsey_upper(3, 3).kind == RamseyKind::exact_known);
  for (std::uint64_t t = 1; t <= 20; ++t) {
    CHECK(ramsey_upper(1, t).bound == 1);
    CHECK(ramsey_upper(2, t).bound == t);
    CHECK(ramsey_upper(t, 2).bound == t);
  }
  CHECK(ramsey_upper(4, 4).bound == 18);
  CHECK(ramsey_upper(5, 4).bound == 25);
  CHECK(ramsey_upper(9, 3).bound == 36);
}

TEST_CASE("ramsey_upper falls back to the binomial bound") {
  const auto r55 = ramsey_upper(5, 5);
  CHECK(r55.kind == RamseyKind::derived_upper);
  CHECK(r55.bound == 70); // C(8,4)
  CHECK(ramsey_upper(3, 11).bound == 66);
  CHECK(ramsey_binomial_bound(3, 3) == 6);
  CHECK(ramsey_binomial_bound(4, 4) == 20);
}

TEST_CASE("ramsey_upper is symmetric and at least max(s,t) once s,t >= 2") {
  for (std::uint64_t s = 1; s <= 12; ++s)
    for (std::uint64_t t = 1; t <= 12; ++t) {
      const auto a = ramsey_upper(s, t);
      const auto b = ramsey_upper(t, s);
      CHECK(a.bound == b.bound);
      CHECK(a.kind == b.kind);
      if (s >= 2 && t >= 2)
        CHECK(a.bound >= std::max(s, t));
    }
}

TEST_CASE("ramsey_upper rejects zero and huge arguments") {
  CHECK_THROWS(ramsey_upper(0, 3));
  const BigInt huge = BigInt(1) << 20000;
  CHECK_THROWS_AS(ramsey_upper(huge, huge), BoundOverflow);
}

TEST_CASE("ramsey_witness") {
  const Graph c5 = gen_cycle(5);
  CHECK(ramsey_witness(c5, VertexSet::range(5), 3, 3).outcome == RamseyOutcome::not_found);
  CHECK_FALSE(ramsey_witness(c5, VertexSet::range(5), 3, 3).found());

  const auto indep = ramsey_witness(gen_empty(4), VertexSet::range(4), 3, 4);
  CHECK(indep.outcome == RamseyOutcome::independent);
  CHECK(indep.members == VertexSet::range(4));

  const auto tri = ramsey_witness(gen_k_star(3), VertexSet::range(6), 3, 3);
  CHECK(tri.outcome == RamseyOutcome::clique);
  CHECK(tri.members == VertexSet{0, 1, 2});

  // Restricted to the pendants of K*_3 only an independent triple remains.
  const auto pend = ramsey_witness(gen_k_star(3), VertexSet{3, 4, 5}, 3, 3);
  CHECK(pend.outcome == RamseyOutcome::independent);
  CHECK(pend.members == VertexSet{3, 4, 5});

  // Lexicographically first clique.
  const auto first = ramsey_witness(gen_complete(5), VertexSet::range(5), 2, 9);
  CHECK(first.members == VertexSet{0, 1});
}

TEST_CASE("ramsey_witness on six vertices always succeeds") {
  const Graph c6 = gen_cycle(6);
  const auto w = ramsey_witness(c6, VertexSet::range(6), 3, 3);
  REQUIRE(w.found());
  CHECK(w.outcome == RamseyOutcome::independent);
  CHECK(is_independent(c6, w.members));
}
