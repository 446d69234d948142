#include "domgraph/bounds.hpp"
#include "domgraph/domination.hpp"

#include <doctest.h>

using namespace domgraph;

TEST_CASE("g_value") {
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t l = 1; l <= 5; ++l)
      CHECK(g_value(k, l, 1) == 1);
  for (std::size_t i = 1; i <= 10; ++i)
    CHECK(g_value(2, 2, i) == 1);
  CHECK(g_value(3, 3, 2) == 5);
  CHECK(g_value(3, 2, 2) == 2);
  CHECK(g_value(3, 2, 3) == 5);  // R(3,3) - 1
  CHECK(g_value(4, 2, 3) == 17); // R(4,4) - 1
  CHECK(g_value(3, 3, 3) == 65); // C(12,2) - 1
  CHECK(g_value(4, 1, 2) == 0);
  CHECK_THROWS_AS(g_value(3, 3, 0), GraphError);
}

TEST_CASE("f_value") {
  for (std::size_t i = 2; i <= 10; ++i)
    CHECK(f_value(2, 2, i) == 2);
  CHECK(f_value(3, 3, 2) == 30);
  CHECK(f_value(3, 2, 2) == 6);
  CHECK(f_value(3, 2, 3) == 15);
  CHECK_THROWS_AS(f_value(3, 3, 1), GraphError);
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t l = 1; l <= 4; ++l)
      for (std::size_t i = 2; i <= 4; ++i)
        CHECK(f_value(k, l, i) >= g_value(k, l, i));
}

TEST_CASE("theorem_bound") {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t l = 1; l <= 4; ++l) {
      CHECK(theorem_bound(k, l, 3) == 1);
      CHECK(theorem_bound(k, l, 1) == 1);
    }
  CHECK(theorem_bound(2, 2, 5) == 5);
  CHECK(theorem_bound(3, 3, 4) == 31);
  CHECK(theorem_bound(3, 2, 5) == 22);
  CHECK(theorem_bound(3, 3, 6) == 52291);
  CHECK(theorem_bound_kind(3, 3, 4) == RamseyKind::exact_known);
  CHECK(theorem_bound_kind(3, 3, 5) == RamseyKind::derived_upper);
  CHECK(theorem_bound_kind(3, 2, 5) == RamseyKind::exact_known);
}

TEST_CASE("theorem_bound overflows loudly") {
  CHECK_THROWS_AS(theorem_bound(6, 6, 12), BoundOverflow);
}

TEST_CASE("forbidden_family") {
  const auto fam = forbidden_family({3, 2, 5});
  REQUIRE(fam.size() == 3);
  CHECK(fam[0] == gen_k_star(3));
  CHECK(fam[1] == gen_s_star(2));
  CHECK(fam[2] == gen_path(5));
}

TEST_CASE("dominate_layer examples") {
  const Graph p5 = gen_path(5);
  const auto lp = bfs_layers(p5, 0);
  const auto c = construct_layer(p5, lp, 2);
  CHECK(c.independent == VertexSet{2});
  CHECK(c.parents == VertexSet{1});
  CHECK(c.extra.empty());
  CHECK(dominate_layer(p5, lp, 2) == VertexSet{1});

  const Graph s3 = gen_s_star(3);
  const auto ls = bfs_layers(s3, 0);
  const auto cs = construct_layer(s3, ls, 2);
  CHECK(cs.independent == VertexSet{4, 5, 6});
  CHECK(cs.parents == VertexSet{1, 2, 3});
  CHECK(cs.residual.empty());
  CHECK(cs.cover == VertexSet{1, 2, 3});
}

TEST_CASE("dominate_layer covers its layer") {
  for (const Graph &g : {gen_cycle(11), gen_k_star(5), gen_s_star(4), gen_path(9)}) {
    for (Vertex a = 0; a < g.order(); ++a) {
      const auto layers = bfs_layers(g, a);
      for (std::size_t i = 2; i < layers.layers.size(); ++i) {
        const auto c = construct_layer(g, layers, i);
        CHECK(dominates(g, c.cover, c.layer));
        CHECK(is_independent(g, c.independent));
        CHECK(dominates(g, c.parents, c.independent));
        CHECK(set_union(c.parents, c.extra) == c.cover);
      }
    }
  }
}

TEST_CASE("construct_dominating_set on complete graphs") {
  for (Vertex a = 0; a < 6; ++a) {
    const auto built = construct_dominating_set(gen_complete(6), {a, BoundParams{3, 2, 5}, true});
    CHECK(built.dominating_set == VertexSet{a});
    CHECK(built.report.total_size == 1);
    CHECK(built.report.bound_held == std::optional<bool>{true});
    CHECK(built.report.family_free == std::optional<bool>{true});
  }
}

TEST_CASE("construct_dominating_set on P_7 from the centre") {
  const Graph p7 = gen_path(7);
  const auto built = construct_dominating_set(p7, {Vertex{3}, std::nullopt, false});
  CHECK(is_dominating(p7, built.dominating_set));
  // Layers {2,4}, {1,5}, {0,6}: each cover is the two parents.
  CHECK(built.dominating_set == VertexSet{1, 2, 3, 4, 5});
  CHECK(built.report.total_size == 5);
  CHECK_FALSE(built.report.bound_held.has_value());
  CHECK(gamma_exact(p7).gamma <= built.dominating_set.size());
}

TEST_CASE("construct_dominating_set default root and parameters") {
  const auto built = construct_dominating_set(gen_path(7));
  CHECK(built.report.root == 3);
  CHECK_FALSE(built.report.params);
  CHECK_FALSE(built.report.freeness_checked);

  const Graph p7 = gen_path(7);
  const auto with = construct_dominating_set(p7, {Vertex{0}, BoundParams{2, 2, 5}, true});
  // Depth 6 exceeds m - 2, so layers past 3 carry no bound.
  CHECK(with.report.bound_held == std::optional<bool>{false});
  CHECK(with.report.family_free == std::optional<bool>{false});
  CHECK(is_dominating(p7, with.dominating_set));
}

TEST_CASE("construct_dominating_set rejects bad input") {
  CHECK_THROWS_AS(construct_dominating_set(gen_empty(3)), GraphError);
  CHECK_THROWS_AS(construct_dominating_set(gen_path(3), {Vertex{5}, std::nullopt, false}), GraphError);
}
