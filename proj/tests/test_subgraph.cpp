#include "domgraph/subgraph.hpp"

#include <doctest.h>

using namespace domgraph;

TEST_CASE("contains_induced finds a claw in the spider") {
  const Graph s3 = gen_s_star(3);
  const auto e = contains_induced(s3, gen_star(3));
  REQUIRE(e);
  CHECK(is_induced_embedding(s3, gen_star(3), *e));
  // Star centre is vertex 0; it can only land on x.
  CHECK(e->map[0] == 0);
  CHECK(VertexSet(std::vector<Vertex>(e->map.begin() + 1, e->map.end())) == VertexSet{1, 2, 3});
}

TEST_CASE("contains_induced negative cases") {
  CHECK_FALSE(contains_induced(gen_path(3), gen_path(4)));
  CHECK_FALSE(contains_induced(gen_complete(4), gen_path(3)));
  CHECK_FALSE(contains_induced(gen_cycle(5), gen_complete(3)));
  CHECK_FALSE(contains_induced(gen_cycle(5), gen_empty(3)));
  CHECK_FALSE(contains_induced(gen_cycle(6), gen_path(6)));
}

TEST_CASE("contains_induced is induced, not just a subgraph") {
  // C_4 contains P_4 as a subgraph but not induced.
  CHECK_FALSE(contains_induced(gen_cycle(4), gen_path(4)));
  CHECK(contains_induced(gen_cycle(5), gen_path(4)));
  CHECK(contains_induced(gen_path(5), gen_empty(3)));
}

TEST_CASE("empty pattern always embeds") {
  const auto e = contains_induced(gen_path(3), gen_empty(0));
  REQUIRE(e);
  CHECK(e->map.empty());
}

TEST_CASE("is_induced_embedding rejects bad maps") {
  const Graph p4 = gen_path(4);
  const Graph p3 = gen_path(3);
  CHECK(is_induced_embedding(p4, p3, Embedding{{0, 1, 2}}));
  CHECK_FALSE(is_induced_embedding(p4, p3, Embedding{{0, 1, 3}}));
  CHECK_FALSE(is_induced_embedding(p4, p3, Embedding{{0, 1, 1}}));
  CHECK_FALSE(is_induced_embedding(p4, p3, Embedding{{0, 1}}));
  CHECK_FALSE(is_induced_embedding(p4, p3, Embedding{{0, 1, 7}}));
  CHECK_FALSE(is_induced_embedding(gen_cycle(3), p3, Embedding{{0, 1, 2}}));
}

TEST_CASE("is_free") {
  CHECK(is_free(gen_complete(5), {gen_path(3)}).free);

  const auto r = is_free(gen_path(6), {gen_path(4)});
  CHECK_FALSE(r.free);
  REQUIRE(r.violated_pattern);
  CHECK(*r.violated_pattern == 0);
  REQUIRE(r.embedding);
  CHECK(is_induced_embedding(gen_path(6), gen_path(4), *r.embedding));
  auto image = r.embedding->map;
  std::sort(image.begin(), image.end());
  CHECK(image.back() - image.front() == 3);

  CHECK(is_free(gen_cycle(5), {gen_complete(3), gen_empty(3)}).free);

  const auto second = is_free(gen_s_star(2), {gen_complete(3), gen_path(5)});
  CHECK_FALSE(second.free);
  CHECK(second.violated_pattern == std::optional<std::size_t>{1});
}

TEST_CASE("leq_relation") {
  CHECK(leq_relation({gen_star(3)}, {gen_s_star(3)}));
  CHECK_FALSE(leq_relation({gen_path(4)}, {gen_path(3)}));
  const std::vector<Graph> family{gen_k_star(2), gen_s_star(2), gen_path(5)};
  CHECK(leq_relation(family, family));
  CHECK(leq_relation({gen_path(3)}, {gen_path(5), gen_s_star(2), gen_star(3)}));
  CHECK_FALSE(leq_relation({gen_complete(3)}, {gen_path(5), gen_complete(4)}));
  CHECK(leq_relation({gen_complete(3)}, {}));
}

TEST_CASE("bfs depth filter") {
  CHECK_FALSE(bfs_depth_consistent_with_path_free(gen_path(5), 5));
  CHECK(bfs_depth_consistent_with_path_free(gen_complete(6), 3));
  // S*_3 from z_1 reaches depth 4.
  CHECK_FALSE(bfs_depth_consistent_with_path_free(gen_s_star(3), 5));
  // One-sided: C_6 has an induced P_5 yet every BFS depth is 3.
  CHECK(bfs_depth_consistent_with_path_free(gen_cycle(6), 5));
  CHECK_FALSE(is_free(gen_cycle(6), {gen_path(5)}).free);
  CHECK_THROWS_AS(bfs_depth_consistent_with_path_free(gen_empty(3), 4), GraphError);
  CHECK_THROWS_AS(bfs_depth_consistent_with_path_free(gen_path(3), 1), GraphError);
}
