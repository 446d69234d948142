#include "domgraph/domination.hpp"

#include <doctest.h>

using namespace domgraph;

TEST_CASE("gamma_exact examples") {
  CHECK(gamma_exact(gen_complete(6)).gamma == 1);
  CHECK(gamma_exact(gen_path(7)).gamma == 3);
  CHECK(gamma_exact(gen_k_star(4)).gamma == 4);
  CHECK(gamma_exact(gen_cycle(4)).gamma == 2);
  CHECK(gamma_exact(gen_empty(4)).gamma == 4);
  CHECK(gamma_exact(gen_empty(1)).gamma == 1);
  CHECK(gamma_exact(gen_star(6)).gamma == 1);
  CHECK_THROWS_AS(gamma_exact(gen_empty(0)), GraphError);
}

TEST_CASE("gamma_exact witness is a minimum dominating set") {
  for (const Graph &g : {gen_path(10), gen_cycle(9), gen_s_star(5), gen_k_star(6)}) {
    const auto r = gamma_exact(g);
    CHECK(r.witness.size() == r.gamma);
    CHECK(is_dominating(g, r.witness));
  }
}

TEST_CASE("gamma_exact handles disconnected graphs") {
  const Graph g = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}});
  CHECK(gamma_exact(g).gamma == 3);
}

TEST_CASE("is_dominating") {
  CHECK(is_dominating(gen_path(3), VertexSet{1}));
  CHECK_FALSE(is_dominating(gen_path(3), VertexSet{0}));
  CHECK(is_dominating(gen_s_star(3), VertexSet{1, 2, 3}));
  CHECK_FALSE(is_dominating(gen_path(2), VertexSet{}));
}

TEST_CASE("minimal_dominating_subset") {
  const Graph p3 = gen_path(3);
  CHECK(minimal_dominating_subset(p3, VertexSet{0, 1}, VertexSet{2}) == VertexSet{1});

  const Graph k5 = gen_complete(5);
  CHECK(minimal_dominating_subset(k5, VertexSet::range(5), VertexSet::range(5)) == VertexSet{0});

  const Graph s3 = gen_s_star(3);
  CHECK(minimal_dominating_subset(s3, VertexSet{1, 2, 3}, VertexSet{4, 5, 6}) == VertexSet{1, 2, 3});

  CHECK(minimal_dominating_subset(p3, VertexSet{0}, VertexSet{}).empty());
  CHECK_THROWS_AS(minimal_dominating_subset(p3, VertexSet{0}, VertexSet{2}), GraphError);
}

TEST_CASE("minimal_dominating_subset is inclusion minimal") {
  const Graph c8 = gen_cycle(8);
  const VertexSet u = VertexSet::range(8);
  const VertexSet d = minimal_dominating_subset(c8, u, u);
  CHECK(dominates(c8, d, u));
  for (Vertex v : d) {
    VertexSet smaller = d;
    smaller.erase(v);
    CHECK_FALSE(dominates(c8, smaller, u));
  }
}

TEST_CASE("maximal_independent_subset") {
  CHECK(maximal_independent_subset(gen_complete(5), VertexSet::range(5)) == VertexSet{0});
  CHECK(maximal_independent_subset(gen_empty(4), VertexSet::range(4)) == VertexSet::range(4));
  CHECK(maximal_independent_subset(gen_path(5), VertexSet{1, 2, 3}) == VertexSet{1, 3});
  CHECK(maximal_independent_subset(gen_path(5), VertexSet{}).empty());
}

TEST_CASE("private_neighbors") {
  const Graph s3 = gen_s_star(3);
  const auto pn = private_neighbors(s3, VertexSet{1, 2, 3}, VertexSet{4, 5, 6});
  CHECK(pn == std::map<Vertex, Vertex>{{1, 4}, {2, 5}, {3, 6}});

  CHECK(private_neighbors(gen_path(3), VertexSet{1}, VertexSet{0, 2}) == std::map<Vertex, Vertex>{{1, 0}});

  // K*_3: x_1=0, y_1=3.
  CHECK(private_neighbors(gen_k_star(3), VertexSet{0}, VertexSet{3}) == std::map<Vertex, Vertex>{{0, 3}});

  // 0 and 1 see each other, so neither has a private neighbour.
  const Graph p4 = gen_path(4);
  CHECK_THROWS_AS(private_neighbors(p4, VertexSet{0, 1}, VertexSet{0, 1}), GraphError);
}

TEST_CASE("is_independent and is_clique") {
  CHECK(is_independent(gen_path(5), VertexSet{0, 2, 4}));
  CHECK_FALSE(is_independent(gen_path(5), VertexSet{0, 1}));
  CHECK(is_clique(gen_k_star(4), VertexSet{0, 1, 2, 3}));
  CHECK_FALSE(is_clique(gen_k_star(4), VertexSet{0, 5}));
  CHECK(is_clique(gen_path(2), VertexSet{}));
  CHECK(is_independent(gen_path(2), VertexSet{1}));
}
