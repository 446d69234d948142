#include "domgraph/corpus.hpp"
#include "domgraph/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace domgraph;

namespace {

Graph relabel(const Graph &g, const std::vector<Vertex> &perm) {
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    es.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.order(), es);
}

} // namespace

TEST_CASE("enumerators match known counts") {
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(enumerate_graphs(n).size() == all[n - 1]);
    CHECK(enumerate_connected(n).size() == connected[n - 1]);
  }
}

TEST_CASE("fixture corpus holds every connected graph up to 8 vertices") {
  const auto corpus = load_graph6_file(std::filesystem::path(DOMGRAPH_FIXTURE_DIR) / "connected_upto8.g6");
  std::map<std::size_t, std::size_t> by_order;
  for (const Graph &g : corpus) {
    CHECK(is_connected(g));
    ++by_order[g.order()];
  }
  CHECK(by_order == std::map<std::size_t, std::size_t>{
                        {1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}, {7, 853}, {8, 11117}});
}

TEST_CASE("load_graph6_file reports a missing file") {
  CHECK_THROWS_AS(load_graph6_file("/nonexistent/corpus.g6"), std::runtime_error);
}

TEST_CASE("canonical form is a relabelling invariant") {
  std::mt19937_64 rng(5);
  GraphSampler sampler(3);
  for (int rep = 0; rep < 100; ++rep) {
    const Graph g = sampler.erdos_renyi(sampler.uniform(1, 9), sampler.unit());
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    CHECK(canonical_graph6(g) == canonical_graph6(h));
    CHECK(canonical_form(g).degree_sequence() == g.degree_sequence());
  }
  CHECK(canonical_graph6(gen_path(4)) != canonical_graph6(gen_star(3)));
  CHECK(canonical_graph6(gen_s_star(1)) == canonical_graph6(gen_path(3)));
  CHECK(canonical_graph6(gen_k_star(2)) == canonical_graph6(gen_path(4)));
  CHECK(canonical_graph6(gen_s_star(2)) == canonical_graph6(gen_path(5)));
  CHECK(canonical_graph6(gen_k_star(1)) == canonical_graph6(gen_complete(2)));
}

TEST_CASE("sampler is deterministic per seed") {
  GraphSampler a(42), b(42), c(43);
  bool differs = false;
  for (int rep = 0; rep < 20; ++rep) {
    const Graph ga = a.erdos_renyi(8, 0.5);
    CHECK(ga == b.erdos_renyi(8, 0.5));
    differs = differs || !(ga == c.erdos_renyi(8, 0.5));
  }
  CHECK(differs);
}

TEST_CASE("sampler ranges") {
  GraphSampler s(9);
  for (int rep = 0; rep < 1000; ++rep) {
    const auto v = s.uniform(3, 7);
    CHECK(v >= 3);
    CHECK(v <= 7);
    const double u = s.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(s.erdos_renyi(6, 0.0).edge_count() == 0);
  CHECK(s.erdos_renyi(6, 1.0).edge_count() == 15);
}

TEST_CASE("sample_connected") {
  SampleRequest req;
  req.count = 50;
  req.min_order = 4;
  req.max_order = 8;
  req.densities = {0.4, 0.7};
  const auto keep_all = [](const Graph &) { return true; };
  const auto xs = sample_connected(17, req, keep_all);
  CHECK(xs.size() == 50);
  for (const Graph &g : xs) {
    CHECK(is_connected(g));
    CHECK(g.order() >= 4);
    CHECK(g.order() <= 8);
  }
  CHECK(xs == sample_connected(17, req, keep_all));

  req.max_attempts = 100;
  CHECK_THROWS_AS(sample_connected(17, req, [](const Graph &) { return false; }), std::runtime_error);
}
