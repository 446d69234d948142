#pragma once

#include "domgraph/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace domgraph {

/// Relabelling-invariant form: two graphs are isomorphic iff their canonical
/// forms are equal. Colour refinement plus individualisation, keeping the
/// lexicographically largest upper triangle over all leaves.
Graph canonical_form(const Graph &g);
std::string canonical_graph6(const Graph &g);

/// One representative per isomorphism class on exactly n vertices, in
/// canonical form, sorted by graph6 string.
std::vector<Graph> enumerate_graphs(std::size_t n);
std::vector<Graph> enumerate_connected(std::size_t n);

/// Graphs of a graph6 fixture file. Throws std::runtime_error if missing.
std::vector<Graph> load_graph6_file(const std::filesystem::path &path);

/// Seeded Erdos-Renyi sampler. The stream depends only on the seed.
class GraphSampler {
public:
  explicit GraphSampler(std::uint64_t seed) : rng_(seed) {}

  Graph erdos_renyi(std::size_t n, double p);
  std::size_t uniform(std::size_t lo, std::size_t hi); // inclusive
  double unit();

private:
  std::mt19937_64 rng_;
};

struct SampleRequest {
  std::size_t count = 0;
  std::size_t min_order = 1;
  std::size_t max_order = 1;
  std::vector<double> densities{0.5};
  std::size_t max_attempts = 1'000'000;
};

/// Connected G(n,p) samples accepted by `keep`, in draw order. Throws
/// std::runtime_error if `count` samples are not found within max_attempts.
std::vector<Graph> sample_connected(std::uint64_t seed, const SampleRequest &req,
                                    const std::function<bool(const Graph &)> &keep);

} // namespace domgraph
