#include "domgraph/corpus.hpp"

#include "domgraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace domgraph {

namespace {

using Colouring = std::vector<std::size_t>;

// Replaces each colour by the rank of (colour, sorted neighbour colours)
// until the number of classes stops growing.
std::size_t refine(const Graph &g, Colouring &colour) {
  const std::size_t n = g.order();
  std::size_t classes = std::set<std::size_t>(colour.begin(), colour.end()).size();
  for (;;) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w : g.neighbors(v))
        sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (sorted.size() == classes)
      return classes;
    classes = sorted.size();
  }
}

class Canonicaliser {
public:
  explicit Canonicaliser(const Graph &g) : g_(g) {}

  Graph run() {
    Colouring colour(g_.order(), 0);
    refine(g_, colour);
    search(colour);
    std::vector<Edge> es;
    const std::size_t n = g_.order();
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i, ++k)
        if (best_[k])
          es.emplace_back(i, j);
    return Graph::from_edge_list(n, es);
  }

private:
  void search(const Colouring &colour) {
    const std::size_t n = g_.order();
    std::vector<std::size_t> count(n, 0);
    for (auto c : colour)
      ++count[c];
    const auto target = std::find_if(count.begin(), count.end(), [](std::size_t c) { return c > 1; });
    if (target == count.end()) {
      consider(colour);
      return;
    }
    const std::size_t cell = static_cast<std::size_t>(target - count.begin());
    for (Vertex v = 0; v < n; ++v) {
      if (colour[v] != cell)
        continue;
      Colouring next(n);
      for (Vertex w = 0; w < n; ++w)
        next[w] = 2 * colour[w] + (colour[w] == cell && w != v ? 1 : 0);
      refine(g_, next);
      search(next);
    }
  }

  // `colour` is discrete: vertex v goes to position colour[v].
  void consider(const Colouring &colour) {
    const std::size_t n = g_.order();
    std::vector<Vertex> at(n);
    for (Vertex v = 0; v < n; ++v)
      at[colour[v]] = v;
    std::vector<bool> bits;
    bits.reserve(n * (n - 1) / 2);
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        bits.push_back(g_.adjacent(at[i], at[j]));
    if (!have_best_ || bits > best_) {
      best_ = std::move(bits);
      have_best_ = true;
    }
  }

  const Graph &g_;
  std::vector<bool> best_;
  bool have_best_ = false;
};

} // namespace

Graph canonical_form(const Graph &g) {
  if (g.order() <= 1)
    return g;
  return Canonicaliser(g).run();
}

std::string canonical_graph6(const Graph &g) { return to_graph6(canonical_form(g)); }

std::vector<Graph> enumerate_graphs(std::size_t n) {
  std::vector<Graph> level{gen_empty(0)};
  for (std::size_t order = 1; order <= n; ++order) {
    std::set<std::string> seen;
    const std::size_t prev = order - 1;
    for (const Graph &h : level) {
      const auto base = h.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << prev); ++mask) {
        std::vector<Edge> es = base;
        for (Vertex v = 0; v < prev; ++v)
          if (mask >> v & 1)
            es.emplace_back(v, static_cast<Vertex>(prev));
        seen.insert(canonical_graph6(Graph::from_edge_list(order, es)));
      }
    }
    level.clear();
    for (const auto &s : seen)
      level.push_back(parse_graph6(s));
  }
  return level;
}

std::vector<Graph> enumerate_connected(std::size_t n) {
  auto all = enumerate_graphs(n);
  std::erase_if(all, [](const Graph &g) { return !is_connected(g); });
  return all;
}

std::vector<Graph> load_graph6_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open fixture " + path.string());
  return read_graph6(in);
}

// ---------------------------------------------------------------------------
// Sampling

double GraphSampler::unit() {
  // 53 random mantissa bits; independent of the standard library's distributions.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

std::size_t GraphSampler::uniform(std::size_t lo, std::size_t hi) {
  if (hi < lo)
    throw std::invalid_argument("empty sampling range");
  const std::uint64_t span = hi - lo + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = rng_();
  } while (r >= limit);
  return lo + static_cast<std::size_t>(r % span);
}

Graph GraphSampler::erdos_renyi(std::size_t n, double p) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit() < p)
        es.emplace_back(u, v);
  return Graph::from_edge_list(n, es);
}

std::vector<Graph> sample_connected(std::uint64_t seed, const SampleRequest &req,
                                    const std::function<bool(const Graph &)> &keep) {
  if (req.densities.empty())
    throw std::invalid_argument("no densities to sample from");
  GraphSampler sampler(seed);
  std::vector<Graph> out;
  for (std::size_t attempt = 0; attempt < req.max_attempts && out.size() < req.count; ++attempt) {
    const std::size_t n = sampler.uniform(req.min_order, req.max_order);
    const double p = req.densities[sampler.uniform(0, req.densities.size() - 1)];
    Graph g = sampler.erdos_renyi(n, p);
    if (is_connected(g) && keep(g))
      out.push_back(std::move(g));
  }
  if (out.size() < req.count)
    throw std::runtime_error("sampler accepted only " + std::to_string(out.size()) + " of " +
                             std::to_string(req.count) + " graphs");
  return out;
}

} // namespace domgraph
