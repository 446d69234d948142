#include "domgraph/verify.hpp"

#include "domgraph/bounds.hpp"
#include "domgraph/corpus.hpp"
#include "domgraph/domination.hpp"
#include "domgraph/io.hpp"
#include "domgraph/ramsey.hpp"
#include "domgraph/subgraph.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace domgraph {

void CriterionResult::fail(std::string why) {
  passed = false;
  if (failures.size() < 8)
    failures.push_back(std::move(why));
}

Json to_json(const CriterionResult &r) {
  Json j;
  j["criterion"] = r.number;
  j["id"] = r.id;
  j["title"] = r.title;
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  return j;
}

namespace {

constexpr const char *kCorpusFile = "connected_upto8.g6";

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::string g6(const Graph &g) { return to_graph6(g); }

class Harness {
public:
  explicit Harness(const VerifyOptions &opts) : opts_(opts) {}

  const std::vector<Graph> &corpus() {
    if (!corpus_) {
      const auto path = opts_.fixture_dir / kCorpusFile;
      if (!std::filesystem::exists(path))
        throw std::runtime_error("missing fixture corpus " + path.string());
      corpus_ = load_graph6_file(path);
    }
    return *corpus_;
  }

  std::vector<std::string> corpus_lines() {
    std::ifstream in(opts_.fixture_dir / kCorpusFile);
    if (!in)
      throw std::runtime_error("missing fixture corpus " + (opts_.fixture_dir / kCorpusFile).string());
    return read_graph6_lines(in);
  }

  std::uint64_t seed_for(int criterion, int pool) const {
    // splitmix64 of (seed, criterion, pool)
    std::uint64_t z = opts_.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(criterion * 16 + pool + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::size_t samples() const { return opts_.samples; }

private:
  const VerifyOptions &opts_;
  std::optional<std::vector<Graph>> corpus_;
};

const std::vector<double> kDensities{0.3, 0.45, 0.6, 0.75, 0.9};

// 1. gamma(P_n) = ceil(n/3)
CriterionResult check_paths(Harness &) {
  CriterionResult r{"paths", 1, "gamma(P_n) = ceil(n/3) for 1 <= n <= 30, under 1 s each"};
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto gamma = gamma_exact(gen_path(n)).gamma;
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    r.expect(gamma == ceil_div(n, 3),
             "P_" + std::to_string(n) + ": gamma " + std::to_string(gamma));
    r.expect(took.count() < 1.0, "P_" + std::to_string(n) + " took over 1 s");
  }
  return r;
}

// 2. gamma(K*_n) = gamma(S*_n) = n, and gamma(P_{3c+1}) = c+1
CriterionResult check_families(Harness &) {
  CriterionResult r{"families", 2, "gamma(K*_n) = gamma(S*_n) = n for 1 <= n <= 8; gamma(P_{3c+1}) = c+1"};
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto k = gamma_exact(gen_k_star(n)).gamma;
    const auto s = gamma_exact(gen_s_star(n)).gamma;
    const auto p = gamma_exact(gen_path(3 * (n - 1) + 1)).gamma;
    r.expect(k == n, "K*_" + std::to_string(n) + ": gamma " + std::to_string(k));
    r.expect(s == n, "S*_" + std::to_string(n) + ": gamma " + std::to_string(s));
    r.expect(p == n, "P_" + std::to_string(3 * (n - 1) + 1) + ": gamma " + std::to_string(p));
  }
  return r;
}

// 3. Ore: gamma <= n/2 for connected n >= 2
CriterionResult check_ore(Harness &h) {
  CriterionResult r{"ore", 3, "gamma <= floor(n/2) on every connected graph with 2 <= n <= 8"};
  for (const Graph &g : h.corpus()) {
    if (g.order() < 2)
      continue;
    const auto gamma = gamma_exact(g).gamma;
    r.expect(gamma <= g.order() / 2, g6(g) + ": gamma " + std::to_string(gamma));
  }
  return r;
}

// 4. Cockayne-Ko-Shepherd
CriterionResult check_ckshep(Harness &h) {
  CriterionResult r{"ckshep", 4, "gamma <= ceil(n/3) on connected {K_{1,3}, K*_3}-free graphs, n <= 10"};
  const std::vector<Graph> family{gen_star(3), gen_k_star(3)};
  auto check = [&](const Graph &g) {
    const auto gamma = gamma_exact(g).gamma;
    r.expect(gamma <= ceil_div(g.order(), 3), g6(g) + ": gamma " + std::to_string(gamma));
  };
  std::size_t exhaustive = 0;
  for (const Graph &g : h.corpus()) {
    if (is_free(g, family)) {
      check(g);
      ++exhaustive;
    }
  }
  r.expect(exhaustive > 0, "no {K_{1,3}, K*_3}-free corpus graphs");
  int pool = 0;
  for (std::size_t n : {9u, 10u}) {
    SampleRequest req{h.samples(), n, n, {0.6, 0.7, 0.8, 0.9}};
    for (const Graph &g : sample_connected(h.seed_for(r.number, pool++), req,
                                           [&](const Graph &c) { return is_free(c, family).free; }))
      check(g);
  }
  return r;
}

// 5. Constructive bound soundness
CriterionResult check_soundness(Harness &h) {
  CriterionResult r{"soundness", 5,
                    "construct_dominating_set meets theorem_bound on {K*_3,S*_2,P_5}- and {K*_3,S*_3,P_6}-free "
                    "graphs"};
  int pool = 0;
  for (BoundParams p : {BoundParams{3, 2, 5}, BoundParams{3, 3, 6}}) {
    const auto family = forbidden_family(p);
    const BigInt bound = theorem_bound(p.k, p.l, p.m);
    SampleRequest req{h.samples(), 4, 11, kDensities};
    const auto graphs = sample_connected(h.seed_for(r.number, pool++), req,
                                         [&](const Graph &c) { return is_free(c, family).free; });
    for (const Graph &g : graphs) {
      const auto gamma = gamma_exact(g).gamma;
      for (Vertex root = 0; root < g.order(); ++root) {
        const auto c = construct_dominating_set(g, {root, p, false});
        const std::string tag = g6(g) + " root " + std::to_string(root);
        r.expect(is_dominating(g, c.dominating_set), tag + ": not dominating");
        r.expect(c.report.bound_held.value_or(false), tag + ": bound_held false");
        r.expect(BigInt(c.dominating_set.size()) <= bound, tag + ": |D| above theorem bound");
        r.expect(gamma <= c.dominating_set.size(), tag + ": |D| below gamma");
      }
    }
  }
  return r;
}

// 6. Maximal independent sets dominate; alpha < k => gamma <= k-1
CriterionResult check_proposition(Harness &h) {
  CriterionResult r{"proposition", 6,
                    "maximal independent sets dominate; independence number < k implies gamma <= k-1 (k <= 4)"};
  std::vector<Graph> empties;
  for (std::size_t k = 1; k <= 4; ++k)
    empties.push_back(gen_empty(k));
  for (const Graph &g : h.corpus()) {
    const auto mis = maximal_independent_subset(g, VertexSet::range(static_cast<Vertex>(g.order())));
    r.expect(is_dominating(g, mis), g6(g) + ": maximal independent set does not dominate");
    const auto gamma = gamma_exact(g).gamma;
    for (std::size_t k = 1; k <= 4; ++k) {
      if (!contains_induced(g, empties[k - 1]))
        r.expect(gamma <= k - 1, g6(g) + ": alpha < " + std::to_string(k) + " but gamma " + std::to_string(gamma));
    }
  }
  return r;
}

// 7. R(3,3) = 6 dichotomy over every labelled graph on 6 vertices
CriterionResult check_ramsey(Harness &) {
  CriterionResult r{"ramsey", 7, "every graph on 6 vertices has a triangle or an independent triple"};
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      pairs.emplace_back(u, v);
  const auto all = VertexSet::range(6);
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1)
        es.push_back(pairs[b]);
    const Graph g = Graph::from_edge_list(6, es);
    const auto w = ramsey_witness(g, all, 3, 3);
    const bool valid = (w.outcome == RamseyOutcome::clique && w.members.size() == 3 && is_clique(g, w.members)) ||
                       (w.outcome == RamseyOutcome::independent && w.members.size() == 3 &&
                        is_independent(g, w.members));
    r.expect(valid, g6(g) + ": " + to_string(w.outcome));
  }
  return r;
}

// 8. Witness extraction
CriterionResult check_witness(Harness &h) {
  CriterionResult r{"witness", 8,
                    "extract_forbidden_witness recovers induced K*/S* on violating graphs and nothing on "
                    "{K*_3,S*_2}-free graphs"};
  auto validate_all = [&](const Graph &g, const LayerDecomposition &layers, std::size_t k, std::size_t l,
                          const std::string &tag) {
    const auto ws = extract_all_witnesses(g, layers, k, l);
    r.expect(!ws.empty(), tag + ": no witness extracted");
    for (const auto &w : ws) {
      const Graph pattern = witness_pattern(w);
      r.expect(is_induced_embedding(g, pattern, w.embedding), tag + ": embedding not induced");
      r.expect(contains_induced(g, pattern).has_value(), tag + ": pattern not contained");
    }
    return ws;
  };
  // S*_l at the centre, with the largest l' whose layer-2 bound it exceeds.
  for (std::size_t l : {2u, 3u, 4u}) {
    std::size_t lp = 1;
    while (BigInt(l) > g_value(3, lp + 1, 2))
      ++lp;
    const Graph g = gen_s_star(l);
    validate_all(g, bfs_layers(g, 0), 3, lp, "S*_" + std::to_string(l) + " (k=3, l=" + std::to_string(lp) + ")");
  }
  // K*_n at pendant y_1 with k = n-1, l = 1: layer 3 carries K*_{n-1}.
  for (std::size_t n : {3u, 4u, 5u}) {
    const Graph g = gen_k_star(n);
    const auto root = static_cast<Vertex>(n);
    const auto ws = validate_all(g, bfs_layers(g, root), n - 1, 1, "K*_" + std::to_string(n));
    const bool has_kstar = std::any_of(ws.begin(), ws.end(), [&](const ForbiddenWitness &w) {
      return w.shape == WitnessShape::kstar && w.size == n - 1;
    });
    r.expect(has_kstar, "K*_" + std::to_string(n) + ": no K*_" + std::to_string(n - 1) + " witness");
  }
  // Free graphs never trigger extraction, from any root.
  const std::vector<Graph> family{gen_k_star(3), gen_s_star(2)};
  SampleRequest req{h.samples(), 4, 11, kDensities};
  for (const Graph &g : sample_connected(h.seed_for(r.number, 0), req,
                                         [&](const Graph &c) { return is_free(c, family).free; })) {
    for (Vertex root = 0; root < g.order(); ++root) {
      const auto ws = extract_all_witnesses(g, bfs_layers(g, root), 3, 2);
      r.expect(ws.empty(), g6(g) + " root " + std::to_string(root) + ": witness on a free graph");
    }
  }
  return r;
}

// 9. Bound table, hand-derived:
//   g(2,2,1) = 1, g(2,2,i) = R(2, 1*1+1) - 1 = R(2,2) - 1 = 1, f(2,2,i) = R(2,2)*1 = 2
//   g(3,3,2) = R(3, 2*1+1) - 1 = R(3,3) - 1 = 5, f(3,3,2) = 6*5 = 30
//   theorem_bound(2,2,5) = 1 + f(2,2,2) + f(2,2,3) = 5; theorem_bound(k,l,3) = 1 (empty sum)
CriterionResult check_bounds(Harness &) {
  CriterionResult r{"bounds", 9, "g, f and theorem_bound match hand-derived values"};
  for (std::size_t i = 1; i <= 12; ++i)
    r.expect(g_value(2, 2, i) == 1, "g(2,2," + std::to_string(i) + ") != 1");
  for (std::size_t i = 2; i <= 12; ++i)
    r.expect(f_value(2, 2, i) == 2, "f(2,2," + std::to_string(i) + ") != 2");
  r.expect(g_value(3, 3, 2) == 5, "g(3,3,2) != 5");
  r.expect(f_value(3, 3, 2) == 30, "f(3,3,2) != 30");
  r.expect(theorem_bound(2, 2, 5) == 5, "theorem_bound(2,2,5) != 5");
  r.expect(theorem_bound(3, 3, 4) == 31, "theorem_bound(3,3,4) != 31");
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t l = 1; l <= 6; ++l)
      r.expect(theorem_bound(k, l, 3) == 1, "theorem_bound(" + std::to_string(k) + "," + std::to_string(l) + ",3) != 1");
  return r;
}

// 10. Oracle equivalence
CriterionResult check_oracle(Harness &h) {
  CriterionResult r{"oracle", 10,
                    "gamma_exact = subset enumeration (connected n <= 7); contains_induced = subset scan (host <= 9, "
                    "pattern <= 5)"};
  std::vector<Graph> patterns;
  for (const Graph &g : h.corpus()) {
    if (g.order() <= 7) {
      const auto fast = gamma_exact(g).gamma;
      const auto slow = oracle::naive_gamma(g);
      r.expect(fast == slow, g6(g) + ": gamma " + std::to_string(fast) + " vs " + std::to_string(slow));
    }
    if (g.order() <= 5)
      patterns.push_back(g);
  }
  for (std::size_t n = 2; n <= 5; ++n)
    patterns.push_back(gen_empty(n));
  patterns.push_back(Graph::from_edge_list(4, {{0, 1}, {2, 3}})); // 2K_2
  GraphSampler sampler(h.seed_for(r.number, 0));
  const std::size_t hosts = std::max<std::size_t>(h.samples() / 5, 20);
  for (std::size_t i = 0; i < hosts; ++i) {
    const std::size_t n = sampler.uniform(1, 9);
    const Graph host = sampler.erdos_renyi(n, kDensities[sampler.uniform(0, kDensities.size() - 1)]);
    for (const Graph &p : patterns) {
      const auto e = contains_induced(host, p);
      const bool slow = oracle::brute_contains_induced(host, p);
      r.expect(e.has_value() == slow, g6(host) + " vs " + g6(p) + ": disagreement");
      if (e)
        r.expect(is_induced_embedding(host, p, *e), g6(host) + " vs " + g6(p) + ": invalid embedding");
    }
  }
  return r;
}

// 11. graph6 round trip and the documented byte examples
CriterionResult check_roundtrip(Harness &h) {
  CriterionResult r{"roundtrip", 11, "graph6 round trip over the corpus; \"D?\" and \"A_\" decode as documented"};
  for (const auto &line : h.corpus_lines())
    r.expect(to_graph6(parse_graph6(line)) == line, line + ": round trip changed the string");
  r.expect(parse_graph6("A_") == gen_complete(2), "\"A_\" is not K_2");
  try {
    r.expect(parse_graph6("D?") == gen_empty(5), "\"D?\" is not the empty graph on 5 vertices");
  } catch (const FormatError &e) {
    r.expect(false, std::string("\"D?\" rejected: ") + e.what() +
                        " (5 vertices need 2 body bytes; the empty graph is \"D??\")");
  }
  r.expect(parse_graph6("D??") == gen_empty(5), "\"D??\" is not the empty graph on 5 vertices");
  return r;
}

using Check = CriterionResult (*)(Harness &);

const std::vector<std::pair<std::string, Check>> &registry() {
  static const std::vector<std::pair<std::string, Check>> checks{
      {"paths", check_paths},         {"families", check_families}, {"ore", check_ore},
      {"ckshep", check_ckshep},       {"soundness", check_soundness}, {"proposition", check_proposition},
      {"ramsey", check_ramsey},       {"witness", check_witness},   {"bounds", check_bounds},
      {"oracle", check_oracle},       {"roundtrip", check_roundtrip},
  };
  return checks;
}

} // namespace

const std::vector<std::string> &criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &[name, fn] : registry())
      out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CriterionResult> run_verification(const std::vector<std::string> &names, const VerifyOptions &opts) {
  std::vector<bool> wanted(registry().size(), false);
  for (const auto &n : names) {
    if (n == "all") {
      std::fill(wanted.begin(), wanted.end(), true);
      continue;
    }
    const auto &names_list = criterion_names();
    const auto it = std::find(names_list.begin(), names_list.end(), n);
    if (it == names_list.end())
      throw std::invalid_argument("unknown verification suite '" + n + "'");
    wanted[static_cast<std::size_t>(it - names_list.begin())] = true;
  }
  Harness harness(opts);
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < registry().size(); ++i)
    if (wanted[i])
      out.push_back(registry()[i].second(harness));
  return out;
}

} // namespace domgraph
