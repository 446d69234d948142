#include "domgraph/bounds.hpp"

#include "domgraph/domination.hpp"

#include <limits>
#include <map>
#include <variant>

namespace domgraph {

std::vector<Graph> forbidden_family(const BoundParams &p) {
  return {gen_k_star(p.k), gen_s_star(p.l), gen_path(p.m)};
}

namespace {

void require_positive(std::size_t k, std::size_t l) {
  if (k == 0 || l == 0)
    throw GraphError(GraphErrorKind::invalid_argument, "k and l must be positive");
}

void check_width(const BigInt &v) {
  if (v > 0 && boost::multiprecision::msb(v) >= max_bound_bits)
    throw BoundOverflow("bound value exceeds " + std::to_string(max_bound_bits) + " bits");
}

// g(1..last) together with whether each Ramsey lookup was tabulated.
struct GTable {
  std::vector<BigInt> g{0, 1}; // index 0 unused
  bool exact = true;
};

GTable g_table(std::size_t k, std::size_t l, std::size_t last) {
  require_positive(k, l);
  GTable table;
  for (std::size_t i = 2; i <= last; ++i) {
    const BigInt t = BigInt(l - 1) * table.g[i - 1] + 1;
    const RamseyValue r = ramsey_upper(BigInt(k), t);
    table.exact = table.exact && r.kind == RamseyKind::exact_known;
    table.g.push_back(r.bound - 1);
    check_width(table.g.back());
  }
  return table;
}

} // namespace

BigInt g_value(std::size_t k, std::size_t l, std::size_t i) {
  if (i == 0)
    throw GraphError(GraphErrorKind::invalid_argument, "g is defined for i >= 1");
  return g_table(k, l, i).g[i];
}

BigInt f_value(std::size_t k, std::size_t l, std::size_t i) {
  if (i < 2)
    throw GraphError(GraphErrorKind::invalid_argument, "f is defined for i >= 2");
  BigInt out = ramsey_upper(k, l).bound * g_value(k, l, i);
  check_width(out);
  return out;
}

BigInt theorem_bound(std::size_t k, std::size_t l, std::size_t m) {
  require_positive(k, l);
  if (m == 0)
    throw GraphError(GraphErrorKind::invalid_argument, "m must be positive");
  if (m <= 3)
    return 1;
  const BigInt r = ramsey_upper(k, l).bound;
  const GTable table = g_table(k, l, m - 2);
  BigInt total = 1;
  for (std::size_t i = 2; i <= m - 2; ++i) {
    total += r * table.g[i];
    check_width(total);
  }
  return total;
}

RamseyKind theorem_bound_kind(std::size_t k, std::size_t l, std::size_t m) {
  const bool exact = ramsey_upper(k, l).kind == RamseyKind::exact_known &&
                     (m <= 3 || g_table(k, l, m - 2).exact);
  return exact ? RamseyKind::exact_known : RamseyKind::derived_upper;
}

// ---------------------------------------------------------------------------
// Layer construction

LayerConstruction construct_layer(const Graph &g, const LayerDecomposition &layers, std::size_t i) {
  if (i < 2)
    throw GraphError(GraphErrorKind::invalid_argument, "layer construction needs i >= 2");
  LayerConstruction out;
  out.index = i;
  out.layer = layers.layer(i);
  if (out.layer.empty())
    throw GraphError(GraphErrorKind::invalid_argument, "layer " + std::to_string(i) + " is empty");
  out.independent = maximal_independent_subset(g, out.layer);
  out.parents = minimal_dominating_subset(g, layers.layer(i - 1), out.independent);
  out.residual = set_difference(out.layer, closed_neighborhood(g, out.parents));
  out.extra = minimal_dominating_subset(g, out.independent, out.residual);
  out.cover = set_union(out.parents, out.extra);
  return out;
}

VertexSet dominate_layer(const Graph &g, const LayerDecomposition &layers, std::size_t i) {
  return construct_layer(g, layers, i).cover;
}

Construction construct_dominating_set(const Graph &g, const ConstructOptions &opts) {
  require_connected(g);
  const Vertex root = opts.root ? *opts.root : central_vertex(g);
  g.check_vertex(root);
  const LayerDecomposition layers = bfs_layers(g, root);

  Construction out;
  out.dominating_set = VertexSet{root};
  BoundReport &report = out.report;
  report.root = root;
  report.params = opts.params;

  std::optional<BigInt> ramsey_kl;
  GTable table;
  if (opts.params) {
    const auto &p = *opts.params;
    if (p.m == 0)
      throw GraphError(GraphErrorKind::invalid_argument, "m must be positive");
    ramsey_kl = ramsey_upper(p.k, p.l).bound;
    table = g_table(p.k, p.l, p.m >= 4 ? p.m - 2 : 1);
    report.total_bound = theorem_bound(p.k, p.l, p.m);
    report.certificate = theorem_bound_kind(p.k, p.l, p.m);
  }

  bool layers_ok = true;
  for (std::size_t i = 2; i < layers.layers.size(); ++i) {
    const VertexSet cover = dominate_layer(g, layers, i);
    out.dominating_set = set_union(out.dominating_set, cover);
    LayerReport lr;
    lr.index = i;
    lr.layer_size = layers.layers[i].size();
    lr.cover_size = cover.size();
    if (opts.params && i + 2 <= opts.params->m) {
      lr.bound = *ramsey_kl * table.g[i];
      lr.within_bound = BigInt(lr.cover_size) <= *lr.bound;
    }
    layers_ok = layers_ok && lr.within_bound;
    report.total_size += lr.cover_size;
    report.layers.push_back(std::move(lr));
  }
  report.distinct_size = out.dominating_set.size();

  if (opts.params) {
    report.bound_held = layers_ok && BigInt(report.total_size) <= *report.total_bound;
    if (opts.check_freeness) {
      report.freeness_checked = true;
      report.family_free = is_free(g, forbidden_family(*opts.params)).free;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Witness extraction

const char *to_string(WitnessShape shape) { return shape == WitnessShape::kstar ? "kstar" : "sstar"; }

Graph witness_pattern(const ForbiddenWitness &w) {
  return w.shape == WitnessShape::kstar ? gen_k_star(w.size) : gen_s_star(w.size);
}

namespace {

std::size_t to_size(const BigInt &v) {
  if (v > BigInt(std::numeric_limits<std::size_t>::max()))
    throw ExtractionContradiction("count does not fit in a machine word");
  return v.convert_to<std::size_t>();
}

// K*_k from a clique with pendant images: x_j -> clique[j], y_j -> pendant[j].
ForbiddenWitness kstar_witness(const std::vector<Vertex> &clique, const std::vector<Vertex> &pendants,
                               std::size_t layer) {
  ForbiddenWitness w{WitnessShape::kstar, clique.size(), {}, layer};
  w.embedding.map = clique;
  w.embedding.map.insert(w.embedding.map.end(), pendants.begin(), pendants.end());
  return w;
}

// S*_l: x -> centre, y_j -> middle[j], z_j -> tips[j].
ForbiddenWitness sstar_witness(Vertex centre, const std::vector<Vertex> &middle, const std::vector<Vertex> &tips,
                               std::size_t layer) {
  ForbiddenWitness w{WitnessShape::sstar, middle.size(), {}, layer};
  w.embedding.map.push_back(centre);
  w.embedding.map.insert(w.embedding.map.end(), middle.begin(), middle.end());
  w.embedding.map.insert(w.embedding.map.end(), tips.begin(), tips.end());
  return w;
}

class WitnessExtractor {
public:
  WitnessExtractor(const Graph &g, const LayerDecomposition &layers, std::size_t k, std::size_t l)
      : g_(g), layers_(layers), k_(k), l_(l), ramsey_kl_(ramsey_upper(k, l).bound) {}

  std::optional<ForbiddenWitness> extract(std::size_t i) {
    const VertexSet layer = layers_.layer_or_empty(i);
    if (layer.empty())
      return std::nullopt;
    const VertexSet x = maximal_independent_subset(g_, layer);
    auto first = bounded_dominator(i, x);
    if (auto *w = std::get_if<ForbiddenWitness>(&first))
      return checked(*w);
    const VertexSet u = std::get<VertexSet>(std::move(first));

    const VertexSet residual = set_difference(layer, closed_neighborhood(g_, u));
    const VertexSet x0 = minimal_dominating_subset(g_, x, residual);
    if (BigInt(x0.size()) <= (ramsey_kl_ - 1) * g(i))
      return std::nullopt;
    return checked(from_oversized_extra(i, u, x0, residual));
  }

private:
  // Either a subset of N^{i-1}(a) of size <= g(i) dominating the independent
  // set X inside N^i(a), or the forbidden subgraph that blocks one.
  std::variant<VertexSet, ForbiddenWitness> bounded_dominator(std::size_t i, const VertexSet &x) {
    if (i == 1)
      return VertexSet{layers_.root};
    const VertexSet u = minimal_dominating_subset(g_, layers_.layer(i - 1), x);
    if (BigInt(u.size()) <= g(i))
      return u;

    const auto pendant = private_neighbors(g_, u, x);
    const std::size_t t = to_size(BigInt(l_ - 1) * g(i - 1) + 1);
    const RamseyWitness rw = ramsey_witness(g_, u, k_, t);
    if (rw.outcome == RamseyOutcome::clique) {
      std::vector<Vertex> tips;
      for (Vertex v : rw.members)
        tips.push_back(pendant.at(v));
      return kstar_witness(rw.members.ids(), tips, i);
    }
    if (rw.outcome == RamseyOutcome::not_found)
      throw ExtractionContradiction("layer " + std::to_string(i) + ": |U| = " + std::to_string(u.size()) +
                                    " exceeds g but U has neither a " + std::to_string(k_) +
                                    "-clique nor an independent " + std::to_string(t) + "-set");

    const VertexSet &u2 = rw.members;
    auto lower = bounded_dominator(i - 1, u2);
    if (std::holds_alternative<ForbiddenWitness>(lower))
      return lower;
    const VertexSet &u_prime = std::get<VertexSet>(lower);
    for (Vertex centre : u_prime) {
      const VertexSet hits = set_intersection(open_neighborhood(g_, centre), u2);
      if (hits.size() < l_)
        continue;
      std::vector<Vertex> middle(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(l_));
      std::vector<Vertex> tips;
      for (Vertex v : middle)
        tips.push_back(pendant.at(v));
      return sstar_witness(centre, middle, tips, i);
    }
    throw ExtractionContradiction("layer " + std::to_string(i) + ": no vertex of U' has " + std::to_string(l_) +
                                  " neighbours in the independent set");
  }

  // |X0| > (R(k,l)-1) g(i): some u' in U sees at least R(k,l) members of X0.
  ForbiddenWitness from_oversized_extra(std::size_t i, const VertexSet &u, const VertexSet &x0,
                                        const VertexSet &residual) {
    const auto tip_of = private_neighbors(g_, x0, residual);
    for (Vertex centre : u) {
      const VertexSet seen = set_intersection(open_neighborhood(g_, centre), x0);
      if (BigInt(seen.size()) < ramsey_kl_)
        continue;
      std::vector<Vertex> ys;
      std::map<Vertex, Vertex> owner; // y -> x_y
      for (Vertex x : seen) {
        ys.push_back(tip_of.at(x));
        owner[tip_of.at(x)] = x;
      }
      const RamseyWitness rw = ramsey_witness(g_, VertexSet(ys), k_, l_);
      std::vector<Vertex> partners;
      for (Vertex y : rw.members)
        partners.push_back(owner.at(y));
      if (rw.outcome == RamseyOutcome::clique)
        return kstar_witness(rw.members.ids(), partners, i);
      if (rw.outcome == RamseyOutcome::independent)
        return sstar_witness(centre, partners, rw.members.ids(), i);
      throw ExtractionContradiction("layer " + std::to_string(i) + ": " + std::to_string(ys.size()) +
                                    " private neighbours without a Ramsey witness");
    }
    throw ExtractionContradiction("layer " + std::to_string(i) + ": |X0| = " + std::to_string(x0.size()) +
                                  " exceeds its bound but no vertex of U is heavy");
  }

  ForbiddenWitness checked(ForbiddenWitness w) const {
    if (!is_induced_embedding(g_, witness_pattern(w), w.embedding))
      throw ExtractionContradiction("assembled " + std::string(to_string(w.shape)) + " witness at layer " +
                                    std::to_string(w.layer) + " is not an induced copy");
    return w;
  }

  const BigInt &g(std::size_t i) {
    while (g_cache_.size() <= i)
      g_cache_ = g_table(k_, l_, std::max<std::size_t>(2 * g_cache_.size(), i)).g;
    return g_cache_[i];
  }

  const Graph &g_;
  const LayerDecomposition &layers_;
  std::size_t k_;
  std::size_t l_;
  BigInt ramsey_kl_;
  std::vector<BigInt> g_cache_;
};

} // namespace

std::optional<ForbiddenWitness> extract_forbidden_witness(const Graph &g, const LayerDecomposition &layers,
                                                          std::size_t i, std::size_t k, std::size_t l) {
  if (i < 2)
    throw GraphError(GraphErrorKind::invalid_argument, "witness extraction needs i >= 2");
  require_positive(k, l);
  return WitnessExtractor(g, layers, k, l).extract(i);
}

std::vector<ForbiddenWitness> extract_all_witnesses(const Graph &g, const LayerDecomposition &layers,
                                                    std::size_t k, std::size_t l) {
  require_positive(k, l);
  WitnessExtractor extractor(g, layers, k, l);
  std::vector<ForbiddenWitness> out;
  for (std::size_t i = 2; i < layers.layers.size(); ++i)
    if (auto w = extractor.extract(i))
      out.push_back(std::move(*w));
  return out;
}

} // namespace domgraph
