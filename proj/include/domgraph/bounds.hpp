#pragma once

#include "domgraph/graph.hpp"
#include "domgraph/ramsey.hpp"
#include "domgraph/subgraph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace domgraph {

/// Forbidden family {K*_k, S*_l, P_m}.
struct BoundParams {
  std::size_t k = 1;
  std::size_t l = 1;
  std::size_t m = 1;
};

std::vector<Graph> forbidden_family(const BoundParams &p);

// g(1) = 1, g(i) = R(k, (l-1) g(i-1) + 1) - 1 with R from ramsey_upper.
BigInt g_value(std::size_t k, std::size_t l, std::size_t i);
// f(i) = R(k,l) g(i), defined for i >= 2.
BigInt f_value(std::size_t k, std::size_t l, std::size_t i);
// 1 + sum_{i=2}^{m-2} f(i).
BigInt theorem_bound(std::size_t k, std::size_t l, std::size_t m);

/// exact-known iff every Ramsey value feeding theorem_bound(k,l,m) is tabulated.
RamseyKind theorem_bound_kind(std::size_t k, std::size_t l, std::size_t m);

/// Intermediate sets of the per-layer construction, kept for reports and tests.
struct LayerConstruction {
  std::size_t index = 0;
  VertexSet layer;       // N^i(a)
  VertexSet independent; // X: maximal independent subset of the layer
  VertexSet parents;     // U: minimal subset of N^{i-1}(a) dominating X
  VertexSet residual;    // N^i(a) - N[U]
  VertexSet extra;       // X0: minimal subset of X dominating the residual
  VertexSet cover;       // U + X0
};

LayerConstruction construct_layer(const Graph &g, const LayerDecomposition &layers, std::size_t i);

/// U + X0 for layer i >= 2; always dominates N^i(a).
VertexSet dominate_layer(const Graph &g, const LayerDecomposition &layers, std::size_t i);

struct LayerReport {
  std::size_t index = 0;
  std::size_t layer_size = 0;
  std::size_t cover_size = 0;
  std::optional<BigInt> bound; // f(i); absent past layer m-2 or without params
  bool within_bound = false;
};

struct BoundReport {
  std::optional<BoundParams> params;
  Vertex root = 0;
  std::vector<LayerReport> layers; // one entry per nonempty layer i >= 2
  std::size_t total_size = 1;      // 1 + sum of cover sizes
  std::size_t distinct_size = 1;   // |D| after merging overlapping covers
  std::optional<BigInt> total_bound;
  std::optional<RamseyKind> certificate;
  std::optional<bool> bound_held;
  bool freeness_checked = false;
  std::optional<bool> family_free;
};

struct ConstructOptions {
  std::optional<Vertex> root;        // default: central_vertex
  std::optional<BoundParams> params; // compare against f and theorem_bound
  bool check_freeness = false;       // run is_free against the family
};

struct Construction {
  VertexSet dominating_set;
  BoundReport report;
};

/// D = {a} + union of dominate_layer over every nonempty layer i >= 2.
/// Layers beyond m-2 are still covered so D dominates any connected input;
/// such layers carry no bound and make bound_held false.
Construction construct_dominating_set(const Graph &g, const ConstructOptions &opts = {});

enum class WitnessShape { kstar, sstar };

const char *to_string(WitnessShape shape);

struct ForbiddenWitness {
  WitnessShape shape = WitnessShape::kstar;
  std::size_t size = 0;
  Embedding embedding; // pattern labelled as gen_k_star / gen_s_star
  std::size_t layer = 0;
};

Graph witness_pattern(const ForbiddenWitness &w);

/// Raised when a bound is exceeded yet no forbidden subgraph can be assembled.
/// That would be a defect in this implementation.
class ExtractionContradiction : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Re-runs the layer-i construction and, if |U| > g(i) or
/// |X0| > (R(k,l)-1) g(i), returns the induced K*_k or S*_l that the
/// counting argument forces. Empty when both bounds hold.
std::optional<ForbiddenWitness> extract_forbidden_witness(const Graph &g, const LayerDecomposition &layers,
                                                          std::size_t i, std::size_t k, std::size_t l);

/// extract_forbidden_witness over every layer i >= 2, in layer order.
std::vector<ForbiddenWitness> extract_all_witnesses(const Graph &g, const LayerDecomposition &layers,
                                                    std::size_t k, std::size_t l);

} // namespace domgraph
