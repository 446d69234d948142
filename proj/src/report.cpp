#include "domgraph/report.hpp"

#include <limits>

namespace domgraph {

Json to_json(const VertexSet &s) { return Json(s.ids()); }

Json to_json(const BigInt &v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
    return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Json to_json(const BoundParams &p) {
  Json j;
  j["k"] = p.k;
  j["l"] = p.l;
  j["m"] = p.m;
  return j;
}

Json to_json(const GammaResult &r) {
  Json j;
  j["gamma"] = r.gamma;
  j["witness"] = to_json(r.witness);
  return j;
}

Json to_json(const RamseyValue &r) {
  Json j;
  j["s"] = to_json(r.s);
  j["t"] = to_json(r.t);
  j["bound"] = to_json(r.bound);
  j["kind"] = to_string(r.kind);
  return j;
}

Json to_json(const RamseyWitness &w) {
  Json j;
  j["outcome"] = to_string(w.outcome);
  j["members"] = to_json(w.members);
  return j;
}

Json to_json(const ForbiddenWitness &w) {
  Json j;
  j["shape"] = to_string(w.shape);
  j["size"] = w.size;
  j["layer"] = w.layer;
  j["embedding"] = w.embedding.map;
  return j;
}

Json to_json(const BoundReport &r) {
  Json j;
  j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
  j["root"] = r.root;
  Json sizes = Json::array();
  Json bounds = Json::array();
  Json layers = Json::array();
  for (const auto &l : r.layers) {
    sizes.push_back(l.cover_size);
    bounds.push_back(l.bound ? to_json(*l.bound) : Json(nullptr));
    Json entry;
    entry["index"] = l.index;
    entry["layer_size"] = l.layer_size;
    entry["cover_size"] = l.cover_size;
    entry["bound"] = l.bound ? to_json(*l.bound) : Json(nullptr);
    entry["within_bound"] = l.within_bound;
    layers.push_back(std::move(entry));
  }
  j["layer_sizes"] = std::move(sizes);
  j["layer_bounds"] = std::move(bounds);
  j["layers"] = std::move(layers);
  j["total_size"] = r.total_size;
  j["distinct_size"] = r.distinct_size;
  j["total_bound"] = r.total_bound ? to_json(*r.total_bound) : Json(nullptr);
  j["certificate"] = r.certificate ? Json(to_string(*r.certificate)) : Json(nullptr);
  j["bound_held"] = r.bound_held ? Json(*r.bound_held) : Json(nullptr);
  j["freeness_checked"] = r.freeness_checked;
  j["family_free"] = r.family_free ? Json(*r.family_free) : Json(nullptr);
  return j;
}

} // namespace domgraph
