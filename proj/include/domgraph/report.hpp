#pragma once

#include "domgraph/bounds.hpp"
#include "domgraph/domination.hpp"
#include "domgraph/ramsey.hpp"

#include <json.hpp>

namespace domgraph {

// Keys keep insertion order so serialised reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet &s);
/// Number when it fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt &v);
Json to_json(const BoundParams &p);
Json to_json(const GammaResult &r);
Json to_json(const RamseyValue &r);
Json to_json(const RamseyWitness &w);
Json to_json(const ForbiddenWitness &w);
Json to_json(const BoundReport &r);

} // namespace domgraph
