#pragma once

#include <json.hpp>

#include "coverdepth/decomposition.hpp"
#include "coverdepth/homology.hpp"
#include "coverdepth/monomial.hpp"
#include "coverdepth/sdepth.hpp"

namespace coverdepth {

using nlohmann::json;

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

/// {"n", "generators": [[...]], "text"}
json to_json(const MonomialIdeal& a);
MonomialIdeal ideal_from_json(const json& j);

json vertex_set_to_json(VertexSet s);
VertexSet vertex_set_from_json(const json& j);

/// {"field", "entries": [{"i", "multidegree", "rank"}], "totals", "pd", "reg"}
json to_json(const BettiTable& t);
json to_json(const HomologicalInvariants& h);

/// {"module": {"kind", "n", "ring", "ideal"}, "spaces": [{"origin", "free",
/// "provenance"}], "sdepth"}; sdepth is null for the zero module.
json to_json(const StanleyDecomposition& d);
StanleyDecomposition decomposition_from_json(const json& j);

/// {"bound", "intervals": [[bottom, top], ...]}
json to_json(const IntervalPartition& p, const Monomial& bound);
IntervalPartition partition_from_json(const json& j);

json to_json(const SdepthResult& r, const CharacteristicPoset& poset);

}  // namespace coverdepth
