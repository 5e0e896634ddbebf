#pragma once

#include <json.hpp>

#include "groupcx/gk.hpp"
#include "groupcx/graph.hpp"
#include "groupcx/group.hpp"
#include "groupcx/group_complexes.hpp"
#include "groupcx/homology.hpp"

namespace groupcx {

using Json = nlohmann::ordered_json;

/// {"family":"cyclic","n":6}, {"family":"abelian","factors":[4,2]},
/// {"family":"perm","degree":8,"generators":[[...],[...]]} (1-based images),
/// {"family":"table","table":[[...]]}, {"family":"product","left":..,
/// "right":..}, {"family":"wreath_cyclic","m":2,"n":4}, plus dihedral /
/// symmetric / alternating with "n".
GroupSpec group_spec_from_json(const Json& j);
Json group_spec_to_json(const GroupSpec& spec);

Json complex_to_json(const SimplicialComplex& c);
Json graph_to_json(const SimpleGraph& g);
Json gk_to_json(const GKComplex& c, int cover_number);
Json homology_to_json(const HomologySummary& h);
Json generation_report_to_json(const GenerationReport& r,
                               const FiniteGroup& g);
Json coincidence_to_json(const CoincidenceVerdict& v, const FiniteGroup& g);

/// Exact integer as JSON: a number when it fits an unsigned/signed 64-bit
/// value, a decimal string beyond that.
Json bigint_to_json(const BigInt& v);

}  // namespace groupcx
