#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "bicl/biclique.hpp"
#include "bicl/census.hpp"
#include "bicl/twins.hpp"
#include "bicl/vertex_set.hpp"
#include "bicl/witness.hpp"

namespace bicl {

/// Sorted member list.
void to_json(nlohmann::json& j, const VertexSet& s);
/// {"a": [...], "b": [...]}
void to_json(nlohmann::json& j, const Biclique& b);
void to_json(nlohmann::json& j, const BicliqueSet& s);
/// {"alone": x, "vertex": v, "edge": [v, v']}
void to_json(nlohmann::json& j, const AssignmentEntry& e);
/// {"edge": [owner, leaf], "label": 1|2, "owner": owner}
void to_json(nlohmann::json& j, const LabeledEdge& e);
/// {"map": {"<vertex>": {"a", "b"}}, "labels": [...]}
void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const TwinPartition& p);
void to_json(nlohmann::json& j, const Violation& v);
void to_json(nlohmann::json& j, const CensusReport& r);
void to_json(nlohmann::json& j, const CensusResult& r);
void to_json(nlohmann::json& j, const TreeSpectrum& t);

/// Vertex-indexed object form of a witness map.
nlohmann::json witness_map_json(const WitnessMap& map);

/// One row per report: n,class,graphs,min,violations.
void write_census_csv(std::ostream& out, const CensusResult& result);

}  // namespace bicl
