#include "bicl/serialize.hpp"

#include <ostream>
#include <string>

namespace bicl {

void to_json(nlohmann::json& j, const VertexSet& s) { j = s.members(); }

void to_json(nlohmann::json& j, const Biclique& b) { j = {{"a", b.a}, {"b", b.b}}; }

void to_json(nlohmann::json& j, const BicliqueSet& s) {
  j = nlohmann::json::array();
  for (const Biclique& b : s) j.push_back(b);
}

void to_json(nlohmann::json& j, const AssignmentEntry& e) {
  j = {{"alone", e.alone}, {"vertex", e.vertex}, {"edge", {e.vertex, e.other}}};
}

void to_json(nlohmann::json& j, const LabeledEdge& e) {
  j = {{"edge", {e.owner, e.leaf}}, {"label", e.label}, {"owner", e.owner}};
}

nlohmann::json witness_map_json(const WitnessMap& map) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t v = 0; v < map.size(); ++v) j[std::to_string(v)] = map[v];
  return j;
}

void to_json(nlohmann::json& j, const Witness& w) {
  j = {{"map", witness_map_json(w.map)}, {"labels", w.labels}};
}

void to_json(nlohmann::json& j, const TwinPartition& p) {
  j = {{"classes", p.classes}, {"representatives", p.representatives}};
}

void to_json(nlohmann::json& j, const Violation& v) {
  j = {{"graph", v.graph}, {"check", v.check}, {"detail", v.detail}};
}

void to_json(nlohmann::json& j, const CensusReport& r) {
  j = {{"n", r.n},
       {"classDescription", r.class_description},
       {"graphsExamined", r.graphs_examined},
       {"minBicliques", nullptr},
       {"argminGraph", r.argmin_graph},
       {"violations", r.violations},
       {"wallTime", r.wall_time}};
  if (r.min_bicliques) j["minBicliques"] = *r.min_bicliques;
}

void to_json(nlohmann::json& j, const CensusResult& r) {
  nlohmann::json errors = nlohmann::json::array();
  for (const IngestError& e : r.input_errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  j = {{"reports", r.reports}, {"inputErrors", errors}, {"violationCount", r.violation_count()}};
}

void to_json(nlohmann::json& j, const TreeSpectrum& t) {
  j = {{"n", t.n},
       {"treesExamined", t.trees_examined},
       {"counts", t.counts},
       {"minimum", t.minimum()},
       {"coversRange", t.covers_range()}};
}

void write_census_csv(std::ostream& out, const CensusResult& result) {
  out << "n,class,graphs,min,violations\n";
  for (const CensusReport& r : result.reports) {
    out << r.n << ',' << r.class_description << ',' << r.graphs_examined << ',';
    if (r.min_bicliques) out << *r.min_bicliques;
    out << ',' << r.violations.size() << '\n';
  }
}

}  // namespace bicl
