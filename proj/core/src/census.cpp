#include "bicl/census.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "bicl/canonical.hpp"
#include "bicl/error.hpp"
#include "bicl/families.hpp"
#include "bicl/graph_io.hpp"
#include "bicl/twins.hpp"
#include "bicl/witness.hpp"

namespace bicl {

// ---------------------------------------------------------------------------
// Sources

const std::vector<IngestError>& GraphSource::errors() const {
  static const std::vector<IngestError> none;
  return none;
}

VectorSource::VectorSource(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}

std::optional<Graph> VectorSource::next() {
  if (pos_ >= graphs_.size()) return std::nullopt;
  return std::move(graphs_[pos_++]);
}

Graph6Source::Graph6Source(std::istream& in, OnError on_error) : in_(&in), on_error_(on_error) {}

std::optional<Graph> Graph6Source::next() {
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      return parse_graph6(text);
    } catch (const ParseError& e) {
      if (on_error_ == OnError::kThrow) throw ParseError(e.what(), line_);
      errors_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

const std::vector<IngestError>& Graph6Source::errors() const { return errors_; }

std::vector<Graph> ingest_graph6(std::istream& in, std::vector<IngestError>* errors) {
  Graph6Source source(in);
  std::vector<Graph> out;
  while (auto g = source.next()) out.push_back(std::move(*g));
  if (errors != nullptr) *errors = source.errors();
  return out;
}

std::vector<Graph> ingest_graph6_file(const std::string& path, std::vector<IngestError>* errors) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ingest_graph6(in, errors);
}

// ---------------------------------------------------------------------------
// Filters

bool CensusFilter::accepts(const Graph& g) const {
  if ((connected || tree) && !is_connected(g)) return false;
  if (tree && !is_tree(g)) return false;
  if (min_degree > 0 && (g.order() == 0 || g.min_degree() < min_degree)) return false;
  if (bipartite && !is_bipartite(g)) return false;
  if (triangle_free && !is_triangle_free(g)) return false;
  if (c4_free && !is_induced_c4_free(g)) return false;
  if (false_twin_free && !is_false_twin_free(g)) return false;
  if (good_assignment_feasible && !good_assignment(g).feasible) return false;
  return true;
}

std::string CensusFilter::describe() const {
  std::vector<std::string> parts;
  if (connected) parts.emplace_back("connected");
  if (false_twin_free) parts.emplace_back("twinfree");
  if (triangle_free) parts.emplace_back("k3free");
  if (c4_free) parts.emplace_back("c4free");
  if (bipartite) parts.emplace_back("bipartite");
  if (tree) parts.emplace_back("tree");
  if (good_assignment_feasible) parts.emplace_back("good");
  if (min_degree > 0) parts.push_back("mindeg" + std::to_string(min_degree));
  if (parts.empty()) return "all";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "-" + parts[i];
  return out;
}

CensusFilter CensusFilter::parse(std::string_view text) {
  CensusFilter f;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("-,", start);
    if (end == std::string_view::npos) end = text.size();
    const std::string token(text.substr(start, end - start));
    if (token.empty() || token == "all") {
    } else if (token == "connected") {
      f.connected = true;
    } else if (token == "twinfree") {
      f.false_twin_free = true;
    } else if (token == "k3free") {
      f.triangle_free = true;
    } else if (token == "c4free") {
      f.c4_free = true;
    } else if (token == "bipartite") {
      f.bipartite = true;
    } else if (token == "tree") {
      f.tree = true;
    } else if (token == "good") {
      f.good_assignment_feasible = true;
    } else if (token.rfind("mindeg", 0) == 0 && token.size() > 6 &&
               token.find_first_not_of("0123456789", 6) == std::string::npos) {
      f.min_degree = std::stoul(token.substr(6));
    } else {
      throw std::invalid_argument("unknown class token: " + token);
    }
    start = end + 1;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Bounds

std::string to_string(Bound b) {
  switch (b) {
    case Bound::kHalfCeil: return "half-ceil";
    case Bound::kOrderMinusPendants: return "n-minus-pendants";
    case Bound::kOrder: return "n";
    case Bound::kConjecture1: return "conjecture1";
    case Bound::kConjecture2: return "conjecture2";
  }
  return "unknown";
}

Bound parse_bound(std::string_view text) {
  for (Bound b : {Bound::kHalfCeil, Bound::kOrderMinusPendants, Bound::kOrder, Bound::kConjecture1,
                  Bound::kConjecture2}) {
    if (text == to_string(b)) return b;
  }
  throw std::invalid_argument("unknown bound: " + std::string(text));
}

std::uint64_t bound_value(Bound b, const Graph& g) {
  const std::uint64_t n = g.order();
  switch (b) {
    case Bound::kHalfCeil: return (n + 1) / 2;
    case Bound::kOrderMinusPendants: return n - pendant_vertices(g).count();
    case Bound::kOrder: return n;
    case Bound::kConjecture1: return conjecture1_bound(n);
    case Bound::kConjecture2: return conjecture2_bound(n);
  }
  return 0;
}

std::string to_string(CensusCheck c) {
  switch (c) {
    case CensusCheck::kBound: return "bound";
    case CensusCheck::kProperties: return "properties";
    case CensusCheck::kWitness: return "witness";
    case CensusCheck::kAugmentation: return "augmentation";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Property suite

namespace {

using Detail = std::optional<std::string>;

std::string vertex_text(Vertex v) { return "vertex " + std::to_string(v); }

std::vector<std::size_t> membership(const Graph& g, const BicliqueSet& s) {
  std::vector<std::size_t> count(g.order(), 0);
  for (const Biclique& b : s) {
    for (Vertex v : b.vertices()) ++count[v];
  }
  return count;
}

bool twin_free_connected(const Graph& g) { return is_connected(g) && is_false_twin_free(g); }

bool k3_twin_free(const Graph& g) {
  return g.order() >= 2 && twin_free_connected(g) && is_triangle_free(g);
}

Detail every_vertex_in_star(const Graph& g, const BicliqueSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool found = std::any_of(s.begin(), s.end(), [&](const Biclique& b) {
      return b.contains(v) && (b.a.count() == 1 || b.b.count() == 1);
    });
    if (!found) return vertex_text(v) + " lies in no biclique with a singleton side";
  }
  return std::nullopt;
}

Detail max_degree_star(const Graph& g, const BicliqueSet&) {
  const std::size_t top = g.max_degree();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != top || !is_independent(g, g.neighbors(v))) continue;
    if (!is_maximal_biclique(g, VertexSet(g.order(), {v}), g.neighbors(v))) {
      return vertex_text(v) + ": ({v}, N(v)) is not a maximal biclique";
    }
  }
  return std::nullopt;
}

Detail degree_many_bicliques(const Graph& g, const BicliqueSet& s) {
  const auto count = membership(g, s);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (count[v] < g.degree(v)) {
      return vertex_text(v) + " lies in " + std::to_string(count[v]) + " bicliques, degree " +
             std::to_string(g.degree(v));
    }
  }
  return std::nullopt;
}

Detail deletion_loss(const Graph& g, const BicliqueSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const Subgraph rest = delete_vertex(g, v);
    const std::size_t k = false_twin_classes(rest.graph).nontrivial_classes();
    if (k == 0) continue;
    const auto before = static_cast<long long>(s.size());
    const auto after = static_cast<long long>(count_bicliques(rest.graph));
    if (before - after < static_cast<long long>(k)) {
      return "deleting " + vertex_text(v) + " leaves " + std::to_string(k) + " twin classes but loses " +
             std::to_string(before - after) + " bicliques";
    }
  }
  return std::nullopt;
}

Detail few_pendants(const Graph& g, const BicliqueSet&) {
  const std::size_t pendants = pendant_vertices(g).count();
  if (pendants > g.order() / 2) return std::to_string(pendants) + " degree-one vertices";
  return std::nullopt;
}

std::vector<Vertex> in_every_biclique(const Graph& g, const BicliqueSet& s) {
  const auto count = membership(g, s);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (count[v] == s.size()) out.push_back(v);
  }
  return out;
}

Detail no_universal_with_triangle(const Graph& g, const BicliqueSet& s) {
  const auto all = in_every_biclique(g, s);
  if (!all.empty()) return vertex_text(all.front()) + " lies in every biclique";
  return std::nullopt;
}

Detail at_most_two_universal(const Graph& g, const BicliqueSet& s) {
  const auto all = in_every_biclique(g, s);
  if (all.size() > 2) return std::to_string(all.size()) + " vertices lie in every biclique";
  if (all.size() < 2) return std::nullopt;
  const Vertex v = all[0];
  const Vertex w = all[1];
  if (!g.adjacent(v, w)) return "vertices " + std::to_string(v) + "," + std::to_string(w) + " lie in every biclique but are not adjacent";
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == v || u == w) continue;
    if (g.adjacent(u, v) == g.adjacent(u, w)) {
      return vertex_text(u) + " sees both or neither of " + std::to_string(v) + "," + std::to_string(w);
    }
  }
  return std::nullopt;
}

Detail one_private_vertex(const Graph& g, const BicliqueSet& s) {
  const auto count = membership(g, s);
  for (const Biclique& b : s) {
    std::size_t lonely = 0;
    for (Vertex v : b.vertices()) lonely += count[v] == 1 ? 1 : 0;
    if (lonely > 1) return std::to_string(lonely) + " vertices lie only in one biclique";
  }
  return std::nullopt;
}

Detail two_bicliques(const Graph& g, const BicliqueSet& s) {
  const auto count = membership(g, s);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 2 && count[v] < 2) {
      return vertex_text(v) + " has degree " + std::to_string(g.degree(v)) + " but lies in " +
             std::to_string(count[v]) + " bicliques";
    }
  }
  return std::nullopt;
}

Detail many_shared(const Graph& g, const BicliqueSet& s) {
  const auto count = membership(g, s);
  const auto shared = static_cast<std::size_t>(std::count_if(count.begin(), count.end(), [](std::size_t c) { return c >= 2; }));
  const std::size_t need = (g.order() + 1) / 2;
  if (shared < need) return std::to_string(shared) + " vertices lie in two bicliques, need " + std::to_string(need);
  return std::nullopt;
}

Detail pendants_separate(const Graph& g, const BicliqueSet& s) {
  const VertexSet pendants = pendant_vertices(g);
  for (const Biclique& b : s) {
    if ((b.vertices() & pendants).count() > 1) return "two degree-one vertices share a biclique";
  }
  return std::nullopt;
}

std::vector<PropertyCheck> build_property_checks() {
  const auto twin_free_from = [](std::size_t min_order) {
    return [min_order](const Graph& g) { return g.order() >= min_order && twin_free_connected(g); };
  };
  return {
      {"P1-vertex-in-star", "every vertex lies in a biclique with a singleton side ({K3,twin}-free)",
       k3_twin_free, every_vertex_in_star},
      {"P2-max-degree-star", "a maximum-degree vertex in no triangle spans a star biclique (twin-free)",
       twin_free_from(2), max_degree_star},
      {"P3-degree-many-bicliques", "every vertex lies in at least d(v) bicliques ({K3,twin}-free)",
       k3_twin_free, degree_many_bicliques},
      {"P4-deletion-loss",
       "deleting v loses at least as many bicliques as G-v has twin classes ({K3,twin}-free)",
       k3_twin_free, deletion_loss},
      {"P5-few-pendants", "at most floor(n/2) degree-one vertices (twin-free, n >= 3)", twin_free_from(3),
       few_pendants},
      {"P6-no-universal-with-triangle", "with a triangle, no vertex lies in every biclique (twin-free)",
       [](const Graph& g) { return g.order() >= 3 && twin_free_connected(g) && !is_triangle_free(g); },
       no_universal_with_triangle},
      {"P7-at-most-two-universal",
       "at most two vertices lie in every biclique; two such are adjacent with complementary neighbours "
       "(twin-free)",
       twin_free_from(2), at_most_two_universal},
      {"P8-one-private-vertex", "each biclique has at most one vertex lying in no other (twin-free, n >= 3)",
       twin_free_from(3), one_private_vertex},
      {"P9-two-bicliques", "a vertex of degree at least two lies in two bicliques (twin-free)",
       twin_free_from(2), two_bicliques},
      {"P10-many-shared", "at least ceil(n/2) vertices lie in two bicliques (twin-free, n >= 3)",
       twin_free_from(3), many_shared},
      {"P11-pendants-separate", "no biclique holds two degree-one vertices (twin-free, not K2)",
       twin_free_from(3), pendants_separate},
  };
}

// ---------------------------------------------------------------------------
// Census checks on a single graph

bool witness_applies(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && g.min_degree() >= 2 && is_induced_c4_free(g) &&
         is_false_twin_free(g) && good_assignment(g).feasible;
}

Detail witness_failure(const Graph& g, const BicliqueSet& s) {
  try {
    const Witness w = build_witness(g);
    if (!verify_witness(s, w.map)) return std::string("witness map is not injective into maximal bicliques");
    if (s.size() < g.order()) return "only " + std::to_string(s.size()) + " bicliques";
  } catch (const DefectError& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

bool augmentation_applies(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && is_induced_c4_free(g) && is_false_twin_free(g);
}

Detail augmentation_failure(const Graph& g, std::size_t count) {
  const PendantAugmentation aug = augment_pendants(g);
  const std::size_t after = count_bicliques(aug.graph);
  const std::size_t expected = count + 3 * aug.pendants;
  if (after == expected) return std::nullopt;
  return "augmented count " + std::to_string(after) + ", expected " + std::to_string(expected);
}

Detail bound_failure(const Graph& g, Bound bound, std::size_t count) {
  const std::uint64_t need = bound_value(bound, g);
  if (count >= need) return std::nullopt;
  return std::to_string(count) + " bicliques, bound " + to_string(bound) + " is " + std::to_string(need);
}

struct Outcome {
  bool examined = false;
  std::size_t count = 0;
  double seconds = 0.0;
  std::string key;  // canonical, filled only when there are failures
  std::vector<std::pair<std::string, std::string>> failures;
};

Outcome evaluate(const Graph& g, const CensusFilter& filter, CensusCheck check, Bound bound) {
  Outcome out;
  if (!filter.accepts(g)) return out;
  const auto start = std::chrono::steady_clock::now();
  const auto fail = [&](std::string name, Detail d) {
    if (d) out.failures.emplace_back(std::move(name), std::move(*d));
  };
  switch (check) {
    case CensusCheck::kBound:
      if (g.order() < 2) return out;
      out.count = count_bicliques(g);
      fail("bound:" + to_string(bound), bound_failure(g, bound, out.count));
      break;
    case CensusCheck::kProperties: {
      const BicliqueSet s = enumerate_bicliques(g);
      out.count = s.size();
      for (const PropertyCheck& p : property_checks()) {
        if (p.applies(g)) fail(p.name, p.assertion(g, s));
      }
      break;
    }
    case CensusCheck::kWitness: {
      if (!witness_applies(g)) return out;
      const BicliqueSet s = enumerate_bicliques(g);
      out.count = s.size();
      fail("witness", witness_failure(g, s));
      break;
    }
    case CensusCheck::kAugmentation:
      if (!augmentation_applies(g)) return out;
      out.count = count_bicliques(g);
      fail("augmentation", augmentation_failure(g, out.count));
      break;
  }
  out.examined = true;

  // Restate failures on the canonical form so they do not depend on the
  // labelling the graph arrived with.
  if (!out.failures.empty()) {
    const Graph canon = g.order() <= kMaxCanonicalOrder ? canonical_labeling(g).graph : g;
    out.key = graph_key(canon);
    for (auto& [name, detail] : out.failures) {
      if (auto again = recheck(canon, name)) detail = std::move(*again);
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

const std::vector<PropertyCheck>& property_checks() {
  static const std::vector<PropertyCheck> checks = build_property_checks();
  return checks;
}

const PropertyCheck* find_property_check(std::string_view name) {
  for (const PropertyCheck& p : property_checks()) {
    if (p.name == name) return &p;
    const std::string_view prefix = std::string_view(p.name).substr(0, p.name.find('-'));
    if (prefix == name) return &p;
  }
  return nullptr;
}

std::optional<std::string> recheck(const Graph& g, std::string_view check_name) {
  if (check_name.rfind("bound:", 0) == 0) {
    const Bound b = parse_bound(check_name.substr(6));
    if (g.order() < 2) return std::nullopt;
    return bound_failure(g, b, count_bicliques(g));
  }
  if (check_name == "witness") {
    if (!witness_applies(g)) return std::nullopt;
    return witness_failure(g, enumerate_bicliques(g));
  }
  if (check_name == "augmentation") {
    if (!augmentation_applies(g)) return std::nullopt;
    return augmentation_failure(g, count_bicliques(g));
  }
  if (const PropertyCheck* p = find_property_check(check_name)) {
    if (!p->applies(g)) return std::nullopt;
    return p->assertion(g, enumerate_bicliques(g));
  }
  throw std::invalid_argument("unknown check: " + std::string(check_name));
}

// ---------------------------------------------------------------------------
// Drivers

bool CensusReport::same_outcome(const CensusReport& other) const {
  return n == other.n && class_description == other.class_description &&
         graphs_examined == other.graphs_examined && min_bicliques == other.min_bicliques &&
         argmin_graph == other.argmin_graph && violations == other.violations;
}

std::size_t CensusResult::violation_count() const {
  std::size_t total = 0;
  for (const CensusReport& r : reports) total += r.violations.size();
  return total;
}

CensusResult run_census(GraphSource& source, const CensusFilter& filter, CensusCheck check, Bound bound,
                        const CensusOptions& options) {
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  const std::size_t batch = std::max<std::size_t>(1, options.batch);
  std::string description = filter.describe() + " / " + to_string(check);
  if (check == CensusCheck::kBound) description += ":" + to_string(bound);

  std::map<std::size_t, CensusReport> reports;
  std::vector<Graph> graphs;
  std::vector<Outcome> outcomes;
  while (true) {
    graphs.clear();
    while (graphs.size() < batch) {
      auto g = source.next();
      if (!g) break;
      graphs.push_back(std::move(*g));
    }
    if (graphs.empty()) break;

    outcomes.assign(graphs.size(), Outcome{});
    const auto work = [&](std::size_t first) {
      for (std::size_t i = first; i < graphs.size(); i += jobs) {
        outcomes[i] = evaluate(graphs[i], filter, check, bound);
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
          try {
            work(t);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Outcome& o = outcomes[i];
      if (!o.examined) continue;
      const std::size_t n = graphs[i].order();
      CensusReport& r = reports[n];
      r.n = n;
      ++r.graphs_examined;
      r.wall_time += o.seconds;
      if (!r.min_bicliques || o.count <= *r.min_bicliques) {
        std::string key = o.key.empty() ? canonical_key(graphs[i]) : o.key;
        if (!r.min_bicliques || o.count < *r.min_bicliques || key < r.argmin_graph) {
          r.min_bicliques = o.count;
          r.argmin_graph = std::move(key);
        }
      }
      for (const auto& [name, detail] : o.failures) r.violations.push_back({o.key, name, detail});
    }
  }

  CensusResult result;
  for (auto& [n, r] : reports) {
    r.class_description = description;
    std::sort(r.violations.begin(), r.violations.end());
    result.reports.push_back(std::move(r));
  }
  result.input_errors = source.errors();
  return result;
}

CensusResult run_bound_census(GraphSource& source, const CensusFilter& filter, Bound bound,
                              const CensusOptions& options) {
  return run_census(source, filter, CensusCheck::kBound, bound, options);
}

CensusResult run_property_suite(GraphSource& source, const CensusFilter& filter, const CensusOptions& options) {
  return run_census(source, filter, CensusCheck::kProperties, Bound::kHalfCeil, options);
}

CensusResult conjecture_search(GraphSource& source, int which, const CensusOptions& options) {
  if (which != 1 && which != 2) throw std::invalid_argument("conjecture must be 1 or 2");
  CensusFilter filter;
  filter.connected = true;
  filter.false_twin_free = true;
  return run_census(source, filter, CensusCheck::kBound, which == 1 ? Bound::kConjecture1 : Bound::kConjecture2,
                    options);
}

// ---------------------------------------------------------------------------
// Trees

std::size_t TreeSpectrum::minimum() const { return counts.empty() ? 0 : *counts.begin(); }

bool TreeSpectrum::covers_range() const {
  for (std::size_t k = (n + 1) / 2; k + 2 <= n; ++k) {
    if (!counts.contains(k)) return false;
  }
  return true;
}

TreeSpectrum tree_spectrum(std::size_t n) {
  if (n < 4 || n > 10) throw std::out_of_range("tree_spectrum requires 4 <= n <= 10");
  TreeSpectrum out;
  out.n = n;
  for (const Graph& t : generate_trees(n)) {
    if (!is_false_twin_free(t)) continue;
    ++out.trees_examined;
    out.counts.insert(count_bicliques(t));
  }
  return out;
}

}  // namespace bicl
