#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bicl/biclique.hpp"
#include "bicl/graph.hpp"

namespace bicl {

// ---------------------------------------------------------------------------
// Graph sources

/// Largest order generate_all_connected accepts.
inline constexpr std::size_t kMaxGeneratedOrder = 6;

/// One representative per isomorphism class of connected graphs on n
/// vertices, each labelled so its graph6 bitstring is lexicographically
/// smallest over all vertex permutations. Ordered by that bitstring.
/// Requires 1 <= n <= 6; throws std::out_of_range otherwise.
std::vector<Graph> generate_all_connected(std::size_t n);

/// One representative per isomorphism class of trees on n vertices,
/// 1 <= n <= 16. Deterministic order.
std::vector<Graph> generate_trees(std::size_t n);

/// Connected graph on n vertices: a random spanning tree plus each other
/// pair independently with probability `density`.
Graph random_connected_graph(std::size_t n, double density, std::mt19937_64& rng);

struct IngestError {
  std::size_t line = 0;
  std::string message;
};

/// Pull-style stream of graphs. Implementations are single-consumer.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  /// Next graph, or nullopt once exhausted.
  virtual std::optional<Graph> next() = 0;
  /// Problems met so far (malformed input lines).
  virtual const std::vector<IngestError>& errors() const;
};

class VectorSource final : public GraphSource {
 public:
  explicit VectorSource(std::vector<Graph> graphs);
  std::optional<Graph> next() override;

 private:
  std::vector<Graph> graphs_;
  std::size_t pos_ = 0;
};

/// Reads one graph6 graph per line. Blank lines are skipped. A malformed
/// line is either recorded and skipped, or rethrown as ParseError carrying
/// its line number.
class Graph6Source final : public GraphSource {
 public:
  enum class OnError { kSkip, kThrow };

  explicit Graph6Source(std::istream& in, OnError on_error = OnError::kSkip);
  std::optional<Graph> next() override;
  const std::vector<IngestError>& errors() const override;
  /// Line number of the graph most recently returned.
  std::size_t line() const { return line_; }

 private:
  std::istream* in_;
  OnError on_error_;
  std::size_t line_ = 0;
  std::vector<IngestError> errors_;
};

/// Reads a whole graph6 stream. Malformed lines land in `errors` if given.
std::vector<Graph> ingest_graph6(std::istream& in, std::vector<IngestError>* errors = nullptr);
/// Opens `path`; throws std::runtime_error if it cannot be read.
std::vector<Graph> ingest_graph6_file(const std::string& path, std::vector<IngestError>* errors = nullptr);

// ---------------------------------------------------------------------------
// Filters

/// Conjunction of graph classes. Unset flags impose nothing.
struct CensusFilter {
  bool connected = false;
  bool false_twin_free = false;
  bool triangle_free = false;
  bool c4_free = false;
  bool bipartite = false;
  bool tree = false;
  bool good_assignment_feasible = false;
  std::size_t min_degree = 0;

  bool accepts(const Graph& g) const;

  /// Stable text form, e.g. "connected-twinfree-k3free".
  std::string describe() const;

  /// Parses tokens joined by '-' or ',': connected, twinfree, k3free,
  /// c4free, bipartite, tree, good, mindegN. "all" is the empty filter.
  /// Throws std::invalid_argument on an unknown token.
  static CensusFilter parse(std::string_view text);

  friend bool operator==(const CensusFilter&, const CensusFilter&) = default;
};

// ---------------------------------------------------------------------------
// Checks and reports

enum class Bound {
  kHalfCeil,           ///< ceil(n/2)
  kOrderMinusPendants, ///< n minus the number of degree-one vertices
  kOrder,              ///< n
  kConjecture1,
  kConjecture2,
};

std::string to_string(Bound b);
/// Accepts the to_string forms. Throws std::invalid_argument.
Bound parse_bound(std::string_view text);
std::uint64_t bound_value(Bound b, const Graph& g);

/// Checks applied by the generic census driver.
enum class CensusCheck {
  kBound,        ///< count_bicliques >= bound (graphs with n >= 2)
  kProperties,   ///< the structural property suite
  kWitness,      ///< build_witness verifies where its preconditions hold
  kAugmentation, ///< pendant triangles add exactly three bicliques each
};

std::string to_string(CensusCheck c);

struct PropertyCheck {
  std::string name;
  std::string description;
  std::function<bool(const Graph&)> applies;
  /// Empty when the property holds, otherwise a description of the failure.
  std::function<std::optional<std::string>(const Graph&, const BicliqueSet&)> assertion;
};

/// The structural property suite, in a fixed order. Names start with
/// "P1-" .. "P11-".
const std::vector<PropertyCheck>& property_checks();

/// Finds a property check by its full name or by its "Pk" prefix.
const PropertyCheck* find_property_check(std::string_view name);

struct Violation {
  std::string graph;
  std::string check;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// Per-order summary. Graph keys are canonical graph6 (edge list beyond 62
/// vertices), so reports do not depend on input labelling or order.
struct CensusReport {
  std::size_t n = 0;
  std::string class_description;
  std::size_t graphs_examined = 0;
  /// Unset when no graph was examined.
  std::optional<std::size_t> min_bicliques;
  std::string argmin_graph;
  std::vector<Violation> violations;
  double wall_time = 0.0;

  bool passed() const { return violations.empty(); }
  /// Equality ignoring wall_time.
  bool same_outcome(const CensusReport& other) const;
};

struct CensusOptions {
  std::size_t jobs = 1;
  /// Graphs pulled from the source per parallel batch.
  std::size_t batch = 2048;
};

struct CensusResult {
  /// One report per order seen, ascending in n.
  std::vector<CensusReport> reports;
  std::vector<IngestError> input_errors;

  std::size_t violation_count() const;
  bool passed() const { return violation_count() == 0; }
};

/// Runs `check` on every graph of `source` accepted by `filter`.
/// `bound` is read only by CensusCheck::kBound.
CensusResult run_census(GraphSource& source, const CensusFilter& filter, CensusCheck check,
                        Bound bound = Bound::kHalfCeil, const CensusOptions& options = {});

CensusResult run_bound_census(GraphSource& source, const CensusFilter& filter, Bound bound,
                              const CensusOptions& options = {});

CensusResult run_property_suite(GraphSource& source, const CensusFilter& filter,
                                const CensusOptions& options = {});

/// Bound census for conjecture 1 or 2 over the connected false-twin-free
/// graphs of `source`. Throws std::invalid_argument for other values.
CensusResult conjecture_search(GraphSource& source, int which, const CensusOptions& options = {});

/// Check names accepted by recheck: "bound:<bound>", "witness",
/// "augmentation", or a property check name.
/// Re-runs one named check on one graph. Returns the failure detail when
/// the check still fails, nullopt when it passes or does not apply.
std::optional<std::string> recheck(const Graph& g, std::string_view check_name);

struct TreeSpectrum {
  std::size_t n = 0;
  std::size_t trees_examined = 0;
  /// Distinct biclique counts over false-twin-free trees on n vertices.
  std::set<std::size_t> counts;

  std::size_t minimum() const;
  /// Every k in [ceil(n/2), n-2] is attained.
  bool covers_range() const;
};

/// Requires 4 <= n <= 10; throws std::out_of_range otherwise.
TreeSpectrum tree_spectrum(std::size_t n);

}  // namespace bicl
