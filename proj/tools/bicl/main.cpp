// bicl: command-line front end for biclique enumeration, twin reduction,
// witness construction, graph families and the exhaustive census.
//
// Exit codes: 0 success, 1 usage or input error, 2 precondition failure or
// census violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bicl/biclique.hpp"
#include "bicl/census.hpp"
#include "bicl/error.hpp"
#include "bicl/families.hpp"
#include "bicl/graph.hpp"
#include "bicl/graph_io.hpp"
#include "bicl/serialize.hpp"
#include "bicl/twins.hpp"
#include "bicl/witness.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string path = "-";
  std::string inline_g6;
  std::string format = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("-i,--input", path, "Graph file, or - for stdin")->capture_default_str();
    cmd->add_option("--g6", inline_g6, "Graph given inline as graph6");
    cmd->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "g6", "edges"}))
        ->capture_default_str();
  }

  bicl::Graph load() const {
    std::string text;
    if (!inline_g6.empty()) {
      text = inline_g6;
    } else if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path);
      if (!in) throw InputError("cannot open " + path);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    bicl::GraphFormat f = bicl::GraphFormat::kAuto;
    if (format == "g6" || !inline_g6.empty()) f = bicl::GraphFormat::kGraph6;
    if (format == "edges") f = bicl::GraphFormat::kEdgeList;
    return bicl::parse_graph(text, f);
  }
};

std::string side_text(const bicl::VertexSet& s) {
  std::string out;
  for (bicl::Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("BICL_JOBS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// ---------------------------------------------------------------------------

struct BicliquesCmd {
  GraphInput input;
  bool count_only = false;
  std::optional<bicl::Vertex> containing;
  std::string output = "text";
  bool oracle = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("bicliques", "List the maximal bicliques of a graph");
    input.attach(cmd);
    cmd->add_flag("--count-only", count_only, "Print only the number of bicliques");
    cmd->add_option("--containing", containing, "Keep only bicliques containing this vertex");
    cmd->add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--oracle", oracle, "Use the exhaustive subset scan (n <= 16)");
  }

  int run() const {
    const bicl::Graph g = input.load();
    if (containing && *containing >= g.order()) throw InputError("vertex out of range");
    const bicl::BicliqueSet all = oracle ? bicl::oracle_bicliques(g) : bicl::enumerate_bicliques(g);
    const std::vector<bicl::Biclique> chosen =
        containing ? bicl::bicliques_containing(all, *containing).items() : all.items();
    if (output == "json") {
      json j = {{"count", chosen.size()}};
      if (!count_only) j["bicliques"] = chosen;
      std::cout << j.dump() << '\n';
    } else if (count_only) {
      std::cout << chosen.size() << '\n';
    } else {
      std::cout << chosen.size() << " bicliques\n";
      for (const auto& b : chosen) std::cout << side_text(b.a) << " | " << side_text(b.b) << '\n';
    }
    return kOk;
  }
};

struct TwinsCmd {
  GraphInput input;
  bool classes = false;
  bool reduce = false;
  std::string output = "text";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("twins", "False-twin classes and twin reduction");
    input.attach(cmd);
    auto* c = cmd->add_flag("--classes", classes, "Print the false-twin partition (default)");
    auto* r = cmd->add_flag("--reduce", reduce, "Print the twin-free reduction");
    c->excludes(r);
    cmd->add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));
  }

  int run() const {
    const bicl::Graph g = input.load();
    if (reduce) {
      const bicl::Subgraph s = bicl::tw_reduce(g);
      if (output == "json") {
        json map = json::array();
        for (bicl::Vertex v : s.index_map) map.push_back(v == bicl::kNoVertex ? json(nullptr) : json(v));
        std::cout << json{{"graph", bicl::graph_key(s.graph)}, {"order", s.graph.order()}, {"indexMap", map}}.dump()
                  << '\n';
      } else {
        std::cout << bicl::graph_key(s.graph);
        if (s.graph.order() <= bicl::kMaxGraph6Order) std::cout << '\n';
      }
      return kOk;
    }
    const bicl::TwinPartition p = bicl::false_twin_classes(g);
    if (output == "json") {
      std::cout << json(p).dump() << '\n';
    } else {
      for (const auto& c : p.classes) std::cout << side_text(c) << '\n';
    }
    return kOk;
  }
};

struct ClassifyCmd {
  GraphInput input;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("classify", "Report every class predicate as JSON");
    input.attach(cmd);
  }

  int run() const {
    const bicl::Graph g = input.load();
    const bicl::AssignmentOutcome a = bicl::good_assignment(g);
    json j = {
        {"n", g.order()},
        {"edges", g.num_edges()},
        {"connected", bicl::is_connected(g)},
        {"twinFree", bicl::is_false_twin_free(g)},
        {"k3Free", bicl::is_triangle_free(g)},
        {"c4Free", bicl::is_induced_c4_free(g)},
        {"diamondFree", bicl::is_diamond_free(g)},
        {"bipartite", bicl::is_bipartite(g)},
        {"tree", bicl::is_tree(g)},
        {"minDegree", g.order() == 0 ? 0 : g.min_degree()},
        {"pendants", bicl::pendant_vertices(g)},
        {"simplicialVertices", bicl::simplicial_vertices(g)},
        {"aloneVertices", bicl::alone_vertices(g)},
        {"goodAssignment",
         {{"feasible", a.feasible},
          {"maxMatched", a.max_matched},
          {"required", bicl::assignable_alone_vertices(g).count()},
          {"assignment", a.assignment}}},
    };
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
};

struct WitnessCmd {
  GraphInput input;
  bool verify = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("witness", "Charge every vertex to its own maximal biclique");
    input.attach(cmd);
    cmd->add_flag("--verify", verify, "Re-check the map against a full enumeration");
  }

  int run() const {
    const bicl::Graph g = input.load();
    const bicl::Witness w = bicl::build_witness(g);
    json j = w;
    j["assignment"] = bicl::good_assignment(g).assignment;
    int code = kOk;
    if (verify) {
      const bool ok = bicl::verify_witness(g, w.map);
      j["verified"] = ok;
      if (!ok) code = kViolation;
    }
    std::cout << j.dump() << '\n';
    return code;
  }
};

struct GenCmd {
  std::string family;
  std::size_t k = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::string format = "g6";
  bool augment = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("gen", "Emit a graph from a named family");
    cmd->add_option("--family", family, "Family name")
        ->required()
        ->check(CLI::IsMember({"crown", "powerset", "complete", "path", "cycle", "bipartite", "assignment-feasible",
                               "assignment-overloaded"}));
    cmd->add_option("--k", k, "Family parameter");
    cmd->add_option("--a", a, "First side (bipartite)");
    cmd->add_option("--b", b, "Second side (bipartite)");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"g6", "edges"}));
    cmd->add_flag("--augment", augment, "Hang a triangle on every pendant vertex");
  }

  int run() const {
    bicl::Graph g;
    if (family == "assignment-feasible") {
      g = bicl::feasible_assignment_fixture();
    } else if (family == "assignment-overloaded") {
      g = bicl::overloaded_clique_fixture();
    } else if (family == "bipartite") {
      g = bicl::make_family(bicl::describe_family(family, a != 0 ? a : k, b));
    } else {
      g = bicl::make_family(bicl::describe_family(family, k));
    }
    if (augment) g = bicl::augment_pendants(g).graph;
    if (format == "g6") {
      if (g.order() > bicl::kMaxGraph6Order) {
        throw InputError("graph has " + std::to_string(g.order()) + " vertices; graph6 output is limited to " +
                         std::to_string(bicl::kMaxGraph6Order) + ", use --format edges");
      }
      std::cout << bicl::to_graph6(g) << '\n';
    } else {
      std::cout << bicl::to_edge_list(g);
    }
    return kOk;
  }
};

struct CensusCmd {
  std::optional<std::size_t> n;
  std::string input;
  std::optional<std::size_t> random_count;
  std::uint64_t seed = 1;
  double density = 0.5;
  std::string cls = "connected-twinfree";
  std::string check = "bound";
  std::string bound = "half-ceil";
  std::size_t jobs = default_jobs();
  std::string out;
  std::string csv;
  std::string output = "text";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("census", "Run a check over every graph of a class");
    auto* n_opt = cmd->add_option("--n", n, "Order; graphs generated internally (n <= 6, trees n <= 10)");
    auto* in_opt = cmd->add_option("--input", input, "graph6 file, one graph per line, or - for stdin");
    auto* r_opt = cmd->add_option("--random", random_count, "Sample this many random connected graphs of order --n");
    cmd->add_option("--seed", seed, "Seed for --random")->capture_default_str();
    cmd->add_option("--density", density, "Edge probability for --random")->capture_default_str();
    in_opt->excludes(n_opt);
    r_opt->needs(n_opt);
    r_opt->excludes(in_opt);
    cmd->add_option("--class", cls, "Class filter, tokens joined by '-'")->capture_default_str();
    cmd->add_option("--check", check, "Check to run")
        ->check(CLI::IsMember(
            {"bound", "properties", "conjecture1", "conjecture2", "tree-spectrum", "witness", "augmentation"}))
        ->capture_default_str();
    cmd->add_option("--bound", bound, "Bound for --check bound")
        ->check(CLI::IsMember({"half-ceil", "n-minus-pendants", "n", "conjecture1", "conjecture2"}))
        ->capture_default_str();
    cmd->add_option("--jobs", jobs, "Worker threads (default from BICL_JOBS)")->check(CLI::PositiveNumber);
    cmd->add_option("--out", out, "Write the JSON report here");
    cmd->add_option("--csv", csv, "Write the CSV summary here");
    cmd->add_option("--output", output, "Stdout format")->check(CLI::IsMember({"text", "json"}));
  }

  int run_tree_spectrum() const {
    if (!n) throw InputError("tree-spectrum needs --n");
    const bicl::TreeSpectrum t = bicl::tree_spectrum(*n);
    const json j = t;
    if (!out.empty()) write_file(out, j.dump(2) + "\n");
    if (output == "json") {
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "n=" << t.n << " trees=" << t.trees_examined << " min=" << t.minimum() << " counts=";
      for (std::size_t c : t.counts) std::cout << c << ' ';
      std::cout << "covers=" << (t.covers_range() ? "yes" : "no") << '\n';
    }
    const bool ok = t.minimum() >= (t.n + 1) / 2 && t.covers_range();
    return ok ? kOk : kViolation;
  }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
  }

  int run() const {
    if (check == "tree-spectrum") return run_tree_spectrum();
    const bicl::CensusFilter filter = bicl::CensusFilter::parse(cls);

    std::unique_ptr<bicl::GraphSource> source;
    std::ifstream file;
    if (!input.empty()) {
      if (input == "-") {
        source = std::make_unique<bicl::Graph6Source>(std::cin);
      } else {
        file.open(input);
        if (!file) throw InputError("cannot open " + input);
        source = std::make_unique<bicl::Graph6Source>(file);
      }
    } else if (n && random_count) {
      std::mt19937_64 rng(seed);
      std::vector<bicl::Graph> graphs;
      for (std::size_t i = 0; i < *random_count; ++i) graphs.push_back(bicl::random_connected_graph(*n, density, rng));
      source = std::make_unique<bicl::VectorSource>(std::move(graphs));
    } else if (n) {
      if (*n < 1 || *n > bicl::kMaxGeneratedOrder) {
        throw InputError("--n is limited to 1.." + std::to_string(bicl::kMaxGeneratedOrder) +
                         "; pass larger orders as a graph6 file with --input");
      }
      source = std::make_unique<bicl::VectorSource>(bicl::generate_all_connected(*n));
    } else {
      throw InputError("census needs --n or --input");
    }

    const bicl::CensusOptions options{jobs};
    bicl::CensusResult result;
    if (check == "bound") {
      result = bicl::run_bound_census(*source, filter, bicl::parse_bound(bound), options);
    } else if (check == "properties") {
      result = bicl::run_property_suite(*source, filter, options);
    } else if (check == "conjecture1" || check == "conjecture2") {
      bicl::CensusFilter f = filter;
      f.connected = f.false_twin_free = true;
      result = bicl::run_bound_census(*source, f, bicl::parse_bound(check), options);
    } else if (check == "witness") {
      result = bicl::run_census(*source, filter, bicl::CensusCheck::kWitness, bicl::Bound::kHalfCeil, options);
    } else {
      result = bicl::run_census(*source, filter, bicl::CensusCheck::kAugmentation, bicl::Bound::kHalfCeil, options);
    }

    for (const auto& e : result.input_errors) std::cerr << "line " << e.line << ": " << e.message << '\n';
    const json j = result;
    if (!out.empty()) write_file(out, j.dump(2) + "\n");
    if (!csv.empty()) {
      std::ostringstream s;
      bicl::write_census_csv(s, result);
      write_file(csv, s.str());
    }
    if (output == "json") {
      std::cout << j.dump() << '\n';
    } else {
      for (const auto& r : result.reports) {
        std::cout << "n=" << r.n << " class=" << r.class_description << " examined=" << r.graphs_examined
                  << " min=" << (r.min_bicliques ? std::to_string(*r.min_bicliques) : "-")
                  << " argmin=" << r.argmin_graph << " violations=" << r.violations.size() << '\n';
        for (const auto& v : r.violations) std::cout << "  " << v.check << " " << v.graph << " " << v.detail << '\n';
      }
    }
    if (!result.passed()) return kViolation;
    return result.input_errors.empty() ? kOk : kInputError;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal biclique enumeration and lower-bound verification"};
  app.require_subcommand(1);

  BicliquesCmd bicliques;
  TwinsCmd twins;
  ClassifyCmd classify;
  WitnessCmd witness;
  GenCmd gen;
  CensusCmd census;
  bicliques.attach(app);
  twins.attach(app);
  classify.attach(app);
  witness.attach(app);
  gen.attach(app);
  census.attach(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "bicliques") return bicliques.run();
    if (name == "twins") return twins.run();
    if (name == "classify") return classify.run();
    if (name == "witness") return witness.run();
    if (name == "gen") return gen.run();
    return census.run();
  } catch (const bicl::PreconditionError& e) {
    std::cerr << e.what() << '\n';
    return kViolation;
  } catch (const bicl::DefectError& e) {
    std::cerr << "internal defect: " << e.what() << '\n';
    return kViolation;
  } catch (const bicl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
