// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Usage: bicl_acceptance DATA_DIR, where DATA_DIR holds
// conn7.g6, conn8.g6 and conn9.g6 (all connected graphs of that order).

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bicl/biclique.hpp"
#include "bicl/census.hpp"
#include "bicl/families.hpp"
#include "bicl/graph_io.hpp"
#include "bicl/twins.hpp"
#include "bicl/witness.hpp"

namespace {

using namespace bicl;
using Clock = std::chrono::steady_clock;

std::string g_data_dir;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

// Runs `body` on every connected graph of order n: internal generation up to
// six vertices, the generated graph6 files beyond.
void for_each_connected(std::size_t n, const std::function<void(const Graph&)>& body) {
  if (n <= kMaxGeneratedOrder) {
    for (const Graph& g : generate_all_connected(n)) body(g);
    return;
  }
  const std::string path = g_data_dir + "/conn" + std::to_string(n) + ".g6";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing " + path);
  Graph6Source source(in, Graph6Source::OnError::kThrow);
  while (auto g = source.next()) body(*g);
}

CensusResult census_of_order(std::size_t n, const CensusFilter& filter, CensusCheck check,
                             Bound bound = Bound::kHalfCeil) {
  if (n <= kMaxGeneratedOrder) {
    VectorSource source(generate_all_connected(n));
    return run_census(source, filter, check, bound);
  }
  const std::string path = g_data_dir + "/conn" + std::to_string(n) + ".g6";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing " + path);
  Graph6Source source(in, Graph6Source::OnError::kThrow);
  return run_census(source, filter, check, bound);
}

void print_violations(const CensusResult& r, Outcome& out) {
  for (const CensusReport& rep : r.reports) {
    for (const Violation& v : rep.violations) {
      out.require(false, v.check + " " + v.graph + " " + v.detail);
    }
  }
}

std::size_t examined(const CensusResult& r) {
  std::size_t total = 0;
  for (const CensusReport& rep : r.reports) total += rep.graphs_examined;
  return total;
}

// ---------------------------------------------------------------------------

void crown_family(Outcome& out) {
  const auto start = Clock::now();
  for (std::size_t k = 5; k <= 8; ++k) {
    const std::size_t c = count_bicliques(crown_cycle(k));
    out.detail << " k=" << k << ":" << c;
    out.require(c == k, "crown count");
  }
  const double t = seconds_since(start);
  out.detail << " time=" << t << "s";
  out.require(t < 1.0, "over 1 s");
}

void powerset_family_counts(Outcome& out) {
  for (std::size_t k = 2; k <= 7; ++k) {
    const auto start = Clock::now();
    const Graph g = powerset_family(k);
    const std::size_t c = count_bicliques(g);
    const double t = seconds_since(start);
    const std::uint64_t half = (g.order() + 1) / 2;
    out.detail << " k=" << k << ":" << c;
    out.require(c == k * k, "powerset count");
    if (k == 6) out.require(g.order() == 69 && c > half && half == 35, "k=6 crossover 36 > 35");
    if (k == 7) {
      out.require(g.order() == 134 && c < half && half == 67, "k=7 49 < 67");
      out.detail << " k7time=" << t << "s";
      out.require(t < 10.0, "k=7 over 10 s");
    }
  }
}

void complete_counts(Outcome& out) {
  for (std::size_t n = 3; n <= 8; ++n) out.require(count_bicliques(complete(n)) == n * (n - 1) / 2, "K" + std::to_string(n));
  out.detail << " K3..K8 exact";
}

void oracle_equivalence(Outcome& out) {
  const auto start = Clock::now();
  std::size_t graphs = 0;
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      ++graphs;
      if (enumerate_bicliques(g) != oracle_bicliques(g)) {
        ++mismatches;
        out.require(false, to_graph6(g));
      }
    });
  }
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<std::size_t> order(9, 14);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(order(rng), density(rng), rng);
    ++graphs;
    if (enumerate_bicliques(g) != oracle_bicliques(g)) {
      ++mismatches;
      out.require(false, to_edge_list(g));
    }
  }
  const double t = seconds_since(start);
  out.detail << " graphs=" << graphs << " mismatches=" << mismatches << " time=" << t << "s";
  out.require(t < 300.0, "over 5 min");
}

void twin_invariance(Outcome& out) {
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<std::size_t> order(2, 12);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  std::size_t mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    Graph g = random_connected_graph(order(rng), density(rng), rng);
    const std::size_t before = count_bicliques(g);
    const int copies = 1 + static_cast<int>(rng() % 3);
    for (int c = 0; c < copies; ++c) {
      const auto v = static_cast<Vertex>(rng() % g.order());
      std::vector<Edge> edges = g.edges();
      for (Vertex u : g.neighbors(v)) edges.emplace_back(u, static_cast<Vertex>(g.order()));
      g = Graph::from_edges(g.order() + 1, edges);
    }
    const std::size_t after = count_bicliques(g);
    const std::size_t reduced = count_bicliques(tw_reduce(g).graph);
    if (after != before || reduced != before) {
      ++mismatches;
      out.require(false, to_edge_list(g));
    }
  }
  out.detail << " graphs=500 mismatches=" << mismatches;
}

void bound_census(Outcome& out, const std::string& cls, std::size_t lo, std::size_t hi, bool timed_to_eight) {
  const CensusFilter filter = CensusFilter::parse(cls);
  const auto start = Clock::now();
  for (std::size_t n = lo; n <= hi; ++n) {
    const CensusResult r = census_of_order(n, filter, CensusCheck::kBound, Bound::kHalfCeil);
    print_violations(r, out);
    for (const CensusReport& rep : r.reports) {
      out.detail << " n=" << n << ":" << rep.graphs_examined << "g/min" << rep.min_bicliques.value_or(0);
      out.require(rep.min_bicliques.value_or(0) >= (n + 1) / 2, "minimum below ceil(n/2) at n=" + std::to_string(n));
    }
    out.require(examined(r) > 0, "nothing examined at n=" + std::to_string(n));
    if (timed_to_eight && n == 8) {
      const double t = seconds_since(start);
      out.detail << " time<=8=" << t << "s";
      out.require(t < 300.0, "n<=8 over 5 min");
    }
  }
}

void witness_soundness(Outcome& out) {
  std::size_t total = 0;
  for (std::size_t n = 3; n <= 9; ++n) {
    const CensusResult r = census_of_order(n, CensusFilter::parse("connected"), CensusCheck::kWitness);
    print_violations(r, out);
    total += examined(r);
  }
  out.detail << " witnesses=" << total;
  out.require(total > 0, "no qualifying graph");
}

void augmentation_accounting(Outcome& out) {
  std::size_t total = 0;
  for (std::size_t n = 3; n <= 8; ++n) {
    const CensusResult r = census_of_order(n, CensusFilter::parse("connected"), CensusCheck::kAugmentation);
    print_violations(r, out);
    total += examined(r);
  }
  for (std::size_t k = 5; k <= 8; ++k) {
    const Graph g = crown_cycle(k);
    out.require(count_bicliques(augment_pendants(g).graph) - count_bicliques(g) == 3 * k, "crown k=" + std::to_string(k));
  }
  out.detail << " census graphs=" << total << " crowns 5..8";
}

void assignment_fixtures(Outcome& out) {
  const AssignmentOutcome over = good_assignment(overloaded_clique_fixture());
  out.detail << " overloaded: feasible=" << over.feasible << " maxflow=" << over.max_matched;
  out.require(!over.feasible && over.max_matched == 20, "overloaded fixture");
  const AssignmentOutcome ok = good_assignment(feasible_assignment_fixture());
  out.detail << " feasible fixture: feasible=" << ok.feasible;
  out.require(ok.feasible && verify_good_assignment(feasible_assignment_fixture(), ok.assignment), "feasible fixture");
}

void property_suite(Outcome& out) {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const CensusResult r = census_of_order(n, CensusFilter::parse("connected-twinfree"), CensusCheck::kProperties);
    print_violations(r, out);
    total += examined(r);
  }
  out.detail << " graphs=" << total << " checks=" << property_checks().size();
}

void tree_results(Outcome& out) {
  for (std::size_t n = 4; n <= 10; ++n) {
    const TreeSpectrum t = tree_spectrum(n);
    out.detail << " n=" << n << ":min" << t.minimum();
    out.require(t.minimum() >= (n + 1) / 2, "tree minimum n=" + std::to_string(n));
    out.require(t.covers_range(), "tree spectrum gap n=" + std::to_string(n));
  }
}

void conjecture_guard(Outcome& out) {
  for (int which : {1, 2}) {
    std::size_t total = 0;
    for (std::size_t n = 2; n <= 9; ++n) {
      CensusResult r;
      if (n <= kMaxGeneratedOrder) {
        VectorSource source(generate_all_connected(n));
        r = conjecture_search(source, which);
      } else {
        std::ifstream in(g_data_dir + "/conn" + std::to_string(n) + ".g6");
        if (!in) throw std::runtime_error("missing conn" + std::to_string(n) + ".g6");
        Graph6Source source(in, Graph6Source::OnError::kThrow);
        r = conjecture_search(source, which);
      }
      print_violations(r, out);
      total += examined(r);
    }
    out.detail << " conjecture" << which << ":" << total << "g";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: bicl_acceptance DATA_DIR\n";
    return 2;
  }
  g_data_dir = argv[1];

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 crown-cycle counts equal k for k=5..8", crown_family},
      {"2 powerset counts equal k^2 for k=2..7 with the k=6/k=7 crossover", powerset_family_counts},
      {"3 complete graphs have n(n-1)/2 bicliques for n=3..8", complete_counts},
      {"4 enumeration equals the subset-scan oracle", oracle_equivalence},
      {"5 twin duplication and reduction keep the count", twin_invariance},
      {"6 {K3,twin}-free connected graphs n=4..9 have >= ceil(n/2) bicliques",
       [](Outcome& o) { bound_census(o, "connected-twinfree-k3free", 4, 9, true); }},
      {"7 C4-free twin-free graphs with a good assignment n=4..8 have >= ceil(n/2) bicliques",
       [](Outcome& o) { bound_census(o, "connected-twinfree-c4free-good", 4, 8, false); }},
      {"8 witness maps are injective into maximal bicliques for n<=9", witness_soundness},
      {"9 pendant triangles add exactly 3k bicliques", augmentation_accounting},
      {"10 good-assignment fixtures", assignment_fixtures},
      {"11 structural property suite P1-P11 for twin-free graphs n<=8", property_suite},
      {"12 twin-free tree minimum and spectrum for n=4..10", tree_results},
      {"13 conjecture bounds hold for twin-free connected graphs n<=9", conjecture_guard},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    const auto start = Clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << name << " |" << out.detail.str() << " (" << seconds_since(start)
              << "s)" << std::endl;
    if (!out.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
