#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "bicl/canonical.hpp"
#include "bicl/census.hpp"
#include "bicl/error.hpp"
#include "bicl/families.hpp"
#include "bicl/graph_io.hpp"
#include "bicl/twins.hpp"
#include "oracles.hpp"

namespace bicl {
namespace {

using namespace bicl::testing;

CensusResult census_over(std::vector<Graph> graphs, const std::string& cls, CensusCheck check,
                         Bound bound = Bound::kHalfCeil, std::size_t jobs = 1) {
  VectorSource source(std::move(graphs));
  return run_census(source, CensusFilter::parse(cls), check, bound, {jobs, 64});
}

std::vector<Graph> connected_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (Graph& g : generate_all_connected(k)) out.push_back(std::move(g));
  return out;
}

TEST(Generate, ConnectedCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(generate_all_connected(n).size(), expected[n - 1]) << n;
  EXPECT_THROW(generate_all_connected(7), std::out_of_range);
  EXPECT_THROW(generate_all_connected(0), std::out_of_range);
}

TEST(Generate, SmallestOrders) {
  const auto three = generate_all_connected(3);
  ASSERT_EQ(three.size(), 2U);
  EXPECT_EQ(three[0].num_edges(), 2U);
  EXPECT_EQ(three[1], complete(3));
}

TEST(Generate, RepresentativesAreMinimalAndConnected) {
  std::mt19937_64 rng(2);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : generate_all_connected(n)) {
      EXPECT_TRUE(oracle_connected(g));
      const std::string mine = oracle_graph6(g);
      std::vector<Vertex> p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        // Smaller graph6 bytes mean a smaller bitstring.
        EXPECT_GE(oracle_graph6(relabel(g, p)), mine);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}

TEST(Generate, EveryConnectedGraphIsRepresented) {
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 6; ++n) {
    std::set<std::string> keys;
    for (const Graph& g : generate_all_connected(n)) keys.insert(canonical_key(g));
    for (int i = 0; i < 200; ++i) {
      EXPECT_TRUE(keys.contains(canonical_key(random_connected_graph(n, 0.1 * (i % 10), rng))));
    }
  }
}

TEST(Generate, TreeCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto trees = generate_trees(n);
    EXPECT_EQ(trees.size(), expected[n - 1]) << n;
    for (const Graph& t : trees) EXPECT_TRUE(is_tree(t));
  }
}

TEST(Ingest, ReadsLinesAndRecordsErrors) {
  std::istringstream in("A_\n\nBw\nB!\nCh\n");
  std::vector<IngestError> errors;
  const auto graphs = ingest_graph6(in, &errors);
  ASSERT_EQ(graphs.size(), 3U);
  EXPECT_EQ(graphs[0], complete(2));
  EXPECT_EQ(graphs[2], path(4));
  ASSERT_EQ(errors.size(), 1U);
  EXPECT_EQ(errors[0].line, 4U);
}

TEST(Ingest, ThrowModeCarriesLineNumber) {
  std::istringstream in("A_\nzz\n");
  Graph6Source source(in, Graph6Source::OnError::kThrow);
  EXPECT_TRUE(source.next().has_value());
  try {
    source.next();
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
}

TEST(Filter, ParseAndDescribe) {
  const CensusFilter f = CensusFilter::parse("k3free-twinfree");
  EXPECT_TRUE(f.triangle_free);
  EXPECT_TRUE(f.false_twin_free);
  EXPECT_FALSE(f.connected);
  EXPECT_EQ(f.describe(), "twinfree-k3free");
  EXPECT_EQ(CensusFilter::parse(f.describe()), f);
  EXPECT_EQ(CensusFilter::parse("all").describe(), "all");
  EXPECT_EQ(CensusFilter::parse("connected,mindeg2").min_degree, 2U);
  EXPECT_THROW(CensusFilter::parse("twinfree-planar"), std::invalid_argument);
  EXPECT_TRUE(CensusFilter::parse("tree").accepts(path(5)));
  EXPECT_FALSE(CensusFilter::parse("tree").accepts(cycle(5)));
  EXPECT_FALSE(CensusFilter::parse("good").accepts(overloaded_clique_fixture()));
}

TEST(BoundCensus, FourVertexBaseCase) {
  const CensusResult r = census_over(generate_all_connected(4), "connected-k3free-twinfree", CensusCheck::kBound);
  ASSERT_EQ(r.reports.size(), 1U);
  EXPECT_EQ(r.reports[0].graphs_examined, 1U);  // P4
  EXPECT_EQ(r.reports[0].min_bicliques, 2U);
  EXPECT_TRUE(r.passed());
}

TEST(BoundCensus, SixVertexTrees) {
  const CensusResult r = census_over(generate_trees(6), "tree-twinfree", CensusCheck::kBound);
  ASSERT_EQ(r.reports.size(), 1U);
  EXPECT_EQ(r.reports[0].graphs_examined, 2U);
  EXPECT_EQ(r.reports[0].min_bicliques, 3U);
  EXPECT_TRUE(r.passed());
}

TEST(BoundCensus, ArgminAttainsMinimum) {
  const CensusResult r = census_over(connected_up_to(6), "connected-twinfree", CensusCheck::kBound);
  for (const CensusReport& rep : r.reports) {
    if (!rep.min_bicliques) continue;
    EXPECT_EQ(count_bicliques(parse_graph6(rep.argmin_graph)), *rep.min_bicliques);
  }
}

TEST(BoundCensus, ReportsViolationsThatRecheck) {
  // Bound n fails wherever fewer than n bicliques exist.
  const CensusResult r = census_over(connected_up_to(5), "connected", CensusCheck::kBound, Bound::kOrder);
  ASSERT_FALSE(r.passed());
  for (const CensusReport& rep : r.reports) {
    EXPECT_TRUE(std::is_sorted(rep.violations.begin(), rep.violations.end()));
    for (const Violation& v : rep.violations) {
      EXPECT_EQ(v.check, "bound:n");
      const auto again = recheck(parse_graph6(v.graph), v.check);
      ASSERT_TRUE(again.has_value());
      EXPECT_EQ(*again, v.detail);
    }
  }
}

TEST(BoundCensus, IndependentOfJobsAndOrder) {
  std::vector<Graph> graphs = connected_up_to(6);
  const CensusResult serial = census_over(graphs, "connected", CensusCheck::kBound, Bound::kOrder, 1);
  std::mt19937_64 rng(31);
  std::shuffle(graphs.begin(), graphs.end(), rng);
  for (Graph& g : graphs) {
    std::vector<Vertex> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    g = relabel(g, p);
  }
  const CensusResult parallel = census_over(graphs, "connected", CensusCheck::kBound, Bound::kOrder, 3);
  ASSERT_EQ(serial.reports.size(), parallel.reports.size());
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    EXPECT_TRUE(serial.reports[i].same_outcome(parallel.reports[i])) << serial.reports[i].n;
  }
}

TEST(PropertySuite, CleanOnSmallTwinFreeGraphs) {
  const CensusResult r = census_over(connected_up_to(6), "connected-twinfree", CensusCheck::kProperties);
  for (const CensusReport& rep : r.reports) {
    for (const Violation& v : rep.violations) ADD_FAILURE() << v.check << " " << v.graph << " " << v.detail;
  }
}

TEST(PropertySuite, NamedExamples) {
  const PropertyCheck* p6 = find_property_check("P6");
  ASSERT_NE(p6, nullptr);
  EXPECT_TRUE(p6->applies(complete(3)));
  EXPECT_FALSE(p6->assertion(complete(3), enumerate_bicliques(complete(3))).has_value());
  const PropertyCheck* p4 = find_property_check("P4-deletion-loss");
  ASSERT_NE(p4, nullptr);
  EXPECT_TRUE(p4->applies(cycle(5)));
  EXPECT_FALSE(recheck(cycle(5), "P4").has_value());
  EXPECT_EQ(property_checks().size(), 11U);
  EXPECT_THROW(recheck(cycle(5), "P12"), std::invalid_argument);
}

TEST(PropertySuite, SingleEdgeIsOutsideThePrivateVertexClass) {
  // Both ends of K2 lie only in its single biclique; the check applies from
  // three vertices on.
  const Graph k2 = complete(2);
  const PropertyCheck* p8 = find_property_check("P8");
  ASSERT_NE(p8, nullptr);
  EXPECT_FALSE(p8->applies(k2));
  EXPECT_TRUE(p8->assertion(k2, enumerate_bicliques(k2)).has_value());
}

TEST(OtherChecks, WitnessAndAugmentationCleanUpToSix) {
  EXPECT_TRUE(census_over(connected_up_to(6), "connected", CensusCheck::kWitness).passed());
  EXPECT_TRUE(census_over(connected_up_to(6), "connected", CensusCheck::kAugmentation).passed());
}

TEST(Conjecture, PowersetFamilies) {
  VectorSource six({powerset_family(6)});
  const CensusResult r6 = conjecture_search(six, 1);
  ASSERT_EQ(r6.reports.size(), 1U);
  EXPECT_EQ(r6.reports[0].min_bicliques, 36U);
  EXPECT_TRUE(r6.passed());
  EXPECT_EQ(conjecture1_bound(69), 35U);

  VectorSource seven({powerset_family(7)});
  const CensusResult r7 = conjecture_search(seven, 2);
  ASSERT_EQ(r7.reports.size(), 1U);
  EXPECT_EQ(r7.reports[0].n, 134U);
  EXPECT_EQ(r7.reports[0].min_bicliques, 49U);
  EXPECT_TRUE(r7.passed());
  EXPECT_THROW(conjecture_search(seven, 3), std::invalid_argument);
}

TEST(TreeSpectrum, Examples) {
  const TreeSpectrum t4 = tree_spectrum(4);
  EXPECT_EQ(t4.counts, std::set<std::size_t>{2});
  EXPECT_TRUE(tree_spectrum(6).counts.contains(3));
  EXPECT_TRUE(tree_spectrum(6).counts.contains(4));
  EXPECT_TRUE(tree_spectrum(7).counts.contains(4));
  EXPECT_TRUE(tree_spectrum(7).counts.contains(5));
  for (std::size_t n = 4; n <= 10; ++n) {
    const TreeSpectrum t = tree_spectrum(n);
    EXPECT_GE(t.minimum(), (n + 1) / 2);
    EXPECT_TRUE(t.covers_range()) << n;
  }
  EXPECT_THROW(tree_spectrum(3), std::out_of_range);
  EXPECT_THROW(tree_spectrum(11), std::out_of_range);
}

}  // namespace
}  // namespace bicl
