#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "bicl/canonical.hpp"
#include "bicl/census.hpp"
#include "bicl/families.hpp"
#include "bicl/graph_io.hpp"
#include "oracles.hpp"

namespace bicl {
namespace {

using namespace bicl::testing;

std::vector<Vertex> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(4);
  std::vector<Graph> corpus{complete(7), Graph::from_edges(6, {}), cycle(9), powerset_family(4), crown_cycle(7),
                            complete_bipartite(3, 5)};
  for (int i = 0; i < 100; ++i) corpus.push_back(random_graph(3 + i % 12, 0.4, rng));
  for (const Graph& g : corpus) {
    const Graph canon = canonical_labeling(g).graph;
    for (int t = 0; t < 5; ++t) {
      EXPECT_EQ(canonical_labeling(relabel(g, shuffled(g.order(), rng))).graph, canon) << to_edge_list(g);
    }
  }
}

TEST(Canonical, OrderIsAnIsomorphism) {
  const Graph g = powerset_family(3);
  const CanonicalLabeling c = canonical_labeling(g);
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < c.order.size(); ++p) position[c.order[p]] = static_cast<Vertex>(p);
  EXPECT_EQ(relabel(g, position), c.graph);
}

TEST(Canonical, SeparatesAllSmallConnectedGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> keys;
    const auto graphs = generate_all_connected(n);
    for (const Graph& g : graphs) keys.insert(canonical_key(g));
    EXPECT_EQ(keys.size(), graphs.size()) << n;
  }
}

TEST(Canonical, IsomorphismExamples) {
  EXPECT_TRUE(are_isomorphic(path(5), relabel(path(5), {4, 2, 0, 1, 3})));
  EXPECT_FALSE(are_isomorphic(path(4), Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_FALSE(are_isomorphic(cycle(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  EXPECT_THROW(canonical_labeling(path(65)), std::length_error);
  EXPECT_EQ(canonical_key(path(65)), to_edge_list(path(65)));
}

}  // namespace
}  // namespace bicl
