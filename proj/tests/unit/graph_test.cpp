#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "bicl/census.hpp"
#include "bicl/families.hpp"
#include "bicl/graph.hpp"
#include "bicl/graph_io.hpp"
#include "oracles.hpp"

namespace bicl {
namespace {

using namespace bicl::testing;

std::vector<Graph> predicate_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (Graph& g : generate_all_connected(n)) out.push_back(std::move(g));
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 9;
    out.push_back(random_graph(n, 0.15 + 0.1 * (i % 7), rng));
  }
  return out;
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
}

TEST(Graph, DuplicateEdgesCountOnce) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.degree(1), 2U);
  EXPECT_EQ(g.closed_neighbors(0).members(), (std::vector<Vertex>{0, 1}));
}

TEST(Graph, DeleteVertexMapsIndices) {
  const Graph p = path(4);
  const Subgraph s = delete_vertex(p, 1);
  EXPECT_EQ(s.graph.order(), 3U);
  EXPECT_EQ(s.index_map, (std::vector<Vertex>{0, kNoVertex, 1, 2}));
  EXPECT_EQ(s.graph.edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_THROW(delete_vertex(p, 4), std::out_of_range);
}

TEST(Graph, InducedSubgraph) {
  const Subgraph s = induced_subgraph(cycle(5), VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(s.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, PredicatesAgreeWithSubsetScans) {
  for (const Graph& g : predicate_corpus()) {
    SCOPED_TRACE(to_edge_list(g));
    EXPECT_EQ(is_connected(g), oracle_connected(g));
    EXPECT_EQ(is_triangle_free(g), oracle_triangle_free(g));
    EXPECT_EQ(is_induced_c4_free(g), oracle_c4_free(g));
    EXPECT_EQ(is_diamond_free(g), oracle_diamond_free(g));
    EXPECT_EQ(is_bipartite(g), oracle_bipartite(g));
    EXPECT_EQ(is_tree(g), oracle_connected(g) && g.num_edges() + 1 == g.order());
  }
}

TEST(Graph, NamedExamples) {
  EXPECT_FALSE(is_induced_c4_free(cycle(4)));
  EXPECT_TRUE(is_induced_c4_free(complete(4)));
  EXPECT_FALSE(is_diamond_free(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})));
  EXPECT_TRUE(is_bipartite(complete_bipartite(3, 4)));
  EXPECT_FALSE(is_bipartite(cycle(5)));
  EXPECT_TRUE(is_tree(path(1)));
  EXPECT_FALSE(is_connected(Graph::from_edges(0, {})));
  EXPECT_EQ(pendant_vertices(crown_cycle(5)).members(), (std::vector<Vertex>{5, 6, 7, 8, 9}));
  EXPECT_TRUE(is_independent(cycle(6), VertexSet(6, {0, 2, 4})));
  EXPECT_FALSE(is_independent(cycle(6), VertexSet(6, {0, 1})));
}

}  // namespace
}  // namespace bicl
