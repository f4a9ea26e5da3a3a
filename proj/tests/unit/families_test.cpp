#include <gtest/gtest.h>

#include <stdexcept>

#include "bicl/biclique.hpp"
#include "bicl/families.hpp"
#include "bicl/twins.hpp"

namespace bicl {
namespace {

TEST(Families, CrownCycleShape) {
  const Graph g = crown_cycle(6);
  EXPECT_EQ(g.order(), 12U);
  EXPECT_EQ(g.num_edges(), 12U);
  EXPECT_TRUE(g.adjacent(0, 5));
  EXPECT_TRUE(g.adjacent(2, 8));
  EXPECT_TRUE(is_induced_c4_free(g));
  EXPECT_TRUE(is_diamond_free(g));
  EXPECT_TRUE(is_false_twin_free(g));
  EXPECT_THROW(crown_cycle(4), std::invalid_argument);
}

TEST(Families, CrownCycleMeetsOrderMinusPendants) {
  for (std::size_t k = 5; k <= 8; ++k) EXPECT_EQ(count_bicliques(crown_cycle(k)), k);
}

TEST(Families, PowersetShapeAndCount) {
  const Graph g3 = powerset_family(3);
  EXPECT_EQ(g3.order(), 10U);
  EXPECT_EQ(g3.num_edges(), 3U + 12U);
  EXPECT_TRUE(is_false_twin_free(g3));
  for (std::size_t k = 2; k <= 6; ++k) EXPECT_EQ(count_bicliques(powerset_family(k)), k * k) << k;
  EXPECT_THROW(powerset_family(1), std::invalid_argument);
  EXPECT_THROW(powerset_family(8), std::invalid_argument);
}

TEST(Families, Bracket) {
  EXPECT_EQ(powerset_bracket(1), 0U);
  EXPECT_EQ(powerset_bracket(2), 1U);
  EXPECT_EQ(powerset_bracket(4), 1U);
  EXPECT_EQ(powerset_bracket(5), 2U);
  EXPECT_EQ(powerset_bracket(68), 5U);
  EXPECT_EQ(powerset_bracket(69), 6U);
  EXPECT_EQ(powerset_bracket(133), 6U);
  EXPECT_EQ(powerset_bracket(134), 7U);
}

TEST(Families, ConjectureBounds) {
  EXPECT_EQ(conjecture1_bound(9), 5U);
  EXPECT_EQ(conjecture1_bound(69), 35U);
  EXPECT_EQ(conjecture1_bound(75), 38U);
  EXPECT_EQ(conjecture1_bound(76), 36U);
  EXPECT_EQ(conjecture1_bound(134), 49U);
  EXPECT_EQ(conjecture2_bound(69), 35U);
  EXPECT_EQ(conjecture2_bound(134), 49U);
  // 36 + floor(13 * 7 / 65)
  EXPECT_EQ(conjecture2_bound(76), 37U);
  // 36 + floor(13 * 64 / 65): one short of the next bracket
  EXPECT_EQ(conjecture2_bound(133), 48U);
}

TEST(Families, Describe) {
  EXPECT_EQ(describe_family("crown", 5).expected_vertices, 10U);
  EXPECT_EQ(describe_family("powerset", 7).expected_vertices, 134U);
  EXPECT_EQ(describe_family("complete", 6).expected_bicliques, 15U);
  EXPECT_EQ(describe_family("path", 6).expected_bicliques, 4U);
  EXPECT_EQ(describe_family("cycle", 4).expected_bicliques, 1U);
  EXPECT_EQ(describe_family("bipartite", 2, 5).expected_vertices, 7U);
  EXPECT_THROW(describe_family("wheel", 5), std::invalid_argument);
  for (const char* name : {"crown", "powerset", "complete", "path", "cycle"}) {
    const FamilySpec spec = describe_family(name, 5);
    const Graph g = make_family(spec);
    EXPECT_EQ(g.order(), spec.expected_vertices) << name;
    EXPECT_EQ(count_bicliques(g), spec.expected_bicliques.value()) << name;
  }
}

}  // namespace
}  // namespace bicl
