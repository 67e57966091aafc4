#include <gtest/gtest.h>

#include <random>

#include "icol/families.hpp"
#include "icol/params.hpp"
#include "support/random.hpp"

using namespace icol;

TEST(Degeneracy, CompleteGraph) { EXPECT_LE(max_back_degree(complete_graph(3), degeneracy_order(complete_graph(3))), 2); }

TEST(Degeneracy, StarEndsWithLeaf) {
  const Graph s = star_graph(4);
  const auto order = degeneracy_order(s);
  ASSERT_EQ(order.size(), 5u);
  EXPECT_NE(order.back(), 0);
  EXPECT_EQ(max_back_degree(s, order), 1);
}

TEST(Degeneracy, Cycle) { EXPECT_EQ(max_back_degree(cycle_graph(5), degeneracy_order(cycle_graph(5))), 2); }

TEST(Degeneracy, LowestIndexTieBreak) {
  // peeling removes 0 first (all degree 2); the order is the reversal
  const auto order = degeneracy_order(cycle_graph(4));
  EXPECT_EQ(order.back(), 0);
}

TEST(ColoringNumber, Examples) {
  EXPECT_EQ(coloring_number(complete_graph(5)), 5);
  EXPECT_EQ(coloring_number(lexicographic_product(cycle_graph(5), complete_graph(2))), 6);
  EXPECT_EQ(coloring_number(empty_graph(3)), 1);
}

TEST(DegreeStats, Examples) {
  EXPECT_EQ(degree_stats(path_graph(3)).min_degree, 1);
  EXPECT_EQ(degree_stats(path_graph(3)).max_degree, 2);
  EXPECT_EQ(degree_stats(complete_graph(4)).min_degree, 3);
  EXPECT_EQ(degree_stats(complete_graph(4)).max_degree, 3);
  EXPECT_EQ(degree_stats(paw_graph()).min_degree, 1);
  EXPECT_EQ(degree_stats(paw_graph()).max_degree, 3);
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(paw_graph()), 3);
  EXPECT_EQ(clique_number(lexicographic_product(cycle_graph(5), complete_graph(2))), 4);
}

TEST(ChromaticNumber, Examples) {
  EXPECT_EQ(chromatic_number(lexicographic_product(path_graph(3), complete_graph(2))), 4);
  EXPECT_EQ(chromatic_number(lexicographic_product(cycle_graph(5), complete_graph(2))), 5);
  EXPECT_EQ(chromatic_number(cycle_graph(7)), 3);
  EXPECT_EQ(chromatic_number(complete_graph(33), DeskBounds{40, 40, 12}), 33);
}

TEST(ChromaticNumber, BoundIsReported) {
  EXPECT_THROW(chromatic_number(complete_graph(40)), SizeBoundError);
  EXPECT_THROW(clique_number(complete_graph(40)), SizeBoundError);
}

TEST(ParamsProperty, Chain) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const Graph g = support::random_graph(rng, 1 + t % 8, 0.2 + 0.1 * (t % 7));
    const auto p = parameters(g);
    EXPECT_LE(p.omega, p.chi);
    EXPECT_LE(p.chi, p.col);
    EXPECT_LE(p.col, p.Delta + 1);
  }
}

TEST(ParamsProperty, OrderingFormMatchesPeeling) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Graph g = support::random_graph(rng, 1 + t % 8);
    EXPECT_EQ(max_back_degree(g, degeneracy_order(g)) + 1, coloring_number(g));
    // no ordering beats peeling: check against every ordering on tiny graphs
    if (g.order() <= 5) {
      std::vector<Vertex> order(g.order());
      for (int i = 0; i < g.order(); ++i) order[i] = i;
      int best = g.order();
      do best = std::min(best, max_back_degree(g, order)); while (std::next_permutation(order.begin(), order.end()));
      EXPECT_EQ(best + 1, coloring_number(g));
    }
  }
}

TEST(ParamsProperty, ProductChromaticDependsOnChiOfFactor) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const Graph g = support::random_graph(rng, 1 + t % 5);
    const Graph h = support::random_graph(rng, 1 + t % 4);
    EXPECT_EQ(chromatic_number(lexicographic_product(g, h)),
              chromatic_number(lexicographic_product(g, complete_graph(chromatic_number(h)))));
  }
}
