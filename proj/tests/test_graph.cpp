#include <gtest/gtest.h>

#include <random>

#include "icol/families.hpp"
#include "icol/graph.hpp"
#include "icol/isomorphism.hpp"
#include "icol/params.hpp"
#include "icol/recognizers.hpp"
#include "support/random.hpp"

using namespace icol;

TEST(BuildGraph, TriangleIsK3) {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g, complete_graph(3));
  EXPECT_EQ(g.size(), 3u);
}

TEST(BuildGraph, NoEdges) {
  const Graph g = build_graph(4, {});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 0u);
}

TEST(BuildGraph, RejectsSelfLoopAndOutOfRange) {
  EXPECT_THROW(build_graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(build_graph(2, {{0, 2}}), InputError);
  EXPECT_THROW(GraphBuilder(-1), InputError);
}

TEST(BuildGraph, DuplicateEdgeIsOneEdge) {
  EXPECT_EQ(build_graph(2, {{0, 1}, {1, 0}}).size(), 1u);
}

TEST(Families, PathDegrees) {
  const Graph p4 = family_generator("P", {4});
  EXPECT_EQ(p4.order(), 4);
  EXPECT_EQ(p4.size(), 3u);
  EXPECT_EQ(p4.degree(0), 1);
  EXPECT_EQ(p4.degree(1), 2);
  EXPECT_EQ(p4.degree(2), 2);
  EXPECT_EQ(p4.degree(3), 1);
}

TEST(Families, Paw) {
  const Graph paw = family_generator("paw");
  EXPECT_EQ(paw.order(), 4);
  EXPECT_EQ(paw.size(), 4u);
  EXPECT_TRUE(contains_induced(paw, complete_graph(3)));
}

TEST(Families, InvalidSizes) {
  EXPECT_THROW(family_generator("C", {2}), InputError);
  EXPECT_THROW(family_generator("nope", {3}), InputError);
}

TEST(Families, NamedSmallGraphs) {
  EXPECT_EQ(kite_graph().size(), 6u);
  EXPECT_EQ(dart_graph().size(), 6u);
  EXPECT_EQ(bull_graph().size(), 5u);
  EXPECT_EQ(house_graph().size(), 6u);
  EXPECT_EQ(co_p2_p3_graph().size(), 7u);
  EXPECT_TRUE(is_isomorphic(complete_multipartite(std::vector<int>{2, 2}), cycle_graph(4)));
  EXPECT_EQ(star_graph(4).order(), 5);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete_graph(4)), empty_graph(4));
  EXPECT_TRUE(is_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  EXPECT_EQ(complement(complement(path_graph(5))), path_graph(5));
}

TEST(DisjointUnion, Examples) {
  EXPECT_EQ(disjoint_union(complete_graph(1), complete_graph(1)), empty_graph(2));
  const Graph u = disjoint_union(path_graph(3), complete_graph(3));
  EXPECT_EQ(u.order(), 6);
  EXPECT_EQ(u.size(), 5u);
  EXPECT_EQ(disjoint_union(empty_graph(2), empty_graph(3)), empty_graph(5));
}

TEST(Product, P2TimesK2IsK4) { EXPECT_EQ(lexicographic_product(path_graph(2), complete_graph(2)), complete_graph(4)); }

TEST(Product, C5K2IsFiveRegular) {
  const Graph g = lexicographic_product(cycle_graph(5), complete_graph(2));
  EXPECT_EQ(g.order(), 10);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 5);
}

TEST(Product, K1IsIdentity) {
  EXPECT_EQ(lexicographic_product(complete_graph(1), bull_graph()), bull_graph());
}

TEST(Product, RowMajorLabels) {
  const Graph g = lexicographic_product(path_graph(2), path_graph(3));
  ASSERT_EQ(g.labels().size(), 6u);
  EXPECT_EQ(g.labels()[4], "(1,1)");
  // (0,0)~(1,2) since 0~1 in G; (0,0)~(0,1) in H; (0,0) !~ (0,2)
  EXPECT_TRUE(g.adjacent(0, 5));
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Expansion, Examples) {
  EXPECT_EQ(complete_expansion(path_graph(2), {1, 1}), path_graph(2));
  EXPECT_TRUE(is_isomorphic(complete_expansion(path_graph(3), {2, 2, 2}),
                            lexicographic_product(path_graph(3), complete_graph(2))));
  const Graph i = independent_expansion(cycle_graph(5), {2, 2, 2, 2, 2});
  EXPECT_EQ(i.order(), 10);
  EXPECT_FALSE(contains_induced(i, complete_graph(3)));
}

TEST(Expansion, BlockLabels) {
  const Graph g = complete_expansion(path_graph(3), {2, 1, 2});
  ASSERT_EQ(g.labels().size(), 5u);
  EXPECT_EQ(g.labels()[0], "(0,0)");
  EXPECT_EQ(g.labels()[2], "(1,0)");
  EXPECT_EQ(g.labels()[4], "(2,1)");
}

TEST(Expansion, GeneralReplacement) {
  ExpansionSpec spec{path_graph(2), {Replacement::of(cycle_graph(5)), Replacement::of(complete_graph(1))}};
  const Graph g = expansion(spec);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 10u);
}

TEST(Expansion, Errors) {
  EXPECT_THROW(complete_expansion(path_graph(3), {1, 1}), InputError);
  EXPECT_THROW(complete_expansion(path_graph(2), {0, 1}), InputError);
}

TEST(Components, Basic) {
  const Graph g = disjoint_union(path_graph(3), cycle_graph(4));
  EXPECT_EQ(components(g).size(), 2u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(complete_graph(1)));
}

TEST(GraphProperty, ConstructedGraphsValid) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const Graph g = support::random_graph(rng, 1 + t % 8);
    const Graph h = support::random_graph(rng, 1 + t % 4);
    EXPECT_TRUE(g.valid());
    EXPECT_TRUE(complement(g).valid());
    EXPECT_TRUE(lexicographic_product(g, h).valid());
    EXPECT_TRUE(disjoint_union(g, h).valid());
  }
}

TEST(GraphProperty, ProductMinDegree) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const Graph g = support::random_graph(rng, 1 + t % 4);
    const Graph h = support::random_graph(rng, 1 + t % 3);
    const int lhs = degree_stats(lexicographic_product(g, h)).min_degree;
    EXPECT_EQ(lhs, degree_stats(g).min_degree * h.order() + degree_stats(h).min_degree);
  }
}
