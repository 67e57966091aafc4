#include <gtest/gtest.h>

#include <random>

#include "icol/families.hpp"
#include "icol/io.hpp"
#include "icol/isomorphism.hpp"
#include "support/random.hpp"

using namespace icol;

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  EXPECT_FALSE(is_isomorphic(path_graph(4), star_graph(3)));
  EXPECT_TRUE(is_isomorphic(complement(independent_expansion(path_graph(3), {2, 1, 2})),
                            complete_expansion(complement(path_graph(3)), {2, 1, 2})));
}

TEST(Isomorphism, MapIsEdgePreserving) {
  const Graph a = bull_graph();
  std::mt19937_64 rng(7);
  const Graph b = support::permuted(a, support::random_permutation(rng, 5));
  const auto map = find_isomorphism(a, b);
  ASSERT_TRUE(map);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(a.adjacent(u, v), b.adjacent((*map)[u], (*map)[v]));
}

TEST(Isomorphism, BoundEnforced) { EXPECT_THROW(is_isomorphic(path_graph(13), path_graph(13)), SizeBoundError); }

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 8;
    const Graph g = support::random_graph(rng, n);
    const Graph h = support::permuted(g, support::random_permutation(rng, n));
    EXPECT_EQ(encode_graph6(canonical_form(g)), encode_graph6(canonical_form(h)));
    EXPECT_TRUE(is_isomorphic(g, canonical_form(g)));
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphic) {
  EXPECT_NE(canonical_form(path_graph(4)), canonical_form(star_graph(3)));
}
