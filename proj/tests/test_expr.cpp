#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "icol/expr.hpp"
#include "icol/isomorphism.hpp"

using namespace icol;

TEST(Expression, Names) {
  EXPECT_EQ(parse_graph_expression("C5").graph, cycle_graph(5));
  EXPECT_EQ(parse_graph_expression("paw").graph, paw_graph());
  EXPECT_EQ(parse_graph_expression("Paw").graph, paw_graph());
  EXPECT_EQ(parse_graph_expression("co-p2up3").graph, co_p2_p3_graph());
  EXPECT_TRUE(is_isomorphic(parse_graph_expression("K2,2").graph, cycle_graph(4)));
  EXPECT_EQ(parse_graph_expression("S4").graph, star_graph(4));
  EXPECT_EQ(parse_graph_expression("E3").graph, empty_graph(3));
}

TEST(Expression, ProductKeepsFactors) {
  const auto p = parse_graph_expression("P3[K2]");
  EXPECT_EQ(p.graph.order(), 6);
  ASSERT_TRUE(p.factors);
  EXPECT_EQ(p.factors->first, path_graph(3));
  EXPECT_EQ(p.factors->second, complete_graph(2));
}

TEST(Expression, Operators) {
  EXPECT_EQ(parse_graph_expression("P3+K3").graph.order(), 6);
  EXPECT_EQ(parse_graph_expression("~K4").graph, empty_graph(4));
  EXPECT_EQ(parse_graph_expression("K[P3](2,1,2)").graph, complete_expansion(path_graph(3), {2, 1, 2}));
  EXPECT_EQ(parse_graph_expression("I[C5](2,2,2,2,2)").graph.order(), 10);
  EXPECT_EQ(parse_graph_expression(" ( P2 ) [ P3 ] ").graph.order(), 6);
  EXPECT_FALSE(parse_graph_expression("P3[K2]+K1").factors);
}

TEST(Expression, Errors) {
  for (const char* bad : {"", "Q3", "P3[", "K[P3](1,2)", "C2", "P3)", "K[P3]"}) {
    EXPECT_THROW(parse_graph_expression(bad), InputError) << bad;
  }
}

TEST(GraphArg, Sources) {
  EXPECT_EQ(read_graph_arg("Bw").graph, complete_graph(3));
  EXPECT_EQ(read_graph_arg("g6:Dhc").graph, cycle_graph(5));
  EXPECT_EQ(read_graph_arg("C5").graph, cycle_graph(5));
  const std::string path = ::testing::TempDir() + "icol_graph.json";
  {
    std::ofstream out(path);
    out << R"({"n": 3, "edges": [[0, 1], [1, 2]]})";
  }
  EXPECT_EQ(read_graph_arg(path).graph, path_graph(3));
  std::remove(path.c_str());
  EXPECT_THROW(read_graph_arg("not a graph!"), InputError);
}
