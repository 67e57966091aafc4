#include <gtest/gtest.h>

#include "icol/families.hpp"
#include "icol/game.hpp"

using namespace icol;

namespace {

StrategyPolicy fixed_order(std::vector<Vertex> order) {
  return StrategyPolicy::ann("fixed", [order](const GameState& s) {
    for (Vertex v : order)
      if (!s.is_colored(v)) return v;
    return -1;
  });
}

StrategyPolicy lowest_color() {
  return StrategyPolicy::ben("lowest", [](const GameState& s, Vertex v) { return palette_colors(s.available(v)).front(); });
}

StrategyPolicy scripted_colors(std::vector<Color> colors) {
  return StrategyPolicy::ben("scripted", [colors](const GameState& s, Vertex) { return colors.at(s.history().size()); });
}

}  // namespace

TEST(GameState, PlayIsImmutable) {
  const GameState s(path_graph(3), 2);
  const GameState t = s.play({1, 1});
  EXPECT_FALSE(s.is_colored(1));
  EXPECT_EQ(t.color(1), 1);
  EXPECT_EQ(t.history().size(), 1u);
  EXPECT_EQ(t.available(0), color_bit(2));
}

TEST(GameState, RejectsIllegal) {
  const GameState s = GameState(path_graph(3), 2).play({1, 1});
  EXPECT_FALSE(s.is_legal({0, 1}));
  EXPECT_FALSE(s.is_legal({1, 2}));
  EXPECT_FALSE(s.is_legal({0, 3}));
  EXPECT_THROW(s.play({0, 1}), InputError);
  EXPECT_THROW(GameState(path_graph(3), 0), InputError);
}

TEST(Blocked, Examples) {
  const GameState k3 = GameState(complete_graph(3), 3).play({0, 1}).play({1, 2});
  EXPECT_EQ(blocked_vertices(k3), 0u);
  const GameState p3 = GameState(path_graph(3), 2).play({0, 1}).play({2, 2});
  EXPECT_EQ(blocked_vertices(p3), bit(1));
}

TEST(Blocked, NeverWhenPaletteExceedsMaxDegree) {
  const Graph g = bull_graph();
  GameState s(g, 4);
  s = s.play({0, 1}).play({3, 2}).play({4, 3});
  EXPECT_EQ(blocked_vertices(s), 0u);
}

TEST(CanonicalKey, ColorSwap) {
  const Graph k2 = complete_graph(2);
  const auto a = canonical_key(GameState(k2, 2).play({0, 1}).play({1, 2}));
  const auto b = canonical_key(GameState(k2, 2).play({0, 2}).play({1, 1}));
  EXPECT_EQ(a, b);
}

TEST(CanonicalKey, DifferentVertices) {
  const Graph k2 = complete_graph(2);
  EXPECT_NE(canonical_key(GameState(k2, 2).play({0, 1})), canonical_key(GameState(k2, 2).play({1, 1})));
}

TEST(CanonicalKey, PaletteSizeMatters) {
  EXPECT_NE(canonical_key(GameState(path_graph(2), 2)), canonical_key(GameState(path_graph(2), 3)));
}

TEST(PlayGame, K2AnnWinsInTwoMoves) {
  const auto t = play_game(complete_graph(2), 2, fixed_order({0, 1}), lowest_color());
  EXPECT_EQ(t.outcome, Outcome::AnnWins);
  EXPECT_EQ(t.moves.size(), 2u);
  EXPECT_TRUE(transcript_consistent(complete_graph(2), t));
}

TEST(PlayGame, LeavesFirstBlocksCenter) {
  const auto t = play_game(path_graph(3), 2, fixed_order({0, 2, 1}), scripted_colors({1, 2}));
  EXPECT_EQ(t.outcome, Outcome::BenWins);
  ASSERT_TRUE(t.blocked_witness);
  EXPECT_EQ(*t.blocked_witness, 1);
  EXPECT_EQ(t.moves.size(), 2u);
  EXPECT_TRUE(transcript_consistent(path_graph(3), t));
}

TEST(PlayGame, IllegalMoveNamesSide) {
  const auto bad_ben = StrategyPolicy::ben("bad", [](const GameState&, Vertex) { return 7; });
  try {
    play_game(path_graph(3), 2, fixed_order({0, 1, 2}), bad_ben);
    FAIL() << "expected PolicyError";
  } catch (const PolicyError& e) {
    EXPECT_EQ(e.side(), Side::Ben);
    EXPECT_NE(std::string(e.what()).find("Ben"), std::string::npos);
  }
  const auto bad_ann = StrategyPolicy::ann("bad", [](const GameState&) { return 0; });
  try {
    play_game(path_graph(3), 3, bad_ann, lowest_color());
    FAIL() << "expected PolicyError";
  } catch (const PolicyError& e) {
    EXPECT_EQ(e.side(), Side::Ann);
  }
  EXPECT_THROW(play_game(path_graph(3), 2, lowest_color(), lowest_color()), PolicyError);
}

TEST(Transcript, JsonRoundTrip) {
  const auto t = play_game(path_graph(3), 2, fixed_order({0, 2, 1}), scripted_colors({1, 2}));
  const auto j = transcript_to_json(t);
  EXPECT_EQ(j.dump(), R"({"blocked":1,"k":2,"moves":[{"c":1,"v":0},{"c":2,"v":2}],"outcome":"ben"})");
  const auto back = transcript_from_json(j);
  EXPECT_EQ(back.moves, t.moves);
  EXPECT_EQ(back.blocked_witness, t.blocked_witness);
  EXPECT_THROW(transcript_from_json(nlohmann::json::parse(R"({"k":2})")), InputError);
}

TEST(Transcript, InconsistentDetected) {
  Transcript t{2, {{0, 1}, {1, 1}}, Outcome::AnnWins, std::nullopt};
  EXPECT_FALSE(transcript_consistent(path_graph(3), t));
  Transcript lie{2, {{0, 1}}, Outcome::BenWins, 1};
  EXPECT_FALSE(transcript_consistent(path_graph(3), lie));
}
