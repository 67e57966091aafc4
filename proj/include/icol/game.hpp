#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "icol/graph.hpp"

namespace icol {

/// Color in 1..k; 0 marks an uncolored vertex.
using Color = int;

/// Palettes are bit sets over colors 1..kMaxColors (color c is bit c-1).
using Palette = std::uint64_t;
inline constexpr int kMaxColors = 64;

inline Palette full_palette(int k) {
  return k >= 64 ? ~Palette{0} : (Palette{1} << k) - 1;
}
inline constexpr Palette color_bit(Color c) { return Palette{1} << (c - 1); }

enum class Side { Ann, Ben };

inline const char* side_name(Side s) { return s == Side::Ann ? "Ann" : "Ben"; }

struct Move {
  Vertex vertex = 0;
  Color color = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Partial proper coloring of a fixed graph with a k-color palette, plus the
/// order in which vertices were colored. Values are immutable snapshots;
/// play() returns a new state.
class GameState {
 public:
  GameState(std::shared_ptr<const Graph> graph, int k) : graph_(std::move(graph)), k_(k) {
    if (!graph_) throw InputError("game state needs a graph");
    if (k < 1 || k > kMaxColors) {
      throw InputError("palette size must be in [1, " + std::to_string(kMaxColors) + "], got " +
                       std::to_string(k));
    }
    colors_.assign(graph_->order(), 0);
  }

  GameState(const Graph& graph, int k) : GameState(std::make_shared<const Graph>(graph), k) {}

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  int k() const { return k_; }
  int order() const { return graph_->order(); }
  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<Move>& history() const { return history_; }
  bool is_colored(Vertex v) const { return colors_[v] != 0; }
  bool complete() const { return static_cast<int>(history_.size()) == order(); }

  VertexSet uncolored() const {
    VertexSet s = 0;
    for (Vertex v = 0; v < order(); ++v) {
      if (colors_[v] == 0) s |= bit(v);
    }
    return s;
  }

  /// Colors carried by the colored neighbors of v.
  Palette neighbor_colors(Vertex v) const {
    Palette p = 0;
    for_each_vertex(graph_->neighbors(v), [&](Vertex w) {
      if (colors_[w] != 0) p |= color_bit(colors_[w]);
    });
    return p;
  }

  /// Proper colors for v; empty if v is colored.
  Palette available(Vertex v) const {
    if (is_colored(v)) return 0;
    return full_palette(k_) & ~neighbor_colors(v);
  }

  bool is_legal(Move m) const {
    return m.vertex >= 0 && m.vertex < order() && !is_colored(m.vertex) && m.color >= 1 &&
           m.color <= k_ && (available(m.vertex) & color_bit(m.color)) != 0;
  }

  GameState play(Move m) const {
    if (!is_legal(m)) {
      throw InputError("illegal move: vertex " + std::to_string(m.vertex) + " color " +
                       std::to_string(m.color));
    }
    GameState next = *this;
    next.colors_[m.vertex] = m.color;
    next.history_.push_back(m);
    return next;
  }

 private:
  std::shared_ptr<const Graph> graph_;
  int k_ = 0;
  std::vector<Color> colors_;
  std::vector<Move> history_;
};

inline std::vector<Color> palette_colors(Palette p) {
  std::vector<Color> out;
  while (p != 0) {
    out.push_back(std::countr_zero(p) + 1);
    p &= p - 1;
  }
  return out;
}

/// Uncolored vertices whose colored neighbors already carry all k colors.
inline VertexSet blocked_vertices(const GameState& s) {
  VertexSet out = 0;
  const Palette all = full_palette(s.k());
  for_each_vertex(s.uncolored(), [&](Vertex v) {
    if ((s.neighbor_colors(v) & all) == all) out |= bit(v);
  });
  return out;
}

/// Identifies a state up to renaming colors: the palette size plus the
/// coloring with colors renumbered by first appearance in vertex order
/// (equivalently, color classes listed by their minimum vertex).
struct StateKey {
  int k = 0;
  std::vector<Color> classes;
  friend bool operator==(const StateKey&, const StateKey&) = default;
  friend auto operator<=>(const StateKey&, const StateKey&) = default;
};

inline std::vector<Color> normalize_colors(const std::vector<Color>& colors) {
  std::vector<Color> rename(kMaxColors + 1, 0);
  std::vector<Color> out(colors.size(), 0);
  Color next = 1;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    const Color c = colors[v];
    if (c == 0) continue;
    if (rename[c] == 0) rename[c] = next++;
    out[v] = rename[c];
  }
  return out;
}

inline StateKey canonical_key(const GameState& s) { return {s.k(), normalize_colors(s.colors())}; }

/// Raised when a policy emits an illegal move. Names the offending side.
class PolicyError : public std::logic_error {
 public:
  PolicyError(Side side, const std::string& what)
      : std::logic_error(std::string(side_name(side)) + " policy: " + what), side_(side) {}
  Side side() const { return side_; }

 private:
  Side side_;
};

/// Move-selection rule for one side. Ann's rule maps a state to the vertex
/// to present; Ben's maps a state and the presented vertex to a color.
/// Policies are immutable; any cache they carry is internally synchronized.
class StrategyPolicy {
 public:
  using AnnRule = std::function<Vertex(const GameState&)>;
  using BenRule = std::function<Color(const GameState&, Vertex)>;

  static StrategyPolicy ann(std::string name, AnnRule rule) {
    StrategyPolicy p;
    p.side_ = Side::Ann;
    p.name_ = std::move(name);
    p.ann_ = std::move(rule);
    return p;
  }

  static StrategyPolicy ben(std::string name, BenRule rule) {
    StrategyPolicy p;
    p.side_ = Side::Ben;
    p.name_ = std::move(name);
    p.ben_ = std::move(rule);
    return p;
  }

  Side side() const { return side_; }
  const std::string& name() const { return name_; }

  Vertex present(const GameState& s) const {
    if (side_ != Side::Ann) throw PolicyError(side_, "asked to present a vertex");
    return ann_(s);
  }

  Color color(const GameState& s, Vertex v) const {
    if (side_ != Side::Ben) throw PolicyError(side_, "asked to color a vertex");
    return ben_(s, v);
  }

 private:
  StrategyPolicy() = default;
  Side side_ = Side::Ann;
  std::string name_;
  AnnRule ann_;
  BenRule ben_;
};

enum class Outcome { AnnWins, BenWins };

struct Transcript {
  int k = 0;
  std::vector<Move> moves;
  Outcome outcome = Outcome::AnnWins;
  std::optional<Vertex> blocked_witness;
};

/// First blocked vertex, if any.
inline std::optional<Vertex> first_blocked(const GameState& s) {
  const VertexSet b = blocked_vertices(s);
  if (b == 0) return std::nullopt;
  return std::countr_zero(b);
}

/// Plays Ann against Ben from `start` until the graph is colored or a block
/// vertex appears. A presented vertex with no proper color also ends the
/// game for Ben.
inline Transcript play_from(const GameState& start, const StrategyPolicy& ann,
                            const StrategyPolicy& ben) {
  if (ann.side() != Side::Ann) throw PolicyError(ann.side(), "supplied in Ann's seat");
  if (ben.side() != Side::Ben) throw PolicyError(ben.side(), "supplied in Ben's seat");
  GameState s = start;
  Transcript t;
  t.k = s.k();
  t.moves = s.history();
  if (auto b = first_blocked(s)) {
    t.outcome = Outcome::BenWins;
    t.blocked_witness = b;
    return t;
  }
  while (!s.complete()) {
    const Vertex v = ann.present(s);
    if (v < 0 || v >= s.order() || s.is_colored(v)) {
      throw PolicyError(Side::Ann, "presented invalid or colored vertex " + std::to_string(v));
    }
    if (s.available(v) == 0) {
      t.outcome = Outcome::BenWins;
      t.blocked_witness = v;
      return t;
    }
    const Color c = ben.color(s, v);
    if (!s.is_legal({v, c})) {
      throw PolicyError(Side::Ben, "gave vertex " + std::to_string(v) + " improper color " +
                                       std::to_string(c));
    }
    s = s.play({v, c});
    t.moves.push_back({v, c});
    if (auto b = first_blocked(s)) {
      t.outcome = Outcome::BenWins;
      t.blocked_witness = b;
      return t;
    }
  }
  t.outcome = Outcome::AnnWins;
  return t;
}

inline Transcript play_game(const Graph& g, int k, const StrategyPolicy& ann,
                            const StrategyPolicy& ben) {
  return play_from(GameState(g, k), ann, ben);
}

/// Replays a transcript; true iff every move is legal and the recorded
/// outcome is what the final coloring shows.
inline bool transcript_consistent(const Graph& g, const Transcript& t) {
  GameState s(g, t.k);
  for (const Move& m : t.moves) {
    if (!s.is_legal(m)) return false;
    s = s.play(m);
  }
  if (t.outcome == Outcome::AnnWins) return s.complete() && !t.blocked_witness;
  if (!t.blocked_witness) return false;
  const Vertex b = *t.blocked_witness;
  return b >= 0 && b < s.order() && !s.is_colored(b) && s.available(b) == 0;
}

/// {"k": int, "moves": [{"v": int, "c": int}, ...], "outcome": "ann"|"ben", "blocked": int?}
inline nlohmann::json transcript_to_json(const Transcript& t) {
  nlohmann::json j;
  j["k"] = t.k;
  j["moves"] = nlohmann::json::array();
  for (const Move& m : t.moves) j["moves"].push_back({{"v", m.vertex}, {"c", m.color}});
  j["outcome"] = t.outcome == Outcome::AnnWins ? "ann" : "ben";
  if (t.blocked_witness) j["blocked"] = *t.blocked_witness;
  return j;
}

inline Transcript transcript_from_json(const nlohmann::json& j) {
  Transcript t;
  try {
    t.k = j.at("k").get<int>();
    for (const auto& m : j.at("moves")) t.moves.push_back({m.at("v").get<int>(), m.at("c").get<int>()});
    const auto outcome = j.at("outcome").get<std::string>();
    if (outcome != "ann" && outcome != "ben") throw InputError("transcript outcome must be ann|ben");
    t.outcome = outcome == "ann" ? Outcome::AnnWins : Outcome::BenWins;
    if (j.contains("blocked") && !j["blocked"].is_null()) t.blocked_witness = j["blocked"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed transcript JSON: ") + e.what());
  }
  return t;
}

}  // namespace icol
