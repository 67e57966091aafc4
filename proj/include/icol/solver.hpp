#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "icol/game.hpp"
#include "icol/graph.hpp"
#include "icol/params.hpp"

namespace icol {

/// Hard ceiling for the exact solver (memo keys pack 4 bits per vertex).
inline constexpr int kSolverMaxOrder = 15;

struct Limits {
  std::uint64_t max_states = 200'000'000;
  std::int64_t max_millis = 30 * 60 * 1000;
  int max_vertices = 12;

  void validate() const {
    if (max_states == 0 || max_millis <= 0 || max_vertices <= 0) {
      throw InputError("limits must be positive");
    }
    if (max_vertices > kSolverMaxOrder) {
      throw InputError("max_vertices cannot exceed " + std::to_string(kSolverMaxOrder));
    }
  }
};

enum class GameValue { AnnWins, BenWins, ResourceLimit };

inline const char* to_string(GameValue v) {
  switch (v) {
    case GameValue::AnnWins: return "ann";
    case GameValue::BenWins: return "ben";
    case GameValue::ResourceLimit: return "limit";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t states = 0;
  std::uint64_t memo_hits = 0;
  double millis = 0.0;
};

struct Verdict {
  GameValue outcome = GameValue::ResourceLimit;
  SearchStats stats;
};

/// Thrown by policies and queries that cannot finish within their limits.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact minimax solver for the indicated coloring game on one graph and
/// one palette size.
///
/// A position (Ann to move, no block vertex) is Ann-winning iff it is fully
/// colored, or some uncolored vertex has every proper reply leading to an
/// Ann-winning position. Replies that create a block vertex lose for Ann on
/// the spot. Positions are memoized up to renaming of colors, and Ben's
/// replies are reduced to the used colors plus one fresh color.
///
/// Not thread-safe; wrap in a lock to share.
class GameSolver {
 public:
  GameSolver(const Graph& g, int k, Limits limits = {}) : n_(g.order()), k_(k), limits_(limits) {
    limits_.validate();
    if (n_ > limits_.max_vertices) {
      throw SizeBoundError("solver: order " + std::to_string(n_) + " exceeds max_vertices " +
                           std::to_string(limits_.max_vertices));
    }
    if (k < 1 || k > kMaxColors) throw InputError("palette size out of range");
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    all_ = all_vertices(n_);
    full_ = full_palette(k_);
  }

  int order() const { return n_; }
  int k() const { return k_; }
  const SearchStats& stats() const { return stats_; }

  /// Value of the game from the empty coloring.
  Verdict solve() {
    reset_board();
    return run([&] { return search(); });
  }

  /// Value from an arbitrary proper position with Ann to move; nullopt when
  /// a limit is hit.
  std::optional<bool> ann_wins_from(const GameState& s) {
    load(s);
    if (has_block()) return false;
    const Verdict v = run([&] { return search(); });
    if (v.outcome == GameValue::ResourceLimit) return std::nullopt;
    return v.outcome == GameValue::AnnWins;
  }

  /// A vertex whose every proper reply keeps the position Ann-winning, if
  /// one exists. Throws ResourceLimitError on a limit.
  std::optional<Vertex> winning_vertex(const GameState& s) {
    load(s);
    if (has_block() || uncolored_ == 0) return std::nullopt;
    std::optional<Vertex> found;
    const Verdict v = run([&] {
      for (Vertex cand : candidates()) {
        if (vertex_wins(cand)) {
          found = cand;
          return true;
        }
        if (aborted_) return false;
      }
      return false;
    });
    if (v.outcome == GameValue::ResourceLimit) throw ResourceLimitError("solver limits reached");
    return found;
  }

  /// Vertices in the order the search tries them at this position.
  std::vector<Vertex> candidate_order(const GameState& s) {
    load(s);
    return candidates();
  }

 private:
  using Key = std::uint64_t;

  template <typename Fn>
  Verdict run(Fn&& body) {
    aborted_ = false;
    started_ = std::chrono::steady_clock::now();
    const auto before = stats_;
    const bool win = body();
    Verdict v;
    v.stats.states = stats_.states - before.states;
    v.stats.memo_hits = stats_.memo_hits - before.memo_hits;
    v.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started_).count();
    stats_.millis += v.stats.millis;
    v.outcome = aborted_ ? GameValue::ResourceLimit : (win ? GameValue::AnnWins : GameValue::BenWins);
    return v;
  }

  void reset_board() {
    color_.fill(0);
    for (auto& row : count_) row.fill(0);
    seen_.fill(0);
    uncolored_ = all_;
    used_ = 0;
  }

  // Internal colors are renumbered by first appearance in vertex order.
  void load(const GameState& s) {
    if (s.order() != n_ || s.k() != k_) throw InputError("state does not match solver graph/palette");
    reset_board();
    const auto colors = normalize_colors(s.colors());
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != 0) assign(v, colors[v]);
    }
    used_ = 0;
    for (Vertex v = 0; v < n_; ++v) used_ = std::max(used_, colors[v]);
  }

  void assign(Vertex v, Color c) {
    color_[v] = static_cast<std::uint8_t>(c);
    uncolored_ &= ~bit(v);
    for_each_vertex(adj_[v], [&](Vertex w) {
      if (count_[w][c]++ == 0) seen_[w] |= color_bit(c);
    });
  }

  void unassign(Vertex v) {
    const Color c = color_[v];
    color_[v] = 0;
    uncolored_ |= bit(v);
    for_each_vertex(adj_[v], [&](Vertex w) {
      if (--count_[w][c] == 0) seen_[w] &= ~color_bit(c);
    });
  }

  bool blocked(Vertex v) const { return (seen_[v] & full_) == full_; }

  bool has_block() const {
    bool any = false;
    for_each_vertex(uncolored_, [&](Vertex v) { any = any || blocked(v); });
    return any;
  }

  int available_count(Vertex v) const { return popcount(full_ & ~seen_[v]); }

  Key key() const {
    std::array<std::uint8_t, kMaxColors + 1> rename{};
    std::uint8_t next = 1;
    Key out = 0;
    for (Vertex v = 0; v < n_; ++v) {
      const int c = color_[v];
      std::uint8_t r = 0;
      if (c != 0) {
        if (rename[c] == 0) rename[c] = next++;
        r = rename[c];
      }
      out |= static_cast<Key>(r) << (4 * v);
    }
    return out;
  }

  // Ann wins regardless of play if the uncolored vertices can be peeled off
  // one at a time, each with more available colors than uncolored neighbors
  // left behind: present them in reverse peel order.
  bool trivially_won() const {
    VertexSet rest = uncolored_;
    bool progress = true;
    while (rest != 0 && progress) {
      progress = false;
      VertexSet scan = rest;
      while (scan != 0) {
        const Vertex v = std::countr_zero(scan);
        scan &= scan - 1;
        if (available_count(v) > popcount(adj_[v] & rest)) {
          rest &= ~bit(v);
          progress = true;
        }
      }
    }
    return rest == 0;
  }

  // Most constrained first, then most uncolored neighbors, then lowest id.
  std::vector<Vertex> candidates() const {
    std::vector<Vertex> out;
    for_each_vertex(uncolored_, [&](Vertex v) { out.push_back(v); });
    std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
      const int fa = available_count(a);
      const int fb = available_count(b);
      if (fa != fb) return fa < fb;
      return popcount(adj_[a] & uncolored_) > popcount(adj_[b] & uncolored_);
    });
    return out;
  }

  bool limit_hit() {
    if (aborted_) return true;
    if (stats_.states >= limits_.max_states) {
      aborted_ = true;
    } else if ((stats_.states & 0xFFF) == 0) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started_)
                          .count();
      if (ms >= limits_.max_millis) aborted_ = true;
    }
    return aborted_;
  }

  // Every reduced proper reply at v keeps Ann winning.
  bool vertex_wins(Vertex v) {
    const Palette avail = full_ & ~seen_[v];
    const int saved_used = used_;
    Palette replies = avail & full_palette(used_);
    if (used_ < k_) replies |= color_bit(used_ + 1);
    while (replies != 0) {
      const Color c = std::countr_zero(replies) + 1;
      replies &= replies - 1;
      assign(v, c);
      used_ = std::max(used_, c);
      bool ok = true;
      for_each_vertex(adj_[v] & uncolored_, [&](Vertex w) { ok = ok && !blocked(w); });
      if (ok) ok = search();
      unassign(v);
      used_ = saved_used;
      if (!ok || aborted_) return false;
    }
    return true;
  }

  bool search() {
    if (uncolored_ == 0) return true;
    const Key key = this->key();
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    ++stats_.states;
    if (limit_hit()) return false;
    bool win = trivially_won();
    if (!win) {
      for (Vertex v : candidates()) {
        if (vertex_wins(v)) {
          win = true;
          break;
        }
        if (aborted_) return false;
      }
    }
    if (aborted_) return false;
    memo_.emplace(key, win);
    return win;
  }

  int n_;
  int k_;
  Limits limits_;
  std::array<VertexSet, kSolverMaxOrder> adj_{};
  VertexSet all_ = 0;
  Palette full_ = 0;

  std::array<std::uint8_t, kSolverMaxOrder> color_{};
  std::array<std::array<std::uint8_t, kMaxColors + 1>, kSolverMaxOrder> count_{};
  std::array<Palette, kSolverMaxOrder> seen_{};
  VertexSet uncolored_ = 0;
  int used_ = 0;

  std::unordered_map<Key, bool> memo_;
  SearchStats stats_;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point started_;
};

/// Whether Ann wins on G with k colors.
inline Verdict ann_wins(const Graph& g, int k, const Limits& limits = {}) {
  if (k < 1) throw InputError("palette size must be >= 1");
  GameSolver solver(g, k, limits);
  return solver.solve();
}

struct IndicatedReport {
  int chi = 0;
  int col = 0;
  int k_min = 0;  // first palette size examined (= chi)
  int k_max = 0;
  std::map<int, GameValue> per_k;
  std::vector<int> winning_set;
  std::vector<int> unknown;
  /// Smallest winning k, when every smaller k in range is a known loss.
  std::optional<int> chi_i;
  /// Winning set is a contiguous run of palette sizes (no gaps).
  bool interval = true;
};

/// Solves every k in [χ(G), k_max] independently (default k_max = col(G)).
/// Winning sets are reported as found; upward closure is never assumed.
inline IndicatedReport indicated_chromatic_number(const Graph& g, std::optional<int> k_max = {},
                                                  const Limits& limits = {}) {
  limits.validate();
  if (g.order() > limits.max_vertices) {
    throw SizeBoundError("solver: order " + std::to_string(g.order()) + " exceeds max_vertices " +
                         std::to_string(limits.max_vertices));
  }
  IndicatedReport r;
  r.chi = chromatic_number(g);
  r.col = coloring_number(g);
  r.k_min = r.chi;
  r.k_max = k_max.value_or(r.col);
  bool all_lower_lost = true;
  for (int k = r.k_min; k <= r.k_max; ++k) {
    const GameValue v = ann_wins(g, k, limits).outcome;
    r.per_k[k] = v;
    if (v == GameValue::AnnWins) {
      r.winning_set.push_back(k);
      if (all_lower_lost && !r.chi_i) r.chi_i = k;
    } else if (v == GameValue::ResourceLimit) {
      r.unknown.push_back(k);
      all_lower_lost = false;
    }
  }
  for (std::size_t i = 1; i < r.winning_set.size(); ++i) {
    for (int k = r.winning_set[i - 1] + 1; k < r.winning_set[i]; ++k) {
      if (r.per_k[k] == GameValue::BenWins) r.interval = false;
    }
  }
  return r;
}

namespace detail {

// One solver per palette size, created on demand and shared by copies of a
// policy. Queries are serialized.
class SolverCache {
 public:
  SolverCache(Graph g, Limits limits) : graph_(std::move(g)), limits_(limits) {}

  template <typename Fn>
  auto with(int k, Fn&& fn) {
    std::lock_guard lock(mu_);
    auto& slot = solvers_[k];
    if (!slot) slot = std::make_unique<GameSolver>(graph_, k, limits_);
    return fn(*slot);
  }

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
  Limits limits_;
  std::mutex mu_;
  std::map<int, std::unique_ptr<GameSolver>> solvers_;
};

inline void require_same_graph(const Graph& g, const GameState& s, Side side) {
  if (!(s.graph() == g)) throw PolicyError(side, "queried on a different graph");
}

}  // namespace detail

/// Ann policy that always presents a winning vertex when one exists. Works
/// for any palette size by solving that palette on demand; from a lost
/// position it falls back to the solver's first candidate.
inline StrategyPolicy solver_ann(const Graph& g, const Limits& limits = {}) {
  auto cache = std::make_shared<detail::SolverCache>(g, limits);
  return StrategyPolicy::ann("optimal", [cache](const GameState& s) {
    detail::require_same_graph(cache->graph(), s, Side::Ann);
    return cache->with(s.k(), [&](GameSolver& solver) {
      if (auto v = solver.winning_vertex(s)) return *v;
      return solver.candidate_order(s).front();
    });
  });
}

/// Ann's winning policy for G with k colors; fails unless Ann wins.
inline StrategyPolicy extract_policy(const Graph& g, int k, const Limits& limits = {}) {
  const Verdict v = ann_wins(g, k, limits);
  if (v.outcome == GameValue::ResourceLimit) {
    throw ResourceLimitError("cannot extract a policy: solver limits reached");
  }
  if (v.outcome != GameValue::AnnWins) {
    throw InputError("cannot extract an Ann policy: Ben wins with k=" + std::to_string(k));
  }
  return solver_ann(g, limits);
}

/// Reduced Ben replies at v: colors already used anywhere, plus the lowest
/// unused color, restricted to those proper at v; ascending.
inline std::vector<Color> reduced_replies(const GameState& s, Vertex v) {
  Palette used = 0;
  for (Color c : s.colors()) {
    if (c != 0) used |= color_bit(c);
  }
  Palette replies = s.available(v) & used;
  const Palette fresh = full_palette(s.k()) & ~used;
  if (fresh != 0) replies |= fresh & (~fresh + 1);
  return palette_colors(replies);
}

}  // namespace icol
