#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icol/families.hpp"
#include "icol/game.hpp"
#include "icol/graph.hpp"
#include "icol/params.hpp"
#include "icol/solver.hpp"

namespace icol {

/// Coordinates of a vertex of G[H]: copy H_x and layer G_y.
struct ProductCoords {
  Vertex copy = 0;
  Vertex layer = 0;
  friend bool operator==(const ProductCoords&, const ProductCoords&) = default;
};

inline ProductCoords product_coords(Vertex v, int h_order) { return {v / h_order, v % h_order}; }
inline Vertex product_vertex(ProductCoords c, int h_order) { return c.copy * h_order + c.layer; }

/// Presents vertices along degeneracy_order(G), ignoring Ben's replies.
/// Wins for every k >= col(G).
inline StrategyPolicy degeneracy_ann(const Graph& g) {
  auto order = std::make_shared<const std::vector<Vertex>>(degeneracy_order(g));
  const int n = g.order();
  return StrategyPolicy::ann("degeneracy", [order, n](const GameState& s) {
    if (s.order() != n) throw PolicyError(Side::Ann, "degeneracy order built for another graph");
    for (Vertex v : *order) {
      if (!s.is_colored(v)) return v;
    }
    throw PolicyError(Side::Ann, "asked to move on a complete coloring");
  });
}

/// Ann's strategy on G[H] for k >= col(G)col(H).
///
/// Phase 1 walks the copies H_u in degeneracy order of G; inside a copy it
/// presents layers in degeneracy order of H until Ben has used col(H)
/// distinct colors in that copy (or the copy is exhausted). Phase 2 presents
/// everything left, copy by copy in the same orders. The position alone
/// determines the phase, so the policy is a pure function of the coloring.
inline StrategyPolicy product_col_ann(const Graph& g, const Graph& h) {
  struct Plan {
    std::vector<Vertex> copies;
    std::vector<Vertex> layers;
    int col_g = 0;
    int col_h = 0;
    int nh = 0;
  };
  auto plan = std::make_shared<Plan>();
  plan->copies = degeneracy_order(g);
  plan->layers = degeneracy_order(h);
  plan->col_g = coloring_number(g);
  plan->col_h = coloring_number(h);
  plan->nh = h.order();
  const int n = g.order() * h.order();
  return StrategyPolicy::ann("product-col", [plan, n](const GameState& s) -> Vertex {
    if (s.order() != n) throw PolicyError(Side::Ann, "product-col built for another product");
    if (s.k() < plan->col_g * plan->col_h) {
      throw InputError("product-col needs k >= col(G)col(H) = " +
                       std::to_string(plan->col_g * plan->col_h) + ", got " + std::to_string(s.k()));
    }
    auto at = [&](Vertex copy, Vertex layer) { return product_vertex({copy, layer}, plan->nh); };
    for (Vertex u : plan->copies) {
      Palette seen = 0;
      std::optional<Vertex> next;
      for (Vertex y : plan->layers) {
        const Color c = s.color(at(u, y));
        if (c != 0) {
          seen |= color_bit(c);
        } else if (!next) {
          next = at(u, y);
        }
      }
      if (popcount(seen) < plan->col_h && next) return *next;
    }
    for (Vertex u : plan->copies) {
      for (Vertex y : plan->layers) {
        if (!s.is_colored(at(u, y))) return at(u, y);
      }
    }
    throw PolicyError(Side::Ann, "asked to move on a complete coloring");
  });
}

/// Ann's strategy on G[H] built from a strategy for G[K_ℓ] and one for H.
///
/// Each presentation that `outer` makes in G[K_ℓ] into the clique of copy u
/// is realized by presenting vertices of H_u according to `inner` until Ben
/// puts a color new to H_u; that color is then taken as Ben's reply in the
/// simulated G[K_ℓ] game. Once the simulated game is fully colored, the
/// rest of each copy is finished with `inner`, copy by copy, using every
/// color not already on the copy's outside neighbors.
///
/// `inner` sees a copy as a position of H whose colors are renumbered by
/// first appearance in that copy; its palette is ℓ during the simulation and
/// the copy's full available palette afterwards.
inline StrategyPolicy reduction_ann(const Graph& g, const Graph& h, StrategyPolicy outer,
                                   StrategyPolicy inner, int ell) {
  if (ell < 1) throw InputError("reduction needs ℓ >= 1");
  if (outer.side() != Side::Ann || inner.side() != Side::Ann) {
    throw InputError("reduction composes two Ann policies");
  }
  if (chromatic_number(h) != ell) {
    throw InputError("reduction: χ(H) = " + std::to_string(chromatic_number(h)) +
                     " does not match declared ℓ = " + std::to_string(ell));
  }
  struct Parts {
    Graph g;
    Graph h;
    std::shared_ptr<const Graph> g_kl;
    StrategyPolicy outer;
    StrategyPolicy inner;
    int ell;
  };
  auto parts = std::make_shared<Parts>(Parts{g, h,
                                             std::make_shared<const Graph>(lexicographic_product(
                                                 g, complete_graph(ell))),
                                             std::move(outer), std::move(inner), ell});
  const int nh = h.order();
  const int n = g.order() * nh;

  return StrategyPolicy::ann("reduction", [parts, nh, n](const GameState& s) -> Vertex {
    if (s.order() != n) throw PolicyError(Side::Ann, "reduction built for another product");
    const int ng = parts->g.order();
    const int k = s.k();

    // Per-copy view: local moves in order and the colors seen so far.
    std::vector<std::vector<Move>> local(ng);
    std::vector<Palette> copy_colors(ng, 0);
    GameState sim(parts->g_kl, k);
    std::optional<Vertex> pending;

    auto local_state = [&](Vertex u, int palette) {
      std::vector<Color> rename(kMaxColors + 1, 0);
      Color next = 1;
      for (const Move& m : local[u]) {
        if (rename[m.color] == 0) rename[m.color] = next++;
      }
      GameState ls(parts->h, std::max(palette, static_cast<int>(next) - 1));
      for (const Move& m : local[u]) ls = ls.play({m.vertex, rename[m.color]});
      return ls;
    };
    auto advance_sim = [&] {
      if (!pending && !sim.complete()) pending = parts->outer.present(sim);
    };

    for (const Move& m : s.history()) {
      advance_sim();
      const auto [u, y] = product_coords(m.vertex, nh);
      const bool fresh = (copy_colors[u] & color_bit(m.color)) == 0;
      if (pending && *pending / parts->ell == u && fresh) {
        sim = sim.play({*pending, m.color});
        pending.reset();
      }
      local[u].push_back({y, m.color});
      copy_colors[u] |= color_bit(m.color);
    }
    advance_sim();

    if (pending) {
      const Vertex u = *pending / parts->ell;
      const GameState ls = local_state(u, parts->ell);
      if (ls.complete()) throw PolicyError(Side::Ann, "copy exhausted before a new color appeared");
      return product_vertex({u, parts->inner.present(ls)}, nh);
    }
    for (Vertex u = 0; u < ng; ++u) {
      if (static_cast<int>(local[u].size()) == nh) continue;
      Palette outside = 0;
      for_each_vertex(parts->g.neighbors(u), [&](Vertex w) { outside |= copy_colors[w]; });
      const int palette = k - popcount(outside);
      const GameState ls = local_state(u, palette);
      return product_vertex({u, parts->inner.present(ls)}, nh);
    }
    throw PolicyError(Side::Ann, "asked to move on a complete coloring");
  });
}

/// Ben plays a minimax-optimal color: the first reduced reply (used colors
/// plus one fresh color, ascending) after which Ann no longer wins; if there
/// is none, the lowest proper color.
inline StrategyPolicy optimal_ben(const Graph& g, int k, const Limits& limits = {}) {
  auto solver = std::make_shared<GameSolver>(g, k, limits);
  auto mu = std::make_shared<std::mutex>();
  const int n = g.order();
  return StrategyPolicy::ben("optimal", [solver, mu, n, k](const GameState& s, Vertex v) -> Color {
    if (s.order() != n || s.k() != k) throw PolicyError(Side::Ben, "optimal Ben built for another game");
    const auto replies = reduced_replies(s, v);
    if (replies.empty()) throw PolicyError(Side::Ben, "no proper color at the presented vertex");
    std::lock_guard lock(*mu);
    for (Color c : replies) {
      const GameState next = s.play({v, c});
      if (blocked_vertices(next) != 0) return c;
      const auto ann = solver->ann_wins_from(next);
      if (!ann) throw ResourceLimitError("optimal Ben: solver limits reached");
      if (!*ann) return c;
    }
    return palette_colors(s.available(v)).front();
  });
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Greedy Ben: picks the proper color that creates the most block vertices,
/// then the most vertices left with a single available color. Ties go to the
/// lowest color for seed 0; other seeds pick among ties by a hash of the seed
/// and the position, so play stays deterministic per seed.
inline StrategyPolicy heuristic_ben(std::uint64_t seed) {
  return StrategyPolicy::ben("heuristic:" + std::to_string(seed), [seed](const GameState& s, Vertex v) {
    const auto options = palette_colors(s.available(v));
    if (options.empty()) throw PolicyError(Side::Ben, "no proper color at the presented vertex");
    std::vector<Color> best;
    std::pair<int, int> best_score{-1, -1};
    for (Color c : options) {
      const GameState next = s.play({v, c});
      std::pair<int, int> score{0, 0};
      for_each_vertex(next.uncolored(), [&](Vertex w) {
        const int left = popcount(next.available(w));
        if (left == 0) ++score.first;
        if (left == 1) ++score.second;
      });
      if (score > best_score) {
        best_score = score;
        best.clear();
      }
      if (score == best_score) best.push_back(c);
    }
    if (seed == 0 || best.size() == 1) return best.front();
    std::uint64_t h = detail::splitmix64(seed);
    for (const Move& m : s.history()) h = detail::splitmix64(h ^ (static_cast<std::uint64_t>(m.vertex) << 8 | m.color));
    h = detail::splitmix64(h ^ static_cast<std::uint64_t>(v));
    return best[h % best.size()];
  });
}

/// Result of playing a fixed Ann policy against every Ben line.
struct PolicyAudit {
  std::uint64_t lines = 0;
  bool ann_wins_all = true;
  std::optional<Transcript> counterexample;
};

/// Exhaustively plays `ann` against all Ben replies, stopping at the first
/// lost line. With `reduce_colors`, Ben's replies are the used colors plus
/// one fresh color; that is exhaustive for policies that depend on colors
/// only through which vertices share a color (all policies in this header).
inline PolicyAudit audit_ann_policy(const Graph& g, int k, const StrategyPolicy& ann,
                                    bool reduce_colors = true,
                                    std::uint64_t max_lines = 50'000'000) {
  PolicyAudit audit;
  auto lose = [&](const GameState& s, Vertex witness) {
    audit.ann_wins_all = false;
    audit.counterexample = Transcript{s.k(), s.history(), Outcome::BenWins, witness};
  };
  std::function<void(const GameState&)> walk = [&](const GameState& s) {
    if (!audit.ann_wins_all) return;
    if (s.complete()) {
      ++audit.lines;
      return;
    }
    const Vertex v = ann.present(s);
    if (v < 0 || v >= s.order() || s.is_colored(v)) {
      throw PolicyError(Side::Ann, "presented invalid or colored vertex " + std::to_string(v));
    }
    if (s.available(v) == 0) {
      ++audit.lines;
      return lose(s, v);
    }
    const auto replies = reduce_colors ? reduced_replies(s, v) : palette_colors(s.available(v));
    for (Color c : replies) {
      const GameState next = s.play({v, c});
      if (auto b = first_blocked(next)) {
        ++audit.lines;
        return lose(next, *b);
      }
      walk(next);
      if (!audit.ann_wins_all) return;
      if (audit.lines > max_lines) throw ResourceLimitError("policy audit exceeded its line budget");
    }
  };
  walk(GameState(g, k));
  return audit;
}

/// Inputs a named policy may need.
struct PolicyContext {
  Graph graph;
  int k = 0;
  Limits limits;
  /// Factors (G, H) when graph is G[H]; needed by "product-col" and "reduction".
  std::optional<std::pair<Graph, Graph>> factors;
};

/// Names: "degeneracy", "product-col", "reduction", "optimal" (Ann or Ben),
/// "heuristic:<seed>" (Ben).
inline StrategyPolicy make_policy(std::string_view name, Side side, const PolicyContext& ctx) {
  auto need_factors = [&]() -> const std::pair<Graph, Graph>& {
    if (!ctx.factors) throw InputError("policy '" + std::string(name) + "' needs product factors");
    return *ctx.factors;
  };
  if (side == Side::Ann) {
    if (name == "degeneracy") return degeneracy_ann(ctx.graph);
    if (name == "optimal") return solver_ann(ctx.graph, ctx.limits);
    if (name == "product-col") {
      const auto& [g, h] = need_factors();
      return product_col_ann(g, h);
    }
    if (name == "reduction") {
      const auto& [g, h] = need_factors();
      const int ell = chromatic_number(h);
      return reduction_ann(g, h, solver_ann(lexicographic_product(g, complete_graph(ell)), ctx.limits),
                           solver_ann(h, ctx.limits), ell);
    }
  } else {
    if (name == "optimal") return optimal_ben(ctx.graph, ctx.k, ctx.limits);
    if (name.starts_with("heuristic")) {
      std::uint64_t seed = 0;
      if (name.size() > 9) {
        if (name[9] != ':') throw InputError("heuristic policy is named heuristic:<seed>");
        try {
          seed = std::stoull(std::string(name.substr(10)));
        } catch (const std::exception&) {
          throw InputError("bad heuristic seed in '" + std::string(name) + "'");
        }
      }
      return heuristic_ben(seed);
    }
  }
  throw InputError("unknown " + std::string(side == Side::Ann ? "Ann" : "Ben") + " policy '" +
                   std::string(name) + "'");
}

}  // namespace icol
