#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "icol/graph.hpp"

namespace icol {

/// Size bounds for the exact exponential routines. Exceeding one is an error.
struct DeskBounds {
  int clique_max = 32;
  int chromatic_max = 32;
  int isomorphism_max = 12;
};

namespace detail {

inline void require_nonempty(const Graph& g, const char* what) {
  if (g.empty()) throw InputError(std::string(what) + " is undefined on the empty graph");
}

inline void require_bound(const Graph& g, int bound, const char* what) {
  if (g.order() > bound) {
    throw SizeBoundError(std::string(what) + ": order " + std::to_string(g.order()) +
                         " exceeds the configured bound " + std::to_string(bound));
  }
}

struct Peeling {
  std::vector<Vertex> removal;  // removal order
  int degeneracy = 0;
};

// Repeatedly removes a minimum-degree vertex, lowest index on ties.
inline Peeling peel(const Graph& g) {
  Peeling p;
  VertexSet alive = g.vertex_set();
  while (alive != 0) {
    Vertex best = -1;
    int best_deg = kMaxOrder + 1;
    for_each_vertex(alive, [&](Vertex v) {
      const int d = popcount(g.neighbors(v) & alive);
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    });
    p.degeneracy = std::max(p.degeneracy, best_deg);
    p.removal.push_back(best);
    alive &= ~bit(best);
  }
  return p;
}

}  // namespace detail

/// Ordering x_1..x_n whose back degrees are all at most the degeneracy:
/// the min-degree peeling sequence, reversed.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
  detail::require_nonempty(g, "degeneracy order");
  auto order = detail::peel(g).removal;
  std::reverse(order.begin(), order.end());
  return order;
}

/// col(G) = 1 + degeneracy.
inline int coloring_number(const Graph& g) {
  detail::require_nonempty(g, "coloring number");
  return 1 + detail::peel(g).degeneracy;
}

/// Largest number of earlier neighbors over the ordering.
inline int max_back_degree(const Graph& g, std::span<const Vertex> order) {
  VertexSet before = 0;
  int worst = 0;
  for (Vertex v : order) {
    worst = std::max(worst, popcount(g.neighbors(v) & before));
    before |= bit(v);
  }
  return worst;
}

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
};

inline DegreeStats degree_stats(const Graph& g) {
  detail::require_nonempty(g, "degree stats");
  DegreeStats s{kMaxOrder, 0};
  for (Vertex v = 0; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  return s;
}

namespace detail {

inline void grow_clique(const Graph& g, VertexSet candidates, int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + popcount(candidates) <= best) return;
  // Branch on vertices outside the neighborhood of a max-degree pivot.
  Vertex pivot = -1;
  int pivot_deg = -1;
  for_each_vertex(candidates, [&](Vertex v) {
    const int d = popcount(g.neighbors(v) & candidates);
    if (d > pivot_deg) {
      pivot_deg = d;
      pivot = v;
    }
  });
  VertexSet branch = candidates & ~g.neighbors(pivot);
  while (branch != 0) {
    const Vertex v = std::countr_zero(branch);
    branch &= branch - 1;
    grow_clique(g, candidates & g.neighbors(v), size + 1, best);
    candidates &= ~bit(v);
    if (size + popcount(candidates) <= best) return;
  }
}

inline bool extend_coloring(const Graph& g, int k, std::vector<int>& color, int colored,
                            int used) {
  const int n = g.order();
  if (colored == n) return true;
  // DSATUR: most distinct neighbor colors, then highest degree.
  Vertex pick = -1;
  int pick_sat = -1;
  int pick_deg = -1;
  std::uint64_t pick_mask = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (color[v] != 0) continue;
    std::uint64_t mask = 0;
    for_each_vertex(g.neighbors(v), [&](Vertex w) {
      if (color[w] != 0) mask |= std::uint64_t{1} << (color[w] - 1);
    });
    const int sat = std::popcount(mask);
    if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = g.degree(v);
      pick_mask = mask;
    }
  }
  const int top = std::min(k, used + 1);
  for (int c = 1; c <= top; ++c) {
    if (pick_mask & (std::uint64_t{1} << (c - 1))) continue;
    color[pick] = c;
    if (extend_coloring(g, k, color, colored + 1, std::max(used, c))) return true;
  }
  color[pick] = 0;
  return false;
}

}  // namespace detail

/// ω(G), exact.
inline int clique_number(const Graph& g, const DeskBounds& bounds = {}) {
  detail::require_nonempty(g, "clique number");
  detail::require_bound(g, bounds.clique_max, "clique number");
  int best = 0;
  detail::grow_clique(g, g.vertex_set(), 0, best);
  return best;
}

/// Whether G has a proper coloring with k colors.
inline bool is_k_colorable(const Graph& g, int k) {
  if (g.empty()) return true;
  if (k <= 0) return false;
  std::vector<int> color(g.order(), 0);
  return detail::extend_coloring(g, k, color, 0, 0);
}

/// χ(G), exact: searches k upward from ω(G); col(G) always succeeds.
inline int chromatic_number(const Graph& g, const DeskBounds& bounds = {}) {
  detail::require_nonempty(g, "chromatic number");
  detail::require_bound(g, bounds.chromatic_max, "chromatic number");
  const int upper = coloring_number(g);
  for (int k = clique_number(g, bounds); k < upper; ++k) {
    if (is_k_colorable(g, k)) return k;
  }
  return upper;
}

struct ParamReport {
  int delta = 0;  // min degree
  int Delta = 0;  // max degree
  int omega = 0;
  int chi = 0;
  int col = 0;
};

inline ParamReport parameters(const Graph& g, const DeskBounds& bounds = {}) {
  const auto d = degree_stats(g);
  return {d.min_degree, d.max_degree, clique_number(g, bounds), chromatic_number(g, bounds),
          coloring_number(g)};
}

}  // namespace icol
