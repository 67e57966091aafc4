#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "icol/graph.hpp"
#include "icol/params.hpp"

namespace icol {

namespace detail {

inline bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<Vertex>& map,
                               VertexSet used, const std::vector<Vertex>& order, std::size_t depth) {
  if (depth == order.size()) return true;
  const Vertex v = order[depth];
  for (Vertex w = 0; w < b.order(); ++w) {
    if ((used & bit(w)) || a.degree(v) != b.degree(w)) continue;
    bool consistent = true;
    for (std::size_t i = 0; i < depth && consistent; ++i) {
      consistent = a.adjacent(v, order[i]) == b.adjacent(w, map[order[i]]);
    }
    if (!consistent) continue;
    map[v] = w;
    if (extend_isomorphism(a, b, map, used | bit(w), order, depth + 1)) return true;
  }
  return false;
}

inline std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace detail

/// An isomorphism a -> b as a vertex map, if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                           int bound = DeskBounds{}.isomorphism_max) {
  detail::require_bound(a, bound, "isomorphism");
  detail::require_bound(b, bound, "isomorphism");
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (detail::sorted_degrees(a) != detail::sorted_degrees(b)) return std::nullopt;
  // Visit vertices so each one is as constrained as possible by earlier ones.
  std::vector<Vertex> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < a.order()) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex v = 0; v < a.order(); ++v) {
      if (placed & bit(v)) continue;
      const int links = popcount(a.neighbors(v) & placed) * kMaxOrder + a.degree(v);
      if (links > best_links) {
        best_links = links;
        best = v;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  std::vector<Vertex> map(a.order(), -1);
  if (!detail::extend_isomorphism(a, b, map, 0, order, 0)) return std::nullopt;
  return map;
}

inline bool is_isomorphic(const Graph& a, const Graph& b, int bound = DeskBounds{}.isomorphism_max) {
  return find_isomorphism(a, b, bound).has_value();
}

namespace detail {

// Places vertices one position at a time; position p contributes the bits
// (0,p), (1,p), ..., (p-1,p), i.e. the next graph6 column. Keeps the
// lexicographically largest bit string. Candidates for each position are
// restricted to the first non-exhausted cell of an invariant partition.
struct CanonicalSearch {
  const Graph& g;
  std::vector<int> cell;  // invariant class per vertex, smaller first
  std::vector<Vertex> current;
  std::vector<bool> current_bits;
  std::vector<bool> best_bits;
  std::vector<Vertex> best;

  // Sign of current_bits against the same-length prefix of best_bits.
  int compare_prefix() const {
    if (best.empty()) return 1;
    for (std::size_t i = 0; i < current_bits.size(); ++i) {
      if (current_bits[i] != best_bits[i]) return current_bits[i] ? 1 : -1;
    }
    return 0;
  }

  void run(VertexSet left) {
    const int p = static_cast<int>(current.size());
    if (left == 0) {
      if (compare_prefix() > 0) {
        best = current;
        best_bits = current_bits;
      }
      return;
    }
    int want = kMaxOrder + 1;
    for_each_vertex(left, [&](Vertex v) { want = std::min(want, cell[v]); });
    for_each_vertex(left, [&](Vertex v) {
      if (cell[v] != want) return;
      const std::size_t mark = current_bits.size();
      for (int i = 0; i < p; ++i) current_bits.push_back(g.adjacent(current[i], v));
      if (compare_prefix() >= 0) {
        current.push_back(v);
        run(left & ~bit(v));
        current.pop_back();
      }
      current_bits.resize(mark);
    });
  }
};

}  // namespace detail

/// Canonical relabeling: isomorphic graphs map to identical graphs.
/// Exponential in the size of the largest invariant cell; desk scale only.
inline Graph canonical_form(const Graph& g, int bound = DeskBounds{}.isomorphism_max) {
  detail::require_bound(g, bound, "canonical form");
  const int n = g.order();
  // Invariant: degree, then the sorted multiset of neighbor degrees.
  std::vector<std::pair<std::vector<int>, Vertex>> keys;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> key{-g.degree(v)};
    std::vector<int> nd;
    for_each_vertex(g.neighbors(v), [&](Vertex w) { nd.push_back(-g.degree(w)); });
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keys.emplace_back(std::move(key), v);
  }
  std::sort(keys.begin(), keys.end());
  detail::CanonicalSearch search{g, std::vector<int>(n, 0), {}, {}, {}, {}};
  int cls = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i > 0 && keys[i].first != keys[i - 1].first) ++cls;
    search.cell[keys[i].second] = cls;
  }
  search.run(g.vertex_set());
  std::vector<Vertex> position(n);
  for (int p = 0; p < n; ++p) position[search.best[p]] = p;
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(position[u], position[v]);
  return b.build();
}

}  // namespace icol
