#pragma once

#include "icol/game.hpp"

namespace icol::support {

// Plain minimax over the game tree. No memo, no color symmetry, no
// shortcuts: every uncolored vertex for Ann, every proper color for Ben.
inline bool brute_force_ann_wins(const GameState& s) {
  if (s.complete()) return true;
  bool found = false;
  for_each_vertex(s.uncolored(), [&](Vertex v) {
    if (found) return;
    const Palette avail = s.available(v);
    if (avail == 0) return;
    for (Color c : palette_colors(avail)) {
      const GameState next = s.play({v, c});
      if (blocked_vertices(next) != 0 || !brute_force_ann_wins(next)) return;
    }
    found = true;
  });
  return found;
}

inline bool brute_force_ann_wins(const Graph& g, int k) { return brute_force_ann_wins(GameState(g, k)); }

}  // namespace icol::support
