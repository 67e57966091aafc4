#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "icol/graph.hpp"

namespace icol {

// Vertex numbering per family:
//   path      0-1-...-(n-1)
//   cycle     path plus (n-1)-0
//   complete multipartite  parts occupy consecutive id ranges in the given order
//   star      center 0, leaves 1..t
//   paw       triangle 0,1,2; pendant 3 on 0
//   kite      diamond with spine 0-1 and tips 2,3; pendant 4 on tip 2
//   dart      same diamond; pendant 4 on spine vertex 0
//   bull      triangle 0,1,2; pendants 3 on 1 and 4 on 2
//   claw      star with t = 3
//   house     complement of P5 (P5 numbered as a path)
//   co-p2up3  complement of P2 ∪ P3 (P2 is 0-1, P3 is 2-3-4)

inline Graph path_graph(int n) {
  if (n < 1) throw InputError("P_n needs n >= 1");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("C_n needs n >= 3");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

inline Graph complete_graph(int n) {
  if (n < 1) throw InputError("K_n needs n >= 1");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  }
  return b.build();
}

inline Graph empty_graph(int n) {
  if (n < 1) throw InputError("empty graph needs n >= 1");
  return GraphBuilder(n).build();
}

inline Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw InputError("complete multipartite graph needs at least one part");
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw InputError("complete multipartite part sizes must be >= 1");
    for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
    n += parts[p];
  }
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) b.add_edge(i, j);
    }
  }
  return b.build();
}

inline Graph star_graph(int leaves) {
  if (leaves < 1) throw InputError("star K_{1,t} needs t >= 1");
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

inline Graph paw_graph() { return build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

inline Graph kite_graph() {
  return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}});
}

inline Graph dart_graph() {
  return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}});
}

inline Graph bull_graph() { return build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}}); }

inline Graph claw_graph() { return star_graph(3); }

inline Graph house_graph() { return complement(path_graph(5)); }

inline Graph co_p2_p3_graph() { return complement(disjoint_union(path_graph(2), path_graph(3))); }

/// Generator by family tag. Tags: "path", "cycle", "complete", "empty",
/// "multipartite", "star", "paw", "kite", "dart", "bull", "claw", "house"
/// (co-P5), "co-p2up3". Single-letter aliases P, C, K, E are accepted; "K"
/// with more than one parameter is complete multipartite.
inline Graph family_generator(std::string_view name, std::span<const int> params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw InputError("family '" + std::string(name) + "' takes " + std::to_string(count) +
                       " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (name == "path" || name == "P") {
    want(1);
    return path_graph(params[0]);
  }
  if (name == "cycle" || name == "C") {
    want(1);
    return cycle_graph(params[0]);
  }
  if (name == "complete" || name == "K") {
    if (params.size() > 1) return complete_multipartite(params);
    want(1);
    return complete_graph(params[0]);
  }
  if (name == "empty" || name == "E") {
    want(1);
    return empty_graph(params[0]);
  }
  if (name == "multipartite") return complete_multipartite(params);
  if (name == "star" || name == "S") {
    want(1);
    return star_graph(params[0]);
  }
  if (name == "paw") return want(0), paw_graph();
  if (name == "kite") return want(0), kite_graph();
  if (name == "dart") return want(0), dart_graph();
  if (name == "bull") return want(0), bull_graph();
  if (name == "claw") return want(0), claw_graph();
  if (name == "house" || name == "co-p5") return want(0), house_graph();
  if (name == "co-p2up3") return want(0), co_p2_p3_graph();
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

inline Graph family_generator(std::string_view name, std::initializer_list<int> params = {}) {
  return family_generator(name, std::span<const int>(params.begin(), params.size()));
}

}  // namespace icol
