#pragma once

#include <set>
#include <string>
#include <vector>

#include "icol/graph.hpp"
#include "icol/io.hpp"
#include "icol/isomorphism.hpp"

namespace icol {

/// All graphs on exactly n vertices up to isomorphism, in canonical form,
/// sorted by graph6. Built by adding one vertex in every possible way to
/// each graph on n-1 vertices. n <= 8.
inline std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 8) throw SizeBoundError("graph enumeration supports 1 <= n <= 8");
  if (n == 1) return {GraphBuilder(1).build()};
  std::set<std::string> seen;
  for (const Graph& smaller : all_graphs(n - 1)) {
    const auto edges = smaller.edges();
    for (VertexSet attach = 0; attach < (VertexSet{1} << (n - 1)); ++attach) {
      GraphBuilder b(n);
      for (auto [u, v] : edges) b.add_edge(u, v);
      for_each_vertex(attach, [&](Vertex v) { b.add_edge(v, n - 1); });
      seen.insert(encode_graph6(canonical_form(b.build())));
    }
  }
  std::vector<Graph> out;
  for (const auto& code : seen) out.push_back(decode_graph6(code));
  return out;
}

/// Connected graphs on 1..max_n vertices up to isomorphism, by order then graph6.
inline std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& g : all_graphs(n)) {
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace icol
