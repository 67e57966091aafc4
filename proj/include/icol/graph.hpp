#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icol {

/// Vertex index in [0, n).
using Vertex = int;

/// Bit set over the vertices of one graph; bit v is vertex v.
using VertexSet = std::uint64_t;

/// Hard ceiling on graph order imposed by the bit-set adjacency rows.
inline constexpr int kMaxOrder = 64;

/// Raised for malformed inputs: bad endpoints, bad sizes, unparsable text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact routine is asked to work beyond its configured size bound.
class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

inline int popcount(VertexSet s) { return std::popcount(s); }

inline VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Calls fn(v) for every vertex in s, lowest first.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    const Vertex v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

/// Immutable simple undirected graph.
///
/// Adjacency is stored as one bit row per vertex. Optional per-vertex labels
/// record provenance, e.g. product coordinates "(x,y)". Equality compares
/// structure only; labels are metadata.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  bool empty() const { return adj_.empty(); }

  std::size_t size() const {
    std::size_t twice = 0;
    for (VertexSet row : adj_) twice += static_cast<std::size_t>(popcount(row));
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  VertexSet vertex_set() const { return all_vertices(order()); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u) {
      for_each_vertex(adj_[u] & ~all_vertices(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
      throw InputError("label count " + std::to_string(labels.size()) + " does not match order " +
                       std::to_string(order()));
    }
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  Graph without_labels() const { return with_labels({}); }

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(VertexSet keep) const {
    std::vector<Vertex> index(order(), -1);
    int m = 0;
    for_each_vertex(keep, [&](Vertex v) { index[v] = m++; });
    Graph g;
    g.adj_.assign(m, 0);
    for_each_vertex(keep, [&](Vertex v) {
      for_each_vertex(adj_[v] & keep, [&](Vertex w) { g.adj_[index[v]] |= bit(index[w]); });
    });
    if (has_labels()) {
      for_each_vertex(keep, [&](Vertex v) { g.labels_.push_back(labels_[v]); });
    }
    return g;
  }

  /// Adjacency symmetric, irreflexive and in range.
  bool valid() const {
    const VertexSet all = vertex_set();
    for (Vertex v = 0; v < order(); ++v) {
      if ((adj_[v] & ~all) != 0 || adjacent(v, v)) return false;
      for (Vertex w = 0; w < order(); ++w) {
        if (adjacent(v, w) != adjacent(w, v)) return false;
      }
    }
    return labels_.empty() || static_cast<int>(labels_.size()) == order();
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// Mutable staging area for a Graph; the only way to create one with edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) {
    if (n < 0 || n > kMaxOrder) {
      throw InputError("graph order " + std::to_string(n) + " outside [0, " +
                       std::to_string(kMaxOrder) + "]");
    }
    adj_.assign(n, 0);
  }

  int order() const { return static_cast<int>(adj_.size()); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint out of range for n=" + std::to_string(order()));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    return *this;
  }

  GraphBuilder& set_labels(std::vector<std::string> labels) {
    labels_ = std::move(labels);
    return *this;
  }

  Graph build() const {
    Graph g;
    g.adj_ = adj_;
    return g.with_labels(labels_);
  }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// Graph on n vertices with exactly the given edges; duplicates collapse.
inline Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

inline Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

/// G1 followed by G2 with G2's ids shifted by |V(G1)|; no cross edges.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
  return b.build();
}

/// Row-major coordinate encoding shared by products and expansions.
inline std::string pair_label(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

/// Lexicographic product G[H]. Vertex (x, y) is x*|V(H)| + y, labeled "(x,y)".
inline Graph lexicographic_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) throw InputError("lexicographic product needs nonempty operands");
  const int ng = g.order();
  const int nh = h.order();
  if (ng * nh > kMaxOrder) {
    throw SizeBoundError("product order " + std::to_string(ng * nh) + " exceeds " +
                         std::to_string(kMaxOrder));
  }
  GraphBuilder b(ng * nh);
  std::vector<std::string> labels;
  labels.reserve(ng * nh);
  for (int x = 0; x < ng; ++x) {
    for (int y = 0; y < nh; ++y) labels.push_back(pair_label(x, y));
  }
  for (int x1 = 0; x1 < ng; ++x1) {
    for (int y1 = 0; y1 < nh; ++y1) {
      for (int x2 = 0; x2 < ng; ++x2) {
        for (int y2 = 0; y2 < nh; ++y2) {
          const int a = x1 * nh + y1;
          const int c = x2 * nh + y2;
          if (a >= c) continue;
          if ((x1 == x2 && h.adjacent(y1, y2)) || g.adjacent(x1, x2)) b.add_edge(a, c);
        }
      }
    }
  }
  return b.set_labels(std::move(labels)).build();
}

/// Per-vertex replacement in an expansion.
struct Replacement {
  enum class Kind { Complete, Independent, Explicit };
  Kind kind = Kind::Complete;
  int size = 1;
  Graph graph;  // only for Kind::Explicit

  static Replacement complete(int m) { return {Kind::Complete, m, {}}; }
  static Replacement independent(int m) { return {Kind::Independent, m, {}}; }
  static Replacement of(Graph h) {
    const int m = h.order();
    return {Kind::Explicit, m, std::move(h)};
  }
};

struct ExpansionSpec {
  Graph base;
  std::vector<Replacement> replacements;
};

/// Expansion G(H_1, ..., H_n). Block V_i holds H_i's vertices contiguously in
/// base order; member j of block i is labeled "(i,j)".
inline Graph expansion(const ExpansionSpec& spec) {
  const int n = spec.base.order();
  if (static_cast<int>(spec.replacements.size()) != n) {
    throw InputError("expansion has " + std::to_string(spec.replacements.size()) +
                     " replacements for a base of order " + std::to_string(n));
  }
  std::vector<int> start(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const auto& r = spec.replacements[i];
    if (r.size < 1) throw InputError("expansion block " + std::to_string(i) + " has size < 1");
    start[i + 1] = start[i] + r.size;
  }
  if (start[n] > kMaxOrder) {
    throw SizeBoundError("expansion order " + std::to_string(start[n]) + " exceeds " +
                         std::to_string(kMaxOrder));
  }
  GraphBuilder b(start[n]);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    const auto& r = spec.replacements[i];
    for (int j = 0; j < r.size; ++j) labels.push_back(pair_label(i, j));
    for (int a = 0; a < r.size; ++a) {
      for (int c = a + 1; c < r.size; ++c) {
        const bool inside = r.kind == Replacement::Kind::Complete ||
                            (r.kind == Replacement::Kind::Explicit && r.graph.adjacent(a, c));
        if (inside) b.add_edge(start[i] + a, start[i] + c);
      }
    }
  }
  for (auto [u, v] : spec.base.edges()) {
    for (int a = start[u]; a < start[u + 1]; ++a) {
      for (int c = start[v]; c < start[v + 1]; ++c) b.add_edge(a, c);
    }
  }
  return b.set_labels(std::move(labels)).build();
}

/// 𝕂[G](m_1, ..., m_n): every vertex replaced by a clique.
inline Graph complete_expansion(const Graph& base, std::span<const int> sizes) {
  ExpansionSpec spec{base, {}};
  for (int m : sizes) spec.replacements.push_back(Replacement::complete(m));
  return expansion(spec);
}

/// 𝕀[G](m_1, ..., m_n): every vertex replaced by an independent set.
inline Graph independent_expansion(const Graph& base, std::span<const int> sizes) {
  ExpansionSpec spec{base, {}};
  for (int m : sizes) spec.replacements.push_back(Replacement::independent(m));
  return expansion(spec);
}

inline Graph complete_expansion(const Graph& base, std::initializer_list<int> sizes) {
  return complete_expansion(base, std::span<const int>(sizes.begin(), sizes.size()));
}

inline Graph independent_expansion(const Graph& base, std::initializer_list<int> sizes) {
  return independent_expansion(base, std::span<const int>(sizes.begin(), sizes.size()));
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen & bit(s)) continue;
    VertexSet comp = bit(s);
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

}  // namespace icol
