#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "icol/families.hpp"
#include "icol/graph.hpp"
#include "icol/isomorphism.hpp"

namespace icol {

inline constexpr int kMaxPatternOrder = 6;

/// pattern vertex i -> host vertex embedding[i].
using Embedding = std::vector<Vertex>;

namespace detail {

inline bool extend_embedding(const Graph& host, const Graph& pattern, const std::vector<Vertex>& order,
                             std::size_t depth, Embedding& map, VertexSet used) {
  if (depth == order.size()) return true;
  const Vertex p = order[depth];
  for (Vertex h = 0; h < host.order(); ++h) {
    if (used & bit(h)) continue;
    if (host.degree(h) < pattern.degree(p)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      ok = pattern.adjacent(p, order[i]) == host.adjacent(h, map[order[i]]);
    }
    if (!ok) continue;
    map[p] = h;
    if (extend_embedding(host, pattern, order, depth + 1, map, used | bit(h))) return true;
  }
  map[p] = -1;
  return false;
}

}  // namespace detail

/// First induced copy of `pattern` in `host` (adjacency and non-adjacency
/// both preserved), searching pattern vertices in a connectivity-first order
/// and host vertices ascending.
inline std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern,
                                                 int max_pattern = kMaxPatternOrder) {
  if (pattern.order() > max_pattern) {
    throw SizeBoundError("induced search: pattern order " + std::to_string(pattern.order()) +
                         " exceeds " + std::to_string(max_pattern));
  }
  if (pattern.order() > host.order()) return std::nullopt;
  std::vector<Vertex> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < pattern.order()) {
    Vertex best = -1;
    int score = -1;
    for (Vertex v = 0; v < pattern.order(); ++v) {
      if (placed & bit(v)) continue;
      const int s = popcount(pattern.neighbors(v) & placed) * kMaxOrder + pattern.degree(v);
      if (s > score) {
        score = s;
        best = v;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  Embedding map(pattern.order(), -1);
  if (!detail::extend_embedding(host, pattern, order, 0, map, 0)) return std::nullopt;
  return map;
}

inline bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (static_cast<int>(e.size()) != pattern.order()) return false;
  VertexSet used = 0;
  for (Vertex h : e) {
    if (h < 0 || h >= host.order() || (used & bit(h))) return false;
    used |= bit(h);
  }
  for (Vertex a = 0; a < pattern.order(); ++a) {
    for (Vertex b = a + 1; b < pattern.order(); ++b) {
      if (pattern.adjacent(a, b) != host.adjacent(e[a], e[b])) return false;
    }
  }
  return true;
}

/// One recognizer verdict. The witness is a list of vertex lists whose
/// meaning depends on the tag and the verdict:
///   bipartite                 true: [side A, side B]    false: [odd cycle]
///   complement-of-bipartite   true: [clique A, clique B] false: [odd cycle of the complement]
///   chordal                   true: [perfect elimination order] false: [chordless cycle]
///   complete-multipartite     true: parts               false: [induced K1+K2 as (isolated, a, b)]
///   cograph, triangle-free, free-*   false: [embedding of the forbidden pattern]
struct TagVerdict {
  bool value = false;
  std::vector<std::vector<Vertex>> witness;
};

struct ClassReport {
  std::map<std::string, TagVerdict> tags;

  bool operator[](const std::string& tag) const { return tags.at(tag).value; }
};

/// Forbidden patterns with stable tag suffixes.
inline const std::vector<std::pair<std::string, Graph>>& named_patterns() {
  static const std::vector<std::pair<std::string, Graph>> patterns = {
      {"p5", path_graph(5)},      {"p6", path_graph(6)},     {"c4", cycle_graph(4)},
      {"c5", cycle_graph(5)},     {"c6", cycle_graph(6)},    {"k3", complete_graph(3)},
      {"k4", complete_graph(4)},  {"paw", paw_graph()},      {"kite", kite_graph()},
      {"bull", bull_graph()},     {"dart", dart_graph()},    {"claw", claw_graph()},
      {"co-p5", house_graph()},   {"co-p2up3", co_p2_p3_graph()},
  };
  return patterns;
}

inline const Graph& named_pattern(const std::string& tag) {
  for (const auto& [name, g] : named_patterns()) {
    if (name == tag) return g;
  }
  throw InputError("unknown pattern tag '" + tag + "'");
}

namespace detail {

// Vertices on the BFS tree path from v up to the root.
inline std::vector<Vertex> tree_path(const std::vector<Vertex>& parent, Vertex v) {
  std::vector<Vertex> out{v};
  while (parent[v] != v) {
    v = parent[v];
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// 2-coloring by BFS; on failure returns an odd cycle.
inline TagVerdict check_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    parent[s] = s;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w = 0; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          parent[w] = v;
          q.push(w);
        } else if (side[w] == side[v]) {
          // Close the cycle through the lowest common ancestor.
          auto pv = detail::tree_path(parent, v);
          auto pw = detail::tree_path(parent, w);
          while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
            pv.pop_back();
            pw.pop_back();
          }
          std::vector<Vertex> cycle(pv.begin(), pv.end());
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.push_back(*it);
          return {false, {cycle}};
        }
      }
    }
  }
  TagVerdict t{true, {{}, {}}};
  for (Vertex v = 0; v < n; ++v) t.witness[side[v]].push_back(v);
  return t;
}

/// Maximum cardinality search; the reverse visit order is a perfect
/// elimination order iff the graph is chordal. On failure returns a
/// chordless cycle of length >= 4.
inline TagVerdict check_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<Vertex> visit;
  VertexSet done = 0;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!(done & bit(v)) && (best == -1 || weight[v] > weight[best])) best = v;
    }
    visit.push_back(best);
    done |= bit(best);
    for_each_vertex(g.neighbors(best) & ~done, [&](Vertex w) { ++weight[w]; });
  }
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  bool perfect = true;
  for (int i = 0; i < n && perfect; ++i) {
    const Vertex v = peo[i];
    VertexSet later = 0;
    for_each_vertex(g.neighbors(v), [&](Vertex w) {
      if (pos[w] > i) later |= bit(w);
    });
    for_each_vertex(later, [&](Vertex a) {
      if ((later & ~bit(a) & ~g.neighbors(a)) != 0) perfect = false;
    });
  }
  if (perfect) return {true, {peo}};
  // Hole: v with nonadjacent neighbors u, w joined by a path avoiding the
  // rest of N[v]; a shortest such path closes a chordless cycle.
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet nv = g.neighbors(v);
    for (Vertex u = 0; u < n; ++u) {
      if (!(nv & bit(u))) continue;
      for (Vertex w = u + 1; w < n; ++w) {
        if (!(nv & bit(w)) || g.adjacent(u, w)) continue;
        const VertexSet allowed = (g.vertex_set() & ~(nv | bit(v))) | bit(u) | bit(w);
        std::vector<Vertex> parent(n, -1);
        parent[u] = u;
        std::queue<Vertex> q;
        q.push(u);
        while (!q.empty() && parent[w] == -1) {
          const Vertex x = q.front();
          q.pop();
          for_each_vertex(g.neighbors(x) & allowed, [&](Vertex y) {
            if (parent[y] == -1) {
              parent[y] = x;
              q.push(y);
            }
          });
        }
        if (parent[w] == -1) continue;
        std::vector<Vertex> cycle{v};
        auto path = detail::tree_path(parent, w);  // w ... u
        std::reverse(path.begin(), path.end());
        cycle.insert(cycle.end(), path.begin(), path.end());
        return {false, {cycle}};
      }
    }
  }
  throw std::logic_error("chordality check: no perfect order and no hole");
}

/// Complete multipartite iff the complement is a disjoint union of cliques,
/// i.e. the graph has no induced K1 + K2.
inline TagVerdict check_complete_multipartite(const Graph& g) {
  const Graph co = complement(g);
  std::vector<std::vector<Vertex>> parts;
  for (VertexSet comp : components(co)) {
    std::vector<Vertex> part;
    for_each_vertex(comp, [&](Vertex v) { part.push_back(v); });
    parts.push_back(part);
  }
  static const Graph k1_k2 = disjoint_union(empty_graph(1), complete_graph(2));
  if (auto e = contains_induced(g, k1_k2)) return {false, {*e}};
  return {true, parts};
}

inline TagVerdict check_free(const Graph& g, const Graph& pattern) {
  if (auto e = contains_induced(g, pattern)) return {false, {*e}};
  return {true, {}};
}

/// Structural tags plus one "free-<pattern>" tag per named pattern.
inline ClassReport classify(const Graph& g) {
  ClassReport r;
  r.tags["bipartite"] = check_bipartite(g);
  r.tags["chordal"] = check_chordal(g);
  r.tags["cograph"] = check_free(g, path_graph(4));
  r.tags["complement-of-bipartite"] = check_bipartite(complement(g));
  r.tags["complete-multipartite"] = check_complete_multipartite(g);
  r.tags["triangle-free"] = check_free(g, complete_graph(3));
  for (const auto& [name, pattern] : named_patterns()) r.tags["free-" + name] = check_free(g, pattern);
  return r;
}

/// Re-checks a witness against the graph; true iff it certifies the verdict.
inline bool verify_tag(const Graph& g, const std::string& tag, const TagVerdict& t) {
  auto is_cycle = [&](const Graph& h, const std::vector<Vertex>& c, bool need_odd, bool need_chordless) {
    const std::size_t len = c.size();
    if (len < 3 || (need_odd && len % 2 == 0)) return false;
    VertexSet seen = 0;
    for (Vertex v : c) {
      if (v < 0 || v >= h.order() || (seen & bit(v))) return false;
      seen |= bit(v);
    }
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
        if (consecutive && !h.adjacent(c[i], c[j])) return false;
        if (!consecutive && need_chordless && h.adjacent(c[i], c[j])) return false;
      }
    }
    return true;
  };
  auto is_independent = [&](const Graph& h, const std::vector<Vertex>& s) {
    for (Vertex a : s) {
      for (Vertex b : s) {
        if (h.adjacent(a, b)) return false;
      }
    }
    return true;
  };
  auto covers_once = [&](const std::vector<std::vector<Vertex>>& parts) {
    VertexSet seen = 0;
    for (const auto& p : parts) {
      for (Vertex v : p) {
        if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
        seen |= bit(v);
      }
    }
    return seen == g.vertex_set();
  };
  if (tag == "bipartite" || tag == "complement-of-bipartite") {
    const Graph h = tag == "bipartite" ? g : complement(g);
    if (!t.value) return t.witness.size() == 1 && is_cycle(h, t.witness[0], true, false);
    return t.witness.size() == 2 && covers_once(t.witness) && is_independent(h, t.witness[0]) &&
           is_independent(h, t.witness[1]);
  }
  if (tag == "chordal") {
    if (!t.value) return t.witness.size() == 1 && t.witness[0].size() >= 4 && is_cycle(g, t.witness[0], false, true);
    if (t.witness.size() != 1 || !covers_once(t.witness)) return false;
    const auto& order = t.witness[0];
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::vector<Vertex> later;
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (g.adjacent(order[i], order[j])) later.push_back(order[j]);
      }
      for (Vertex a : later) {
        for (Vertex b : later) {
          if (a != b && !g.adjacent(a, b)) return false;
        }
      }
    }
    return true;
  }
  if (tag == "complete-multipartite") {
    if (!t.value) {
      static const Graph k1_k2 = disjoint_union(empty_graph(1), complete_graph(2));
      return t.witness.size() == 1 && is_induced_embedding(g, k1_k2, t.witness[0]);
    }
    if (!covers_once(t.witness)) return false;
    for (std::size_t i = 0; i < t.witness.size(); ++i) {
      if (!is_independent(g, t.witness[i])) return false;
      for (std::size_t j = i + 1; j < t.witness.size(); ++j) {
        for (Vertex a : t.witness[i]) {
          for (Vertex b : t.witness[j]) {
            if (!g.adjacent(a, b)) return false;
          }
        }
      }
    }
    return true;
  }
  const Graph* pattern = nullptr;
  Graph storage;
  if (tag == "cograph") {
    storage = path_graph(4);
  } else if (tag == "triangle-free") {
    storage = complete_graph(3);
  } else if (tag.starts_with("free-")) {
    storage = named_pattern(tag.substr(5));
  } else {
    throw InputError("unknown tag '" + tag + "'");
  }
  pattern = &storage;
  if (t.value) return t.witness.empty() && !contains_induced(g, *pattern);
  return t.witness.size() == 1 && is_induced_embedding(g, *pattern, t.witness[0]);
}

/// If the true-twin quotient of g is a C5, the twin classes in cycle order
/// (so g ≅ 𝕂[C5](sizes of the classes)).
inline std::optional<std::vector<std::vector<Vertex>>> complete_c5_expansion_classes(const Graph& g) {
  std::vector<std::vector<Vertex>> classes;
  std::vector<VertexSet> closed;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet nv = g.neighbors(v) | bit(v);
    auto it = std::find(closed.begin(), closed.end(), nv);
    if (it == closed.end()) {
      closed.push_back(nv);
      classes.push_back({v});
    } else {
      classes[it - closed.begin()].push_back(v);
    }
  }
  if (classes.size() != 5) return std::nullopt;
  VertexSet reps = 0;
  for (const auto& c : classes) reps |= bit(c.front());
  const Graph quotient = g.induced(reps);
  const auto iso = find_isomorphism(cycle_graph(5), quotient);
  if (!iso) return std::nullopt;
  // quotient vertex i is classes[i] (reps ascending == class order here).
  std::vector<std::pair<Vertex, int>> by_rep;
  for (std::size_t i = 0; i < classes.size(); ++i) by_rep.emplace_back(classes[i].front(), static_cast<int>(i));
  std::sort(by_rep.begin(), by_rep.end());
  std::vector<std::vector<Vertex>> ordered;
  for (Vertex c = 0; c < 5; ++c) ordered.push_back(classes[by_rep[(*iso)[c]].second]);
  return ordered;
}

/// Which clauses of the family list admit a graph.
struct FamilyReport {
  std::vector<std::string> admitted;
  std::map<std::string, bool> clauses;
  bool member() const { return !admitted.empty(); }
};

/// Clause names, in listing order.
inline const std::vector<std::string>& family_clauses() {
  static const std::vector<std::string> names = {
      "bipartite",
      "chordal",
      "cograph",
      "p5-k3-free",
      "p5-paw-free",
      "complement-of-bipartite",
      "p5-k4-kite-bull-free",
      "connected-p6-c5-co-p5-claw-free-with-c6",
      "complete-expansion-of-c5",
      "p5-c4-free",
      "connected-p5-co-p2up3-co-p5-dart-free-with-c5",
  };
  return names;
}

namespace detail {

inline std::map<std::string, bool> evaluate_clauses(const Graph& g, const ClassReport& c) {
  std::map<std::string, bool> out;
  auto free = [&](std::initializer_list<const char*> pats) {
    return std::all_of(pats.begin(), pats.end(), [&](const char* p) { return c[std::string("free-") + p]; });
  };
  out["bipartite"] = c["bipartite"];
  out["chordal"] = c["chordal"];
  out["cograph"] = c["cograph"];
  out["p5-k3-free"] = free({"p5", "k3"});
  out["p5-paw-free"] = free({"p5", "paw"});
  out["complement-of-bipartite"] = c["complement-of-bipartite"];
  out["p5-k4-kite-bull-free"] = free({"p5", "k4", "kite", "bull"});
  out["connected-p6-c5-co-p5-claw-free-with-c6"] =
      free({"p6", "c5", "co-p5", "claw"}) && !c["free-c6"];
  out["complete-expansion-of-c5"] = complete_c5_expansion_classes(g).has_value();
  out["p5-c4-free"] = free({"p5", "c4"});
  out["connected-p5-co-p2up3-co-p5-dart-free-with-c5"] =
      free({"p5", "co-p2up3", "co-p5", "dart"}) && !c["free-c5"];
  return out;
}

inline bool connectivity_qualified(const std::string& clause) {
  return clause.starts_with("connected-") || clause == "complete-expansion-of-c5";
}

}  // namespace detail

/// Evaluates every clause. Clauses that speak of connected graphs (and the
/// 𝕂[C5] shape) admit a disconnected graph when every component is admitted
/// by some clause and at least one component by this one.
inline FamilyReport family_membership_F(const Graph& g) {
  FamilyReport r;
  const auto comps = components(g);
  const bool connected = comps.size() <= 1;
  r.clauses = detail::evaluate_clauses(g, classify(g));
  if (!connected) {
    std::vector<std::map<std::string, bool>> per;
    bool all_members = true;
    for (VertexSet comp : comps) {
      const Graph part = g.induced(comp).without_labels();
      FamilyReport pr = family_membership_F(part);
      all_members = all_members && pr.member();
      per.push_back(pr.clauses);
    }
    for (const auto& clause : family_clauses()) {
      if (!detail::connectivity_qualified(clause)) continue;
      bool some = false;
      for (const auto& p : per) some = some || p.at(clause);
      r.clauses[clause] = all_members && some;
    }
  }
  for (const auto& clause : family_clauses()) {
    if (r.clauses[clause]) r.admitted.push_back(clause);
  }
  return r;
}

enum class PatternShape { Tree, Cycle, CoPath };

/// Classifies a closure-check pattern; nullopt if it is none of the shapes.
inline std::optional<PatternShape> closure_pattern_shape(const Graph& p) {
  const int n = p.order();
  const auto m = static_cast<int>(p.size());
  if (n >= 3 && is_connected(p) && m == n - 1) return PatternShape::Tree;
  if (n >= 4 && is_connected(p)) {
    bool two_regular = true;
    for (Vertex v = 0; v < n; ++v) two_regular = two_regular && p.degree(v) == 2;
    if (two_regular) return PatternShape::Cycle;
  }
  if (n >= 4) {
    const Graph co = complement(p);
    if (is_connected(co) && static_cast<int>(co.size()) == n - 1) {
      bool path = true;
      for (Vertex v = 0; v < n; ++v) path = path && co.degree(v) <= 2;
      if (path) return PatternShape::CoPath;
    }
  }
  return std::nullopt;
}

struct ClosureVerdict {
  bool closed = true;
  Graph expanded;
  std::optional<Embedding> counterexample;
};

/// Builds 𝕂[G](sizes) for a pattern-free G and searches it for the pattern.
/// Input problems (pattern shape, G containing the pattern, sizes) throw
/// InputError; a found copy is reported as a counterexample.
inline ClosureVerdict expansion_closure_check(const Graph& g, const Graph& pattern,
                                              std::span<const int> sizes) {
  if (!closure_pattern_shape(pattern)) {
    throw InputError("closure check needs a tree on >= 3 vertices, a cycle C_l (l >= 4) or a co-path (t >= 4)");
  }
  if (contains_induced(g, pattern)) throw InputError("closure check: base graph already contains the pattern");
  ClosureVerdict v;
  v.expanded = complete_expansion(g, sizes);
  v.counterexample = contains_induced(v.expanded, pattern);
  v.closed = !v.counterexample.has_value();
  return v;
}

/// {"tags": {tag: {"value": bool, "witness": [[int]]}}, "family": {"member": bool, "admitted": [clause], "clauses": {clause: bool}}}
inline nlohmann::json class_report_to_json(const ClassReport& c, const FamilyReport& f) {
  nlohmann::json j;
  j["tags"] = nlohmann::json::object();
  for (const auto& [tag, t] : c.tags) j["tags"][tag] = {{"value", t.value}, {"witness", t.witness}};
  j["family"] = {{"member", f.member()}, {"admitted", f.admitted}, {"clauses", f.clauses}};
  return j;
}

}  // namespace icol
