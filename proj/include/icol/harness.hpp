#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "icol/corpus.hpp"
#include "icol/expr.hpp"
#include "icol/families.hpp"
#include "icol/graph.hpp"
#include "icol/io.hpp"
#include "icol/isomorphism.hpp"
#include "icol/params.hpp"
#include "icol/recognizers.hpp"
#include "icol/solver.hpp"
#include "icol/strategies.hpp"

namespace icol {

enum class CaseStatus { Pass, Fail, SkipLimit };

inline const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::SkipLimit: return "skip-limit";
  }
  return "?";
}

struct CaseResult {
  std::string name;
  std::string expected;
  std::string observed;
  CaseStatus status = CaseStatus::Pass;
  /// Research-notable but not a failure (non-interval winning sets).
  bool flagged = false;
  double millis = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  int count(CaseStatus s) const {
    int c = 0;
    for (const auto& r : cases) c += r.status == s;
    return c;
  }
  int flagged() const {
    int c = 0;
    for (const auto& r : cases) c += r.flagged;
    return c;
  }
  bool ok() const { return count(CaseStatus::Fail) == 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  Limits limits;
  /// Corpus file contents; empty means the built-in corpus.
  std::vector<std::string> corpus_lines;
  /// Record wall time per case. Off by default so reports are byte-stable.
  bool timing = false;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "col-bound", "col-gap",  "reduction", "union",  "f-family",
      "bipartite-expansion", "complement-duality", "closure", "lift", "monotonicity-audit",
  };
  return names;
}

namespace harness {

/// Deterministic generator; maps draws with modulo so reports match across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline Graph random_graph(Rng& rng, int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin()) b.add_edge(u, v);
    }
  }
  return b.build();
}

inline std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::string set_text(const std::vector<int>& xs) { return "{" + join(xs) + "}"; }

inline std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw InputError("bad size list '" + text + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad size list '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty size list");
  return out;
}

struct CorpusEntry {
  std::string text;
  std::vector<std::string> fields;
};

inline std::vector<CorpusEntry> corpus_entries(const std::vector<std::string>& lines,
                                               std::size_t arity) {
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    CorpusEntry e;
    std::string f;
    while (ss >> f) e.fields.push_back(f);
    if (e.fields.empty()) continue;
    if (e.fields.size() != arity) {
      throw InputError("malformed corpus line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(arity) + " field(s)");
    }
    for (std::size_t j = 0; j < e.fields.size(); ++j) e.text += (j ? " " : "") + e.fields[j];
    out.push_back(std::move(e));
  }
  return out;
}

inline Graph graph_field(const std::string& text) { return read_graph_arg(text).graph.without_labels(); }

/// Named built-in graphs for default corpora.
inline Graph g(const std::string& expr) { return parse_graph_expression(expr).graph.without_labels(); }

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline void require_solvable(const Graph& graph, const Limits& limits, const std::string& what) {
  if (graph.order() > limits.max_vertices) {
    throw InputError("corpus entry " + what + " has " + std::to_string(graph.order()) +
                     " vertices, above max_vertices " + std::to_string(limits.max_vertices));
  }
}

// Timed case wrapper. ResourceLimitError turns into skip-limit.
template <typename Fn>
CaseResult timed_case(const SuiteOptions& opt, std::string name, std::string expected, Fn&& body) {
  CaseResult r;
  r.name = std::move(name);
  r.expected = std::move(expected);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const ResourceLimitError& e) {
    r.status = CaseStatus::SkipLimit;
    r.observed = std::string("limit: ") + e.what();
  }
  if (opt.timing) {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return r;
}

inline GameValue solve(const Graph& graph, int k, const Limits& limits) {
  const GameValue v = ann_wins(graph, k, limits).outcome;
  if (v == GameValue::ResourceLimit) throw ResourceLimitError("k=" + std::to_string(k));
  return v;
}

inline IndicatedReport solve_range(const Graph& graph, const Limits& limits, std::optional<int> k_max = {}) {
  IndicatedReport r = indicated_chromatic_number(graph, k_max, limits);
  if (!r.unknown.empty()) throw ResourceLimitError("palette sizes " + set_text(r.unknown));
  return r;
}

// ---------------------------------------------------------------- suites

inline std::vector<std::pair<NamedGraph, NamedGraph>> pairs_from(const SuiteOptions& opt,
                                                                 const std::vector<std::pair<std::string, std::string>>& defaults) {
  std::vector<std::pair<NamedGraph, NamedGraph>> out;
  if (opt.corpus_lines.empty()) {
    for (const auto& [a, b] : defaults) out.push_back({{a, g(a)}, {b, g(b)}});
  } else {
    for (const auto& e : corpus_entries(opt.corpus_lines, 2)) {
      out.push_back({{e.fields[0], graph_field(e.fields[0])}, {e.fields[1], graph_field(e.fields[1])}});
    }
  }
  return out;
}

inline SuiteReport col_bound(const SuiteOptions& opt) {
  SuiteReport rep{"col-bound", opt.seed, {}};
  const auto pairs = pairs_from(opt, {{"P2", "P2"}, {"P3", "P2"}, {"P4", "P2"}, {"C5", "P2"}, {"P2", "P3"}, {"K3", "P2"}});
  for (const auto& [gg, hh] : pairs) {
    const Graph product = lexicographic_product(gg.graph, hh.graph);
    require_solvable(product, opt.limits, gg.name + "[" + hh.name + "]");
    const int k = coloring_number(gg.graph) * coloring_number(hh.graph);
    rep.cases.push_back(timed_case(opt, gg.name + "[" + hh.name + "] k=" + std::to_string(k),
                                   "ann wins; product-col beats every Ben line", [&](CaseResult& r) {
      const GameValue v = solve(product, k, opt.limits);
      const PolicyAudit audit = audit_ann_policy(product, k, product_col_ann(gg.graph, hh.graph));
      r.observed = std::string(to_string(v)) + " wins; product-col " +
                   (audit.ann_wins_all ? "wins all " : "loses a line of ") + std::to_string(audit.lines) +
                   " lines";
      r.status = v == GameValue::AnnWins && audit.ann_wins_all ? CaseStatus::Pass : CaseStatus::Fail;
    }));
  }
  return rep;
}

/// Densest core of the min-degree peeling: the subgraph H' with
/// δ(H') = col(H) - 1.
inline Graph densest_core(const Graph& h) {
  VertexSet alive = h.vertex_set();
  VertexSet best = alive;
  int best_delta = -1;
  while (alive != 0) {
    Vertex pick = -1;
    int d = kMaxOrder + 1;
    for_each_vertex(alive, [&](Vertex v) {
      const int dv = popcount(h.neighbors(v) & alive);
      if (dv < d) {
        d = dv;
        pick = v;
      }
    });
    if (d > best_delta) {
      best_delta = d;
      best = alive;
    }
    alive &= ~bit(pick);
  }
  return h.induced(best).without_labels();
}

inline SuiteReport col_gap(const SuiteOptions& opt) {
  SuiteReport rep{"col-gap", opt.seed, {}};
  const auto pairs = pairs_from(opt, {{"K2", "C5"}, {"K3", "C5"}, {"K4", "C5"}});
  std::vector<int> gaps;
  for (const auto& [gg, hh] : pairs) {
    const Graph core = densest_core(hh.graph);
    const int col_g = coloring_number(gg.graph);
    const int col_h = coloring_number(hh.graph);
    const int bound = (col_g - 1) * (core.order() - 1 - degree_stats(core).min_degree);
    rep.cases.push_back(timed_case(opt, gg.name + "[" + hh.name + "]", "gap >= " + std::to_string(bound),
                                   [&](CaseResult& r) {
      const int gap = coloring_number(lexicographic_product(gg.graph, hh.graph)) - col_g * col_h;
      gaps.push_back(gap);
      r.observed = "gap = " + std::to_string(gap);
      r.status = gap >= bound ? CaseStatus::Pass : CaseStatus::Fail;
    }));
  }
  rep.cases.push_back(timed_case(opt, "family growth", "strictly increasing", [&](CaseResult& r) {
    bool rising = true;
    for (std::size_t i = 1; i < gaps.size(); ++i) rising = rising && gaps[i] > gaps[i - 1];
    r.observed = "gaps " + join(gaps, " ");
    r.status = rising ? CaseStatus::Pass : CaseStatus::Fail;
  }));
  return rep;
}

inline SuiteReport reduction(const SuiteOptions& opt) {
  SuiteReport rep{"reduction", opt.seed, {}};
  std::vector<std::pair<std::string, std::string>> defaults;
  for (const char* a : {"P3", "P4", "K3", "Paw", "C5"}) {
    for (const char* b : {"P2", "P3", "C4"}) {
      if (g(a).order() * g(b).order() <= opt.limits.max_vertices) defaults.emplace_back(a, b);
    }
  }
  for (const auto& [gg, hh] : pairs_from(opt, defaults)) {
    const int ell = chromatic_number(hh.graph);
    const Graph product = lexicographic_product(gg.graph, hh.graph);
    const Graph clique_product = lexicographic_product(gg.graph, complete_graph(ell));
    require_solvable(product, opt.limits, gg.name + "[" + hh.name + "]");
    const std::string label = gg.name + "[" + hh.name + "]";
    rep.cases.push_back(timed_case(opt, label + " precondition", "chi(H) = chi_i(H) = " + std::to_string(ell),
                                   [&](CaseResult& r) {
      const auto hr = solve_range(hh.graph, opt.limits);
      r.observed = "chi_i(H) = " + (hr.chi_i ? std::to_string(*hr.chi_i) : std::string("?"));
      r.status = hr.chi_i == ell ? CaseStatus::Pass : CaseStatus::Fail;
    }));
    const int lo = chromatic_number(clique_product);
    const int hi = coloring_number(gg.graph) * coloring_number(hh.graph);
    for (int k = lo; k <= hi; ++k) {
      rep.cases.push_back(timed_case(opt, label + " k=" + std::to_string(k),
                                     "same value as " + gg.name + "[K" + std::to_string(ell) + "]",
                                     [&](CaseResult& r) {
        const GameValue a = solve(product, k, opt.limits);
        const GameValue b = solve(clique_product, k, opt.limits);
        r.observed = std::string("G[H] ") + to_string(a) + ", G[K] " + to_string(b);
        r.status = a == b ? CaseStatus::Pass : CaseStatus::Fail;
      }));
    }
  }
  return rep;
}

inline SuiteReport union_suite(const SuiteOptions& opt) {
  SuiteReport rep{"union", opt.seed, {}};
  const auto pairs = pairs_from(opt, {{"P2", "C5"}, {"K3", "C5"}, {"P4", "C5"}, {"C4", "K4"}, {"Paw", "P3"},
                                      {"C5", "C5"}, {"K3", "P4"}, {"Bull", "K2"}, {"Claw", "C5"}, {"Kite", "C4"}});
  for (const auto& [a, b] : pairs) {
    const Graph both = disjoint_union(a.graph, b.graph);
    require_solvable(both, opt.limits, a.name + "+" + b.name);
    if (!family_membership_F(a.graph).member() || !family_membership_F(b.graph).member()) {
      throw InputError("union corpus entry " + a.name + " " + b.name + " is not a pair of family members");
    }
    rep.cases.push_back(timed_case(opt, a.name + "+" + b.name, "chi_i = max of parts", [&](CaseResult& r) {
      const auto ra = solve_range(a.graph, opt.limits);
      const auto rb = solve_range(b.graph, opt.limits);
      const auto ru = solve_range(both, opt.limits);
      const int want = std::max(ra.chi_i.value_or(-1), rb.chi_i.value_or(-1));
      r.expected = "chi_i = " + std::to_string(want);
      r.observed = "chi_i = " + (ru.chi_i ? std::to_string(*ru.chi_i) : std::string("none"));
      r.status = ru.chi_i == want ? CaseStatus::Pass : CaseStatus::Fail;
    }));
  }
  return rep;
}

inline std::vector<NamedGraph> graphs_from(const SuiteOptions& opt, int default_max_n) {
  std::vector<NamedGraph> out;
  if (opt.corpus_lines.empty()) {
    for (Graph& gr : connected_graphs_up_to(default_max_n)) out.push_back({encode_graph6(gr), std::move(gr)});
  } else {
    for (const auto& e : corpus_entries(opt.corpus_lines, 1)) out.push_back({e.fields[0], graph_field(e.fields[0])});
  }
  return out;
}

inline SuiteReport f_family(const SuiteOptions& opt) {
  SuiteReport rep{"f-family", opt.seed, {}};
  for (const auto& [name, graph] : graphs_from(opt, 7)) {
    const FamilyReport fam = family_membership_F(graph);
    if (!fam.member()) continue;
    require_solvable(graph, opt.limits, name);
    rep.cases.push_back(timed_case(opt, name + " via " + fam.admitted.front(), "", [&](CaseResult& r) {
      const auto ir = solve_range(graph, opt.limits);
      std::vector<int> whole;
      for (int k = ir.chi; k <= ir.col; ++k) whole.push_back(k);
      r.expected = "winning set " + set_text(whole);
      r.observed = "winning set " + set_text(ir.winning_set);
      r.status = ir.winning_set == whole ? CaseStatus::Pass : CaseStatus::Fail;
    }));
  }
  return rep;
}

inline SuiteReport bipartite_expansion(const SuiteOptions& opt) {
  SuiteReport rep{"bipartite-expansion", opt.seed, {}};
  std::vector<std::pair<NamedGraph, int>> items;
  if (opt.corpus_lines.empty()) {
    for (const char* name : {"P2", "P3", "P4", "C4"}) items.push_back({{name, g(name)}, 2});
    for (const char* name : {"P2", "P3"}) items.push_back({{name, g(name)}, 3});
  } else {
    for (const auto& e : corpus_entries(opt.corpus_lines, 2)) {
      items.push_back({{e.fields[0], graph_field(e.fields[0])}, parse_sizes(e.fields[1]).front()});
    }
  }
  for (const auto& [gg, m] : items) {
    if (!check_bipartite(gg.graph).value) throw InputError("bipartite-expansion corpus entry " + gg.name + " is not bipartite");
    const std::vector<int> sizes(gg.graph.order(), m);
    const Graph expanded = complete_expansion(gg.graph, sizes);
    require_solvable(expanded, opt.limits, gg.name);
    rep.cases.push_back(timed_case(opt, "K[" + gg.name + "](" + join(sizes) + ")",
                                   "chi_i = chi = " + std::to_string(2 * m), [&](CaseResult& r) {
      const auto ir = solve_range(expanded, opt.limits);
      r.observed = "chi_i = " + (ir.chi_i ? std::to_string(*ir.chi_i) : std::string("none")) +
                   ", chi = " + std::to_string(ir.chi);
      r.status = ir.chi_i == 2 * m && ir.chi == 2 * m ? CaseStatus::Pass : CaseStatus::Fail;
    }));
  }
  return rep;
}

inline SuiteReport complement_duality(const SuiteOptions& opt) {
  SuiteReport rep{"complement-duality", opt.seed, {}};
  std::vector<std::pair<NamedGraph, std::vector<int>>> items;
  if (opt.corpus_lines.empty()) {
    Rng rng(opt.seed);
    for (int t = 0; t < 50; ++t) {
      const Graph base = random_graph(rng, rng.between(1, 5));
      std::vector<int> sizes(base.order());
      for (int& m : sizes) m = rng.between(1, 2);
      items.push_back({{encode_graph6(base), base}, sizes});
    }
  } else {
    for (const auto& e : corpus_entries(opt.corpus_lines, 2)) {
      items.push_back({{e.fields[0], graph_field(e.fields[0])}, parse_sizes(e.fields[1])});
    }
  }
  int index = 0;
  for (const auto& [gg, sizes] : items) {
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "#%02d ", index++);
    rep.cases.push_back(timed_case(opt, prefix + gg.name + " (" + join(sizes) + ")", "isomorphic",
                                   [&](CaseResult& r) {
      const Graph lhs = complement(independent_expansion(gg.graph, sizes));
      const Graph rhs = complete_expansion(complement(gg.graph), sizes);
      const bool iso = is_isomorphic(lhs, rhs);
      r.observed = iso ? "isomorphic" : "not isomorphic";
      r.status = iso ? CaseStatus::Pass : CaseStatus::Fail;
    }));
  }
  return rep;
}

inline const std::vector<NamedGraph>& closure_patterns() {
  static const std::vector<NamedGraph> patterns = {
      {"P3", path_graph(3)},     {"P4", path_graph(4)},     {"P5", path_graph(5)},
      {"claw", claw_graph()},    {"S4", star_graph(4)},
      {"chair", build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}})},
      {"C4", cycle_graph(4)},    {"C5", cycle_graph(5)},    {"C6", cycle_graph(6)},
      {"house", house_graph()},  {"co-P6", complement(path_graph(6))},
  };
  return patterns;
}

inline SuiteReport closure(const SuiteOptions& opt) {
  SuiteReport rep{"closure", opt.seed, {}};
  struct Trial {
    std::string name;
    Graph base;
    Graph pattern;
    std::vector<int> sizes;
  };
  std::vector<Trial> trials;
  if (opt.corpus_lines.empty()) {
    Rng rng(opt.seed);
    const auto& pats = closure_patterns();
    while (trials.size() < 200) {
      const NamedGraph& p = pats[rng.below(static_cast<int>(pats.size()))];
      Graph base;
      bool found = false;
      for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        base = random_graph(rng, rng.between(3, 7));
        found = !contains_induced(base, p.graph);
      }
      if (!found) continue;
      std::vector<int> sizes(base.order());
      for (int& m : sizes) m = rng.between(1, 3);
      trials.push_back({p.name + " in K[" + encode_graph6(base) + "](" + join(sizes) + ")", base, p.graph, sizes});
    }
  } else {
    for (const auto& e : corpus_entries(opt.corpus_lines, 3)) {
      trials.push_back({e.text, graph_field(e.fields[0]), graph_field(e.fields[1]), parse_sizes(e.fields[2])});
    }
  }
  int index = 0;
  for (const auto& t : trials) {
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "#%03d ", index++);
    rep.cases.push_back(timed_case(opt, prefix + t.name, "no induced copy", [&](CaseResult& r) {
      const ClosureVerdict v = expansion_closure_check(t.base, t.pattern, t.sizes);
      r.observed = v.closed ? "no induced copy" : "counterexample at " + join(*v.counterexample);
      r.status = v.closed ? CaseStatus::Pass : CaseStatus::Fail;
    }));
  }
  return rep;
}

inline SuiteReport lift(const SuiteOptions& opt) {
  SuiteReport rep{"lift", opt.seed, {}};
  struct Item {
    std::string name;
    Graph base;
    std::vector<int> independent;
    std::vector<int> cliques;  // one per vertex of 𝕀[base]
  };
  std::vector<Item> items;
  if (opt.corpus_lines.empty()) {
    Rng rng(opt.seed);
    const std::vector<std::string> bases = {"P2", "P3", "K3", "P4", "C4", "Paw"};
    while (items.size() < 24) {
      const std::string& name = bases[items.size() % bases.size()];
      const Graph base = g(name);
      std::vector<int> ind(base.order());
      for (int& s : ind) s = rng.between(1, 2);
      int total_ind = 0;
      for (int s : ind) total_ind += s;
      std::vector<int> cl(total_ind);
      int total = 0;
      for (int& c : cl) total += (c = rng.between(1, 2));
      if (total > opt.limits.max_vertices) continue;
      items.push_back({name, base, ind, cl});
    }
  } else {
    for (const auto& e : corpus_entries(opt.corpus_lines, 3)) {
      items.push_back({e.fields[0], graph_field(e.fields[0]), parse_sizes(e.fields[1]), parse_sizes(e.fields[2])});
    }
  }
  for (const auto& it : items) {
    const Graph inner = independent_expansion(it.base, it.independent);
    if (static_cast<int>(it.cliques.size()) != inner.order()) {
      throw InputError("lift corpus entry " + it.name + ": clique sizes must match the independent expansion");
    }
    const Graph lifted = complete_expansion(inner, it.cliques);
    // Largest clique replacing a member of each block V_i.
    std::vector<int> widest(it.base.order(), 0);
    int at = 0;
    for (int i = 0; i < it.base.order(); ++i) {
      for (int j = 0; j < it.independent[i]; ++j) widest[i] = std::max(widest[i], it.cliques[at++]);
    }
    const Graph core = complete_expansion(it.base, widest);
    require_solvable(lifted, opt.limits, it.name);
    const int lo = chromatic_number(lifted);
    const int hi = coloring_number(lifted);
    const std::string label = "K[I[" + it.name + "](" + join(it.independent) + ")](" + join(it.cliques) + ")";
    for (int k = lo; k <= hi; ++k) {
      rep.cases.push_back(timed_case(opt, label + " k=" + std::to_string(k),
                                     "ann wins whenever K[" + it.name + "](" + join(widest) + ") does",
                                     [&](CaseResult& r) {
        const GameValue base_value = solve(core, k, opt.limits);
        const GameValue lifted_value = solve(lifted, k, opt.limits);
        r.observed = std::string("K[G] ") + to_string(base_value) + ", K[I[G]] " + to_string(lifted_value);
        const bool holds = base_value != GameValue::AnnWins || lifted_value == GameValue::AnnWins;
        r.status = holds ? CaseStatus::Pass : CaseStatus::Fail;
      }));
    }
  }
  return rep;
}

inline SuiteReport monotonicity_audit(const SuiteOptions& opt) {
  SuiteReport rep{"monotonicity-audit", opt.seed, {}};
  for (const auto& [name, graph] : graphs_from(opt, 6)) {
    require_solvable(graph, opt.limits, name);
    rep.cases.push_back(timed_case(opt, name, "interval", [&](CaseResult& r) {
      const auto ir = solve_range(graph, opt.limits);
      r.observed = "winning set " + set_text(ir.winning_set) + " in [" + std::to_string(ir.k_min) + "," +
                   std::to_string(ir.k_max) + "]";
      if (!ir.interval) {
        r.flagged = true;
        r.observed += " NON-INTERVAL";
      }
      r.status = CaseStatus::Pass;
    }));
  }
  return rep;
}

}  // namespace harness

/// Runs one named suite. Throws InputError on an unknown suite or a
/// malformed corpus.
inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {}) {
  opt.limits.validate();
  using Runner = SuiteReport (*)(const SuiteOptions&);
  static const std::map<std::string, Runner> runners = {
      {"col-bound", harness::col_bound},
      {"col-gap", harness::col_gap},
      {"reduction", harness::reduction},
      {"union", harness::union_suite},
      {"f-family", harness::f_family},
      {"bipartite-expansion", harness::bipartite_expansion},
      {"complement-duality", harness::complement_duality},
      {"closure", harness::closure},
      {"lift", harness::lift},
      {"monotonicity-audit", harness::monotonicity_audit},
  };
  auto it = runners.find(name);
  if (it == runners.end()) throw InputError("unknown suite '" + name + "'");
  return it->second(opt);
}

inline nlohmann::json report_to_json(const SuiteReport& rep) {
  nlohmann::json j;
  j["suite"] = rep.suite;
  j["seed"] = rep.seed;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : rep.cases) {
    nlohmann::json cj{{"case", c.name}, {"expected", c.expected}, {"observed", c.observed},
                      {"status", to_string(c.status)}, {"millis", c.millis}};
    if (c.flagged) cj["flagged"] = true;
    j["cases"].push_back(std::move(cj));
  }
  j["summary"] = {{"pass", rep.count(CaseStatus::Pass)},
                  {"fail", rep.count(CaseStatus::Fail)},
                  {"skip-limit", rep.count(CaseStatus::SkipLimit)},
                  {"flagged", rep.flagged()}};
  return j;
}

namespace harness {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace harness

/// CSV with columns suite, case, expected, observed, status, millis.
inline std::string report_to_csv(const SuiteReport& rep, bool header = true) {
  std::ostringstream out;
  if (header) out << "suite,case,expected,observed,status,millis\n";
  for (const auto& c : rep.cases) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", c.millis);
    out << harness::csv_field(rep.suite) << ',' << harness::csv_field(c.name) << ','
        << harness::csv_field(c.expected) << ',' << harness::csv_field(c.observed) << ','
        << to_string(c.status) << ',' << ms << '\n';
  }
  return out.str();
}

}  // namespace icol
