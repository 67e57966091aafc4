#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "icol/graph.hpp"

namespace icol {

// graph6, short form only (n <= 62). Bits of the upper triangle are taken
// column by column: (0,1), (0,2), (1,2), (0,3), ... and packed big-endian
// into 6-bit groups, each offset by 63.

inline constexpr int kGraph6MaxOrder = 62;

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw SizeBoundError("graph6 short form supports n <= 62, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph decode_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw InputError("graph6: character out of range");
  }
  if (text[0] == 126) throw InputError("graph6: only the short form (n <= 62) is supported");
  const int n = text[0] - 63;
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bit_count + 5) / 6;
  if (text.size() != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) + " characters for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int last = text.back() - 63;
    if ((last & ((1 << (6 - bit_count % 6)) - 1)) != 0) {
      throw InputError("graph6: nonzero padding bits");
    }
  }
  return b.build();
}

/// {"n": int, "edges": [[u,v],...], "labels": [...]?} with u < v, sorted.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw InputError("graph JSON needs an integer field 'n'");
  }
  GraphBuilder b(j["n"].get<int>());
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("graph JSON 'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw InputError("graph JSON edges must be [u, v] integer pairs");
      }
      b.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  }
  if (j.contains("labels")) b.set_labels(j["labels"].get<std::vector<std::string>>());
  return b.build();
}

}  // namespace icol
