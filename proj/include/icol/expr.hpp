#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "icol/families.hpp"
#include "icol/graph.hpp"
#include "icol/io.hpp"

namespace icol {

/// A graph together with its factors when it was written as a product G[H].
struct ParsedGraph {
  Graph graph;
  std::optional<std::pair<Graph, Graph>> factors;
};

// Generator expressions:
//
//   expr  := term ('+' term)*                 disjoint union
//   term  := unary ('[' expr ']')*            lexicographic product, left to right
//   unary := '~' unary | atom                 complement
//   atom  := '(' expr ')'
//          | ('K' | 'I') '[' expr ']' '(' int (',' int)* ')'   complete / independent expansion
//          | name
//   name  := P<n> | C<n> | K<n> | K<n1>,<n2>,... | E<n> | S<t>
//          | paw | kite | dart | bull | claw | house | co-p2up3   (case-insensitive)
//
// Examples: "C5", "P3[K2]", "K[P3](2,1,2)", "~I[C5](2,2,2,2,2)", "P3+K3".
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  ParsedGraph parse() {
    ParsedGraph out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("graph expression '" + std::string(text_) + "' at " + std::to_string(pos_) +
                     ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 4) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  ParsedGraph expr() {
    ParsedGraph left = term();
    while (accept('+')) {
      ParsedGraph right = term();
      left = {disjoint_union(left.graph, right.graph), std::nullopt};
    }
    return left;
  }

  ParsedGraph term() {
    ParsedGraph left = unary();
    while (accept('[')) {
      ParsedGraph inner = expr();
      expect(']');
      left = {lexicographic_product(left.graph, inner.graph),
              std::make_pair(left.graph.without_labels(), inner.graph.without_labels())};
    }
    return left;
  }

  ParsedGraph unary() {
    if (accept('~')) return {complement(unary().graph), std::nullopt};
    return atom();
  }

  ParsedGraph atom() {
    skip_space();
    if (accept('(')) {
      ParsedGraph inner = expr();
      expect(')');
      return inner;
    }
    if (pos_ + 1 < text_.size() && (text_[pos_] == 'K' || text_[pos_] == 'I') && text_[pos_ + 1] == '[') {
      const bool complete = text_[pos_] == 'K';
      pos_ += 2;
      Graph base = expr().graph;
      expect(']');
      expect('(');
      std::vector<int> sizes{integer()};
      while (accept(',')) sizes.push_back(integer());
      expect(')');
      return {complete ? complete_expansion(base, sizes) : independent_expansion(base, sizes), std::nullopt};
    }
    return {named(), std::nullopt};
  }

  Graph named() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      ++pos_;
    }
    std::string word(text_.substr(start, pos_ - start));
    std::string lower;
    for (char c : word) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "co-p" && text_.substr(pos_).starts_with("2up3")) {
      pos_ += 4;
      return co_p2_p3_graph();
    }
    if (lower == "paw" || lower == "kite" || lower == "dart" || lower == "bull" || lower == "claw" ||
        lower == "house") {
      return family_generator(lower);
    }
    if (word.size() != 1) fail("unknown graph name '" + word + "'");
    std::vector<int> params{integer()};
    if (word == "K") {
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        params.push_back(integer());
      }
    }
    return family_generator(word, params);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline ParsedGraph parse_graph_expression(std::string_view text) { return ExpressionParser(text).parse(); }

/// Resolves a graph argument: a file holding JSON or graph6, "g6:<code>",
/// a generator expression, or a bare graph6 string, tried in that order.
inline ParsedGraph read_graph_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InputError("graph file '" + arg + "' is empty");
    if (content[first] == '{') {
      try {
        return {graph_from_json(nlohmann::json::parse(content)), std::nullopt};
      } catch (const nlohmann::json::exception& e) {
        throw InputError("graph file '" + arg + "': " + e.what());
      }
    }
    const auto end = content.find_first_of("\r\n", first);
    return {decode_graph6(content.substr(first, end - first)), std::nullopt};
  }
  if (arg.starts_with("g6:")) return {decode_graph6(arg.substr(3)), std::nullopt};
  try {
    return parse_graph_expression(arg);
  } catch (const InputError& expr_error) {
    try {
      return {decode_graph6(arg), std::nullopt};
    } catch (const InputError&) {
      throw InputError(std::string(expr_error.what()) + " (and not valid graph6)");
    }
  }
}

}  // namespace icol
