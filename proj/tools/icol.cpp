#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "icol/corpus.hpp"
#include "icol/expr.hpp"
#include "icol/families.hpp"
#include "icol/game.hpp"
#include "icol/harness.hpp"
#include "icol/http.hpp"
#include "icol/io.hpp"
#include "icol/params.hpp"
#include "icol/recognizers.hpp"
#include "icol/service.hpp"
#include "icol/solver.hpp"
#include "icol/strategies.hpp"

using nlohmann::json;

namespace {

void add_limit_flags(CLI::App* cmd, icol::Limits& limits) {
  cmd->add_option("--max-states", limits.max_states, "solver state budget per palette size");
  cmd->add_option("--max-millis", limits.max_millis, "solver time budget per palette size");
  cmd->add_option("--max-vertices", limits.max_vertices, "largest graph the solver accepts");
}

void emit_graph(const icol::Graph& g, const std::string& format) {
  if (format == "json") {
    std::cout << icol::graph_to_json(g).dump(2) << "\n";
  } else {
    std::cout << icol::encode_graph6(g) << "\n";
  }
}

icol::Graph gen_graph(const std::vector<std::string>& args) {
  if (args.empty()) throw icol::InputError("gen needs a family, product or expansion");
  const std::string& head = args[0];
  if (head == "product") {
    if (args.size() != 3) throw icol::InputError("usage: gen product G H");
    return icol::lexicographic_product(icol::read_graph_arg(args[1]).graph, icol::read_graph_arg(args[2]).graph);
  }
  if (head == "expansion") {
    if (args.size() != 4 || (args[1] != "complete" && args[1] != "independent")) {
      throw icol::InputError("usage: gen expansion complete|independent G m1,m2,...");
    }
    const icol::Graph base = icol::read_graph_arg(args[2]).graph;
    const auto sizes = icol::harness::parse_sizes(args[3]);
    return args[1] == "complete" ? icol::complete_expansion(base, sizes) : icol::independent_expansion(base, sizes);
  }
  if (args.size() == 1) return icol::read_graph_arg(head).graph;
  std::vector<int> params;
  for (std::size_t i = 1; i < args.size(); ++i) {
    for (int p : icol::harness::parse_sizes(args[i])) params.push_back(p);
  }
  return icol::family_generator(head, params);
}

json report_json(const icol::IndicatedReport& r) {
  json per = json::object();
  for (const auto& [k, v] : r.per_k) per[std::to_string(k)] = icol::to_string(v);
  return {{"chi", r.chi},
          {"col", r.col},
          {"k_min", r.k_min},
          {"k_max", r.k_max},
          {"per_k", per},
          {"winning_set", r.winning_set},
          {"unknown", r.unknown},
          {"chi_i", r.chi_i ? json(*r.chi_i) : json(nullptr)},
          {"interval", r.interval}};
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw icol::InputError("cannot read corpus file '" + path + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indicated coloring engine and replay harness"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string format = "g6";
  icol::Limits limits;

  std::vector<std::string> gen_args;
  auto* gen = app.add_subcommand("gen", "emit a generated graph (family, product or expansion)");
  gen->add_option("spec", gen_args, "e.g. 'cycle 5', 'product P3 K2', 'expansion complete C5 2,1,1,1,1', 'P3[C4]'")
      ->required();
  gen->add_option("--format", format, "g6 or json")->check(CLI::IsMember({"g6", "json"}));

  auto* params = app.add_subcommand("params", "print delta, Delta, omega, chi, col");
  params->add_option("graph", graph_arg)->required();

  std::optional<int> kmax;
  auto* chi = app.add_subcommand("chi-i", "solve every palette size from chi to col (or --kmax)");
  chi->add_option("graph", graph_arg)->required();
  chi->add_option("--kmax", kmax);
  add_limit_flags(chi, limits);

  int k = 0;
  std::string ann_name = "optimal";
  std::string ben_name = "optimal";
  std::vector<std::string> factors;
  auto* play = app.add_subcommand("play", "play one game and print the transcript");
  play->add_option("graph", graph_arg)->required();
  play->add_option("-k", k, "palette size")->required();
  play->add_option("--ann", ann_name, "degeneracy | optimal | product-col | reduction");
  play->add_option("--ben", ben_name, "optimal | heuristic[:seed]");
  play->add_option("--factors", factors, "G H when the graph is G[H]")->expected(2);
  add_limit_flags(play, limits);

  auto* recognize = app.add_subcommand("recognize", "classify against the named graph classes");
  recognize->add_option("graph", graph_arg)->required();

  std::string suite;
  std::uint64_t seed = icol::kDefaultSeed;
  std::string corpus_path;
  std::string report_format = "json";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a replay suite ('all' runs every suite)");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_option("--corpus", corpus_path, "replace the built-in corpus");
  verify->add_option("--format", report_format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--timing", timing, "record wall time per case in millis");
  add_limit_flags(verify, limits);

  int port = 8080;
  std::string host = "127.0.0.1";
  int idle_minutes = 30;
  auto* serve = app.add_subcommand("serve", "run the HTTP play service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--idle-minutes", idle_minutes, "evict sessions idle this long");
  add_limit_flags(serve, limits);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      emit_graph(gen_graph(gen_args), format);
    } else if (*params) {
      const auto r = icol::parameters(icol::read_graph_arg(graph_arg).graph);
      std::cout << json{{"delta", r.delta}, {"Delta", r.Delta}, {"omega", r.omega}, {"chi", r.chi}, {"col", r.col}}.dump()
                << "\n";
    } else if (*chi) {
      const auto g = icol::read_graph_arg(graph_arg).graph;
      std::cout << report_json(icol::indicated_chromatic_number(g, kmax, limits)).dump(2) << "\n";
    } else if (*play) {
      auto parsed = icol::read_graph_arg(graph_arg);
      if (!factors.empty()) {
        parsed.factors = {icol::read_graph_arg(factors[0]).graph.without_labels(),
                          icol::read_graph_arg(factors[1]).graph.without_labels()};
        if (icol::lexicographic_product(parsed.factors->first, parsed.factors->second) != parsed.graph) {
          throw icol::InputError("--factors do not multiply to the given graph");
        }
      }
      const icol::PolicyContext ctx{parsed.graph.without_labels(), k, limits, parsed.factors};
      const auto ann = icol::make_policy(ann_name, icol::Side::Ann, ctx);
      const auto ben = icol::make_policy(ben_name, icol::Side::Ben, ctx);
      std::cout << icol::transcript_to_json(icol::play_game(ctx.graph, k, ann, ben)).dump() << "\n";
    } else if (*recognize) {
      const auto g = icol::read_graph_arg(graph_arg).graph;
      std::cout << icol::class_report_to_json(icol::classify(g), icol::family_membership_F(g)).dump(2) << "\n";
    } else if (*verify) {
      icol::SuiteOptions opt;
      opt.seed = seed;
      opt.limits = limits;
      opt.timing = timing;
      if (!corpus_path.empty()) opt.corpus_lines = read_lines(corpus_path);
      std::vector<std::string> names = suite == "all" ? icol::suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      json reports = json::array();
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto rep = icol::run_suite(names[i], opt);
        ok = ok && rep.ok();
        if (report_format == "csv") {
          std::cout << icol::report_to_csv(rep, i == 0);
        } else {
          reports.push_back(icol::report_to_json(rep));
        }
      }
      if (report_format == "json") std::cout << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
      return ok ? 0 : 1;
    } else if (*serve) {
      icol::SessionManager sessions(limits, std::chrono::minutes(idle_minutes));
      httplib::Server server;
      icol::mount_session_routes(server, sessions);
      std::cerr << "listening on " << host << ":" << port << "\n";
      if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
