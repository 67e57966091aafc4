#pragma once

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "icol/expr.hpp"
#include "icol/game.hpp"
#include "icol/io.hpp"
#include "icol/solver.hpp"
#include "icol/strategies.hpp"

namespace icol {

/// Request rejected by the session service; `status` is the HTTP code.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

enum class SessionStatus { InProgress, AnnWon, BenWon };

inline const char* to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::InProgress: return "in-progress";
    case SessionStatus::AnnWon: return "ann-won";
    case SessionStatus::BenWon: return "ben-won";
  }
  return "?";
}

struct SessionRequest {
  ParsedGraph graph;
  int k = 0;
  Side human = Side::Ann;
  std::string engine = "optimal";
};

/// Human move: a vertex when the human plays Ann, a color when Ben.
/// `expect_moves` (optional) must equal the current history length, so a
/// stale writer is rejected instead of applied out of turn.
struct HumanMove {
  std::optional<Vertex> vertex;
  std::optional<Color> color;
  std::optional<int> expect_moves;
};

class Session {
 public:
  Session(std::string id, const SessionRequest& req, const Limits& limits)
      : id_(std::move(id)),
        graph_(std::make_shared<const Graph>(req.graph.graph.without_labels())),
        human_(req.human),
        state_(graph_, req.k),
        engine_(make_policy(req.engine, req.human == Side::Ann ? Side::Ben : Side::Ann,
                            PolicyContext{*graph_, req.k, limits, req.graph.factors})) {
    if (human_ == Side::Ben) engine_present();
  }

  const std::string& id() const { return id_; }

  nlohmann::json submit(const HumanMove& m) {
    std::lock_guard lock(mu_);
    if (status_ != SessionStatus::InProgress) throw ServiceError(409, "game is over");
    if (m.expect_moves && *m.expect_moves != static_cast<int>(state_.history().size())) {
      throw ServiceError(409, "out of turn: expected " + std::to_string(*m.expect_moves) + " moves, session has " +
                                  std::to_string(state_.history().size()));
    }
    if (human_ == Side::Ann) {
      if (!m.vertex || m.color) throw ServiceError(422, "human plays Ann: submit a vertex");
      const Vertex v = *m.vertex;
      if (v < 0 || v >= state_.order()) throw ServiceError(422, "vertex " + std::to_string(v) + " out of range");
      if (state_.is_colored(v)) throw ServiceError(422, "vertex " + std::to_string(v) + " is already colored");
      const Color c = engine_.color(state_, v);
      if (!state_.is_legal({v, c})) throw PolicyError(Side::Ben, "engine produced an illegal color");
      state_ = state_.play({v, c});
      settle();
    } else {
      if (!m.color || m.vertex) throw ServiceError(422, "human plays Ben: submit a color");
      const Color c = *m.color;
      if (c < 1 || c > state_.k()) throw ServiceError(422, "color " + std::to_string(c) + " out of range 1.." + std::to_string(state_.k()));
      if (!state_.is_legal({*presented_, c})) {
        throw ServiceError(422, "color " + std::to_string(c) + " is used by a neighbor of vertex " +
                                    std::to_string(*presented_));
      }
      state_ = state_.play({*presented_, c});
      presented_.reset();
      settle();
      if (status_ == SessionStatus::InProgress) engine_present();
    }
    return snapshot_locked();
  }

  nlohmann::json snapshot() const {
    std::lock_guard lock(mu_);
    return snapshot_locked();
  }

  SessionStatus status() const {
    std::lock_guard lock(mu_);
    return status_;
  }

 private:
  void settle() {
    if (blocked_vertices(state_) != 0) {
      status_ = SessionStatus::BenWon;
    } else if (state_.complete()) {
      status_ = SessionStatus::AnnWon;
    }
  }

  void engine_present() {
    const Vertex v = engine_.present(state_);
    if (v < 0 || v >= state_.order() || state_.is_colored(v)) {
      throw PolicyError(Side::Ann, "engine presented invalid vertex " + std::to_string(v));
    }
    presented_ = v;
  }

  nlohmann::json snapshot_locked() const {
    using nlohmann::json;
    const Graph& g = *graph_;
    json j;
    j["id"] = id_;
    j["k"] = state_.k();
    j["n"] = g.order();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    j["colors"] = json::array();
    for (Color c : state_.colors()) j["colors"].push_back(c == 0 ? json(nullptr) : json(c));
    const bool done = status_ != SessionStatus::InProgress;
    j["turn"] = done ? "done" : "human";
    j["presented"] = presented_ ? json(*presented_) : json(nullptr);
    j["legal"] = json::array();
    if (!done) {
      if (human_ == Side::Ann) {
        for_each_vertex(state_.uncolored(), [&](Vertex v) { j["legal"].push_back(v); });
      } else {
        for (Color c : palette_colors(state_.available(*presented_))) j["legal"].push_back(c);
      }
    }
    j["available"] = json::array();
    for (Vertex v = 0; v < g.order(); ++v) {
      j["available"].push_back(state_.is_colored(v) ? std::vector<Color>{} : palette_colors(state_.available(v)));
    }
    j["blocked"] = json::array();
    for_each_vertex(blocked_vertices(state_), [&](Vertex v) { j["blocked"].push_back(v); });
    j["status"] = to_string(status_);
    j["human"] = human_ == Side::Ann ? "ann" : "ben";
    j["engine"] = engine_.name();
    j["history"] = json::array();
    for (const Move& m : state_.history()) j["history"].push_back({{"v", m.vertex}, {"c", m.color}});
    return j;
  }

  std::string id_;
  std::shared_ptr<const Graph> graph_;
  Side human_;
  GameState state_;
  StrategyPolicy engine_;
  std::optional<Vertex> presented_;
  SessionStatus status_ = SessionStatus::InProgress;
  mutable std::mutex mu_;
};

/// In-memory session store. Sessions idle longer than `idle` are evicted on
/// the next access to the manager.
class SessionManager {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionManager(Limits limits = {}, std::chrono::milliseconds idle = std::chrono::minutes(30),
                          std::function<Clock::time_point()> now = Clock::now)
      : limits_(limits), idle_(idle), now_(std::move(now)), rng_(std::random_device{}()) {
    limits_.validate();
  }

  nlohmann::json create(const SessionRequest& req) {
    const int n = req.graph.graph.order();
    if (n < 1 || n > limits_.max_vertices) {
      throw ServiceError(400, "graph must have 1.." + std::to_string(limits_.max_vertices) + " vertices");
    }
    if (req.k < 1 || req.k > kMaxColors) throw ServiceError(400, "k must be in 1.." + std::to_string(kMaxColors));
    std::shared_ptr<Session> s;
    try {
      s = std::make_shared<Session>(fresh_id(), req, limits_);
    } catch (const InputError& e) {
      throw ServiceError(400, e.what());
    }
    std::lock_guard lock(mu_);
    evict_locked();
    sessions_[s->id()] = {s, now_()};
    return s->snapshot();
  }

  nlohmann::json submit(const std::string& id, const HumanMove& m) { return find(id)->submit(m); }

  nlohmann::json state(const std::string& id) { return find(id)->snapshot(); }

  std::size_t size() {
    std::lock_guard lock(mu_);
    evict_locked();
    return sessions_.size();
  }

  /// Parses a POST /sessions body:
  /// {"graph": graph6 | expression | graph JSON, "k": int, "human": "ann"|"ben", "engine": name}.
  static SessionRequest parse_request(const nlohmann::json& body) {
    try {
      SessionRequest req;
      const auto& g = body.at("graph");
      if (g.is_object()) {
        req.graph = {graph_from_json(g), std::nullopt};
      } else {
        const auto text = g.get<std::string>();
        try {
          req.graph = {decode_graph6(text), std::nullopt};
        } catch (const InputError&) {
          req.graph = parse_graph_expression(text);
        }
      }
      req.k = body.at("k").get<int>();
      const auto human = body.value("human", std::string("ann"));
      if (human != "ann" && human != "ben") throw ServiceError(400, "human must be ann or ben");
      req.human = human == "ann" ? Side::Ann : Side::Ben;
      req.engine = body.value("engine", std::string("optimal"));
      return req;
    } catch (const nlohmann::json::exception& e) {
      throw ServiceError(400, std::string("bad session request: ") + e.what());
    } catch (const InputError& e) {
      throw ServiceError(400, e.what());
    }
  }

  /// Parses a POST /sessions/{id}/moves body: {"vertex": int} or {"color": int},
  /// optionally with "expect_moves".
  static HumanMove parse_move(const nlohmann::json& body) {
    try {
      HumanMove m;
      if (body.contains("vertex")) m.vertex = body["vertex"].get<int>();
      if (body.contains("color")) m.color = body["color"].get<int>();
      if (body.contains("expect_moves")) m.expect_moves = body["expect_moves"].get<int>();
      return m;
    } catch (const nlohmann::json::exception& e) {
      throw ServiceError(400, std::string("bad move: ") + e.what());
    }
  }

 private:
  struct Entry {
    std::shared_ptr<Session> session;
    Clock::time_point touched;
  };

  std::shared_ptr<Session> find(const std::string& id) {
    std::lock_guard lock(mu_);
    evict_locked();
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw ServiceError(404, "unknown session '" + id + "'");
    it->second.touched = now_();
    return it->second.session;
  }

  void evict_locked() {
    const auto t = now_();
    std::erase_if(sessions_, [&](const auto& kv) { return t - kv.second.touched > idle_; });
  }

  std::string fresh_id() {
    std::lock_guard lock(mu_);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
    return buf;
  }

  Limits limits_;
  std::chrono::milliseconds idle_;
  std::function<Clock::time_point()> now_;
  std::mt19937_64 rng_;
  std::map<std::string, Entry> sessions_;
  std::mutex mu_;
};

}  // namespace icol
