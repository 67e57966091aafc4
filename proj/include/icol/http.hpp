#pragma once

#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "icol/service.hpp"

namespace icol {

namespace detail {

inline void reply(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename Fn>
void guarded(httplib::Response& res, int ok_status, Fn&& fn) {
  try {
    reply(res, ok_status, fn());
  } catch (const ServiceError& e) {
    reply(res, e.status(), {{"error", e.what()}});
  } catch (const nlohmann::json::exception& e) {
    reply(res, 400, {{"error", std::string("malformed JSON: ") + e.what()}});
  } catch (const InputError& e) {
    reply(res, 400, {{"error", e.what()}});
  } catch (const ResourceLimitError& e) {
    reply(res, 503, {{"error", std::string("engine hit its search limit: ") + e.what()}});
  } catch (const std::exception& e) {
    reply(res, 500, {{"error", e.what()}});
  }
}

}  // namespace detail

/// POST /sessions, POST /sessions/{id}/moves, GET /sessions/{id}.
inline void mount_session_routes(httplib::Server& server, SessionManager& sessions) {
  server.Post("/sessions", [&sessions](const httplib::Request& req, httplib::Response& res) {
    detail::guarded(res, 201, [&] {
      return sessions.create(SessionManager::parse_request(nlohmann::json::parse(req.body)));
    });
  });
  server.Post(R"(/sessions/([0-9a-f]+)/moves)", [&sessions](const httplib::Request& req, httplib::Response& res) {
    detail::guarded(res, 200, [&] {
      return sessions.submit(req.matches[1], SessionManager::parse_move(nlohmann::json::parse(req.body)));
    });
  });
  server.Get(R"(/sessions/([0-9a-f]+))", [&sessions](const httplib::Request& req, httplib::Response& res) {
    detail::guarded(res, 200, [&] { return sessions.state(req.matches[1]); });
  });
}

}  // namespace icol
