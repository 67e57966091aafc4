#include <gtest/gtest.h>

#include <thread>

#include <httplib.h>

#include "icol/http.hpp"
#include "icol/io.hpp"
#include "icol/service.hpp"

using namespace icol;
using nlohmann::json;

namespace {

SessionRequest request(const std::string& graph, int k, Side human, const std::string& engine = "optimal") {
  return SessionManager::parse_request(
      {{"graph", graph}, {"k", k}, {"human", human == Side::Ann ? "ann" : "ben"}, {"engine", engine}});
}

HumanMove vertex(Vertex v) { return {v, std::nullopt, std::nullopt}; }
HumanMove color(Color c) { return {std::nullopt, c, std::nullopt}; }

int error_status(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ServiceError& e) {
    return e.status();
  }
  return 0;
}

}  // namespace

TEST(Session, CreateHumanAnn) {
  SessionManager m;
  const auto s = m.create(request(encode_graph6(cycle_graph(5)), 3, Side::Ann));
  EXPECT_EQ(s["status"], "in-progress");
  EXPECT_EQ(s["turn"], "human");
  EXPECT_EQ(s["n"], 5);
  EXPECT_EQ(s["edges"].size(), 5u);
  EXPECT_TRUE(s["presented"].is_null());
  for (const auto& c : s["colors"]) EXPECT_TRUE(c.is_null());
  EXPECT_EQ(s["legal"], json({0, 1, 2, 3, 4}));
  EXPECT_EQ(s["available"][0], json({1, 2, 3}));
  EXPECT_EQ(s["history"].size(), 0u);
}

TEST(Session, CreateErrors) {
  SessionManager m;
  EXPECT_EQ(error_status([&] { m.create(request("C5", 0, Side::Ann)); }), 400);
  EXPECT_EQ(error_status([&] { m.create(request("C5", 3, Side::Ann, "nope")); }), 400);
  EXPECT_EQ(error_status([&] { m.create(request("P13", 3, Side::Ann)); }), 400);
  EXPECT_EQ(error_status([&] { SessionManager::parse_request({{"graph", "!!"}, {"k", 2}}); }), 400);
  EXPECT_EQ(error_status([&] { SessionManager::parse_request({{"k", 2}}); }), 400);
}

TEST(Session, HumanBenGetsPresentedVertex) {
  SessionManager m;
  const auto s = m.create(request("P3", 2, Side::Ben, "degeneracy"));
  EXPECT_EQ(s["status"], "in-progress");
  ASSERT_TRUE(s["presented"].is_number_integer());
  EXPECT_EQ(s["legal"], json({1, 2}));
}

TEST(Session, CenterFirstWins) {
  SessionManager m;
  const std::string id = m.create(request("P3", 2, Side::Ann))["id"];
  auto s = m.submit(id, vertex(1));
  EXPECT_FALSE(s["colors"][1].is_null());
  EXPECT_EQ(s["blocked"].size(), 0u);
  s = m.submit(id, vertex(0));
  s = m.submit(id, vertex(2));
  EXPECT_EQ(s["status"], "ann-won");
  EXPECT_EQ(s["turn"], "done");
  EXPECT_EQ(s["legal"].size(), 0u);
  EXPECT_EQ(s["history"].size(), 3u);
}

TEST(Session, LeavesFirstLoses) {
  SessionManager m;
  const std::string id = m.create(request("P3", 2, Side::Ann))["id"];
  m.submit(id, vertex(0));
  const auto s = m.submit(id, vertex(2));
  EXPECT_EQ(s["status"], "ben-won");
  EXPECT_EQ(s["blocked"], json({1}));
  EXPECT_EQ(s["legal"].size(), 0u);
  EXPECT_EQ(error_status([&] { m.submit(id, vertex(1)); }), 409);
}

TEST(Session, IllegalMovesLeaveStateUnchanged) {
  SessionManager m;
  const std::string id = m.create(request("P3", 2, Side::Ben, "degeneracy"))["id"];
  const auto before = m.state(id);
  EXPECT_EQ(error_status([&] { m.submit(id, color(3)); }), 422);
  EXPECT_EQ(error_status([&] { m.submit(id, color(0)); }), 422);
  EXPECT_EQ(error_status([&] { m.submit(id, vertex(0)); }), 422);
  EXPECT_EQ(m.state(id), before);
  const std::string ann = m.create(request("P3", 2, Side::Ann))["id"];
  m.submit(ann, vertex(1));
  EXPECT_EQ(error_status([&] { m.submit(ann, vertex(1)); }), 422);
  EXPECT_EQ(error_status([&] { m.submit(ann, vertex(9)); }), 422);
}

TEST(Session, StaleWriterRejected) {
  SessionManager m;
  const std::string id = m.create(request("C5", 3, Side::Ann))["id"];
  m.submit(id, {0, std::nullopt, 0});
  EXPECT_EQ(error_status([&] { m.submit(id, {2, std::nullopt, 0}); }), 409);
  EXPECT_EQ(m.state(id)["history"].size(), 1u);
}

TEST(Session, HumanBenPlaysToTheEnd) {
  SessionManager m;
  const std::string id = m.create(request("C5", 3, Side::Ben, "optimal"))["id"];
  json s = m.state(id);
  int moves = 0;
  while (s["status"] == "in-progress") {
    s = m.submit(id, color(s["legal"][0].get<int>()));
    ++moves;
    for (Vertex v : s["blocked"]) EXPECT_TRUE(s["colors"][v].is_null());
  }
  EXPECT_EQ(s["status"], "ann-won");
  EXPECT_EQ(moves, 5);
  EXPECT_EQ(s["history"].size(), 5u);
}

TEST(Session, UnknownAndEviction) {
  auto now = SessionManager::Clock::now();
  SessionManager m(Limits{}, std::chrono::minutes(30), [&] { return now; });
  EXPECT_EQ(error_status([&] { m.state("deadbeef"); }), 404);
  const std::string id = m.create(request("P3", 2, Side::Ann))["id"];
  now += std::chrono::minutes(10);
  EXPECT_NO_THROW(m.state(id));
  now += std::chrono::minutes(31);
  EXPECT_EQ(error_status([&] { m.state(id); }), 404);
  EXPECT_EQ(m.size(), 0u);
}

TEST(Session, IsolatedUnderConcurrency) {
  SessionManager m;
  std::vector<std::string> ids;
  for (int i = 0; i < 8; ++i) ids.push_back(m.create(request("P3", 2, Side::Ann))["id"]);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      const std::vector<Vertex> order = i % 2 ? std::vector<Vertex>{1, 0, 2} : std::vector<Vertex>{0, 2};
      for (Vertex v : order) m.submit(ids[i], vertex(v));
    });
  }
  for (auto& t : threads) t.join();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(m.state(ids[i])["status"], i % 2 ? "ann-won" : "ben-won");
}

TEST(Http, Routes) {
  SessionManager sessions;
  httplib::Server server;
  mount_session_routes(server, sessions);
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);

  auto created = client.Post("/sessions", R"({"graph": "P3", "k": 2, "human": "ann", "engine": "optimal"})",
                             "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const std::string id = json::parse(created->body)["id"];

  auto moved = client.Post("/sessions/" + id + "/moves", R"({"vertex": 1})", "application/json");
  ASSERT_TRUE(moved);
  EXPECT_EQ(moved->status, 200);
  EXPECT_EQ(json::parse(moved->body)["history"].size(), 1u);

  auto got = client.Get("/sessions/" + id);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->status, 200);
  EXPECT_EQ(json::parse(got->body), json::parse(moved->body));

  auto bad = client.Post("/sessions/" + id + "/moves", R"({"vertex": 1})", "application/json");
  EXPECT_EQ(bad->status, 422);
  EXPECT_TRUE(json::parse(bad->body).contains("error"));
  EXPECT_EQ(client.Get("/sessions/0123")->status, 404);
  EXPECT_EQ(client.Post("/sessions", "{not json", "application/json")->status, 400);
  EXPECT_EQ(client.Post("/sessions", R"({"graph": "C5", "k": 0})", "application/json")->status, 400);

  server.stop();
  worker.join();
}
