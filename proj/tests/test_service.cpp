// Copyright 2026 The Adinkra Heights Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "service.hpp"

using namespace adinkra;
using nlohmann::json;

namespace {

// Runs a Service on an ephemeral local port for the duration of a test.
class Running {
 public:
  explicit Running(service::Options opts = {}) : svc_(std::move(opts)) {
    svc_.mount(server_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~Running() {
    server_.stop();
    thread_.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(120, 0);
    return c;
  }

 private:
  service::Service svc_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

json post(httplib::Client& c, const std::string& path, const json& body, int expect) {
  auto res = c.Post(path, body.dump(), "application/json");
  EXPECT_TRUE(res);
  if (!res) return {};
  EXPECT_EQ(res->status, expect) << res->body;
  return json::parse(res->body);
}

json get(httplib::Client& c, const std::string& path, int expect) {
  auto res = c.Get(path);
  EXPECT_TRUE(res);
  if (!res) return {};
  EXPECT_EQ(res->status, expect) << res->body;
  return json::parse(res->body);
}

}  // namespace

TEST(Service, Health) {
  Running r;
  auto c = r.client();
  EXPECT_EQ(get(c, "/health", 200)["ok"], true);
}

TEST(Service, FullyExtendedThenLowerTop) {
  Running r;
  auto c = r.client();
  const json s = post(c, "/session", {{"n", 5}, {"init", "fully_extended"}}, 201);
  const std::string id = s["id"];
  EXPECT_EQ(s["degree"], 8);
  for (const auto& curve : s["image"]["curves"]) {
    EXPECT_EQ(curve["a"], 0);
    EXPECT_EQ(curve["b4"], 0);
  }
  const json t = post(c, "/session/" + id + "/lower", {{"vertex", 31}}, 200);
  for (const auto& curve : t["image"]["curves"]) {
    EXPECT_EQ(curve["a"], 1);
    EXPECT_EQ(curve["b4"], 3);
    EXPECT_EQ(curve["c2"], 0);
  }
  for (const auto& d : t["delta"]) EXPECT_EQ(d["a"], 1);
  EXPECT_EQ(t["history"].size(), 1u);
  EXPECT_EQ(get(c, "/session/" + id, 200)["height"], t["height"]);
}

TEST(Service, ScheduleToValiseAndBack) {
  Running r;
  auto c = r.client();
  const std::string id = post(c, "/session", json::object(), 201)["id"];
  for (Vertex v : valise_schedule(5)) {
    const json t = post(c, "/session/" + id + "/lower", {{"vertex", v.bits}}, 200);
    for (const auto& d : t["delta"]) EXPECT_EQ(std::abs(d["a"].get<int>()), 1);
  }
  const json s = get(c, "/session/" + id, 200);
  EXPECT_EQ(s["history"].size(), 32u);
  EXPECT_EQ(s["height"], json(HeightFn::valise(5).to_vector()));
  for (const auto& curve : s["image"]["curves"]) EXPECT_EQ(curve["a"], 0);
  const json moves = get(c, "/session/" + id + "/moves", 200);
  EXPECT_EQ(moves["lower"].size(), 16u);
  EXPECT_EQ(moves["raise"].size(), 16u);
}

TEST(Service, DivisorImageSplitting) {
  Running r;
  auto c = r.client();
  const std::string id = post(c, "/session", {{"init", "valise"}}, 201)["id"];
  const json d = get(c, "/session/" + id + "/divisor", 200);
  EXPECT_EQ(d["degree"], 8);
  EXPECT_EQ(d["points"].size(), 72u);
  EXPECT_EQ(get(c, "/session/" + id + "/image", 200)["curves"].size(), 5u);
  const json sp = get(c, "/session/" + id + "/splitting?k=1", 200);
  EXPECT_EQ(sp["labels"].size(), 32u);
  EXPECT_EQ(sp["plus"], 16);
  EXPECT_EQ(sp["minus"], 16);
  get(c, "/session/" + id + "/splitting?k=6", 400);
  get(c, "/session/" + id + "/splitting", 400);
}

TEST(Service, PinsAndValues) {
  Running r;
  auto c = r.client();
  const json a = post(c, "/session", {{"pins", "all-white@1"}}, 201);
  EXPECT_EQ(a["height"], json(HeightFn::valise(5).to_vector()));
  const json b = post(c, "/session", {{"n", 2}, {"values", {0, 1, 1, 2}}}, 201);
  EXPECT_TRUE(b["image"].is_null());
  get(c, "/session/" + b["id"].get<std::string>() + "/image", 409);
}

TEST(Service, Errors) {
  Running r;
  auto c = r.client();
  get(c, "/session/nope", 404);
  post(c, "/session/nope/lower", {{"vertex", 1}}, 404);
  post(c, "/session", {{"n", 9}}, 400);
  post(c, "/session", {{"n", 2}, {"values", {0, 0, 0, 0}}}, 422);
  post(c, "/session", {{"init", "sideways"}}, 422);
  auto res = c.Post("/session", "{oops", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  const std::string id = post(c, "/session", json::object(), 201)["id"];
  post(c, "/session/" + id + "/lower", {{"vertex", 0}}, 422);
  post(c, "/session/" + id + "/lower", {{"vertex", 99}}, 422);
  post(c, "/session/" + id + "/lower", {{"v", 31}}, 400);
  EXPECT_EQ(get(c, "/session/" + id, 200)["history"].size(), 0u);
  EXPECT_TRUE(get(c, "/no/such/route", 404).contains("error"));
}

TEST(Service, CensusEndpoint) {
  Running r;
  auto c = r.client();
  const json j = get(c, "/census?k=3", 200);
  EXPECT_EQ(j["heights"], 395094);
  ASSERT_EQ(j["curves"].size(), 1u);
  std::uint64_t total = 0, at_zero = 0;
  for (const auto& bin : j["curves"][0]["bins"]) {
    total += bin["frequency"].get<std::uint64_t>();
    if (bin["a"] == 0) at_zero = bin["frequency"];
  }
  EXPECT_EQ(total, 395094u);
  EXPECT_EQ(at_zero, 83830u);
  get(c, "/census?k=0", 400);
}

TEST(Service, SnapshotSurvivesRestart) {
  const auto path = std::filesystem::temp_directory_path() / "adinkra_service_snapshot.json";
  std::filesystem::remove(path);
  service::Options opts;
  opts.snapshot = path;
  std::string id;
  json height;
  {
    Running r(opts);
    auto c = r.client();
    id = post(c, "/session", json::object(), 201)["id"];
    height = post(c, "/session/" + id + "/lower", {{"vertex", 31}}, 200)["height"];
  }
  {
    Running r(opts);
    auto c = r.client();
    const json s = get(c, "/session/" + id, 200);
    EXPECT_EQ(s["height"], height);
    EXPECT_EQ(s["history"].size(), 1u);
  }
  std::filesystem::remove(path);
}

TEST(Service, ConcurrentClients) {
  Running r;
  std::vector<std::thread> pool;
  std::atomic<int> failures{0};
  for (int t = 0; t < 6; ++t) {
    pool.emplace_back([&] {
      auto c = r.client();
      auto res = c.Post("/session", "{}", "application/json");
      if (!res || res->status != 201) {
        ++failures;
        return;
      }
      const std::string id = json::parse(res->body)["id"];
      for (int i = 0; i < 10; ++i) {
        auto a = c.Post("/session/" + id + "/lower", R"({"vertex": 31})", "application/json");
        auto b = c.Post("/session/" + id + "/raise", R"({"vertex": 31})", "application/json");
        if (!a || !b || a->status != 200 || b->status != 200) ++failures;
      }
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(failures.load(), 0);
}
