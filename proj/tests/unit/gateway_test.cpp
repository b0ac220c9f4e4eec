// Copyright 2026 The csm Authors
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

#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "gateway/log.hpp"
#include "gateway/server.hpp"
#include "support/process.hpp"

namespace csm::gateway {
namespace {

const std::string kFixtures = CSM_FIXTURE_DIR;

std::string Fixture(const std::string& name) {
  std::ifstream in(kFixtures + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class GatewayTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    SetLogLevel(LogLevel::kError);
    csm_catalog* raw = nullptr;
    ASSERT_EQ(csm_catalog_load_file((kFixtures + "/saas_catalog.json").c_str(), &raw), CSM_OK);
    server_ = new Server(CatalogHandle(raw), ServerOptions{});
    port_ = server_->bind_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = new std::thread([] { server_->listen(); });
    server_->wait_until_ready();
  }

  static void TearDownTestSuite() {
    server_->stop();
    thread_->join();
    delete thread_;
    delete server_;
  }

  httplib::Client Client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(10, 0);
    return c;
  }

  httplib::Result PostMatch(const std::string& body) const {
    return Client().Post("/api/match", body, "application/json");
  }

  static Server* server_;
  static std::thread* thread_;
  static int port_;
};

Server* GatewayTest::server_ = nullptr;
std::thread* GatewayTest::thread_ = nullptr;
int GatewayTest::port_ = 0;

TEST_F(GatewayTest, Health) {
  auto res = Client().Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(nlohmann::json::parse(res->body)["status"], "ok");
}

TEST_F(GatewayTest, ListsServicesAndProperties) {
  auto services = Client().Get("/api/services");
  ASSERT_TRUE(services);
  EXPECT_EQ(services->status, 200);
  EXPECT_EQ(nlohmann::json::parse(services->body).size(), 3u);
  auto properties = Client().Get("/api/properties");
  ASSERT_TRUE(properties);
  EXPECT_EQ(nlohmann::json::parse(properties->body).size(), 7u);
}

TEST_F(GatewayTest, ServiceById) {
  auto res = Client().Get("/api/services/2");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(nlohmann::json::parse(res->body)["name"], "App X aaS by Provider #3");
  for (const char* path : {"/api/services/3", "/api/services/abc", "/api/services/-1"}) {
    auto missing = Client().Get(path);
    ASSERT_TRUE(missing);
    EXPECT_EQ(missing->status, 404) << path;
  }
}

TEST_F(GatewayTest, InvalidRequestIs422WithIssues) {
  auto res = PostMatch(R"({"objective": "boolean", "constraints": [
      {"property": "nope", "operator": "eq", "value": 1, "mode": "hard"},
      {"property": "version", "operator": "eq", "value": 5.6, "mode": "hard", "weight": 2}]})");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 422);
  const auto j = nlohmann::json::parse(res->body);
  EXPECT_TRUE(j.contains("error"));
  ASSERT_EQ(j["issues"].size(), 2u);
  EXPECT_EQ(j["issues"][0]["path"], "constraints[0].property");
  EXPECT_EQ(j["issues"][1]["path"], "constraints[1].weight");
}

TEST_F(GatewayTest, MalformedBodyIs422) {
  auto res = PostMatch("{\"objective\": ");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 422);
  EXPECT_TRUE(nlohmann::json::parse(res->body).contains("error"));
}

TEST_F(GatewayTest, MatchEqualsCli) {
  for (const char* fixture : {"saas_request_soft_bool.json", "saas_request_hard.json",
                              "saas_request_version_diff.json"}) {
    auto res = PostMatch(Fixture(fixture));
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    auto http = nlohmann::json::parse(res->body);
    const auto cli = csm::testing::RunProcess({CSM_CLI_PATH, "match", "--catalog",
                                               kFixtures + "/saas_catalog.json", "--request",
                                               kFixtures + "/" + fixture});
    auto local = nlohmann::json::parse(cli.out);
    http.erase("timing_ms");
    local.erase("timing_ms");
    EXPECT_EQ(http, local) << fixture;
  }
}

TEST_F(GatewayTest, Stateless) {
  const std::string body = Fixture("saas_request_soft_bool.json");
  auto first = nlohmann::json::parse(PostMatch(body)->body);
  ASSERT_EQ(PostMatch("{}")->status, 422);
  PostMatch(Fixture("saas_request_hard.json"));
  auto again = nlohmann::json::parse(PostMatch(body)->body);
  first.erase("timing_ms");
  again.erase("timing_ms");
  EXPECT_EQ(first, again);
}

TEST_F(GatewayTest, ConcurrentRequests) {
  const std::string body = Fixture("saas_request_soft_bool.json");
  auto expected = nlohmann::json::parse(PostMatch(body)->body);
  expected.erase("timing_ms");
  std::vector<std::thread> clients;
  std::vector<int> ok(8, 0);
  for (std::size_t i = 0; i < ok.size(); ++i) {
    clients.emplace_back([&, i] {
      auto res = PostMatch(body);
      if (!res || res->status != 200) return;
      auto j = nlohmann::json::parse(res->body);
      j.erase("timing_ms");
      ok[i] = j == expected ? 1 : 0;
    });
  }
  for (auto& t : clients) t.join();
  for (std::size_t i = 0; i < ok.size(); ++i) EXPECT_EQ(ok[i], 1) << i;
}

TEST_F(GatewayTest, UnknownRouteIs404) {
  auto res = Client().Get("/api/nothing");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
}

}  // namespace
}  // namespace csm::gateway
