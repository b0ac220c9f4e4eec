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

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support/process.hpp"

namespace {

using csm::testing::ProcessResult;
using csm::testing::RunProcess;

const std::string kCli = CSM_CLI_PATH;
const std::string kFixtures = CSM_FIXTURE_DIR;
const std::string kCatalog = kFixtures + "/saas_catalog.json";

ProcessResult Cli(std::vector<std::string> args) {
  args.insert(args.begin(), kCli);
  return RunProcess(args);
}

std::string TempFile(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("csm_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(CliTest, MatchFeasibleExitsZero) {
  const auto r = Cli({"match", "--catalog", kCatalog, "--request", kFixtures + "/saas_request_soft_bool.json"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("request_echo"));
  EXPECT_EQ(j["feasible_count"], 3);
  ASSERT_EQ(j["ranking"].size(), 3u);
  EXPECT_EQ(j["ranking"][0]["service_id"], 1);
  EXPECT_EQ(j["ranking"][0]["rank"], 1);
}

TEST(CliTest, NoFeasibleExitsThree) {
  const auto r = Cli({"match", "--catalog", kCatalog, "--request", kFixtures + "/saas_request_hard.json"});
  EXPECT_EQ(r.exit_code, 3);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["feasible_count"], 0);
  std::vector<int> points;
  for (const auto& report : j["ranking"]) points.push_back(report["total_points"].get<int>());
  EXPECT_EQ(points, (std::vector<int>{11, 11, 7}));
}

TEST(CliTest, MissingFileExitsTwoAndNamesPath) {
  const auto r = Cli({"match", "--catalog", "/does/not/exist.json", "--request",
                      kFixtures + "/saas_request_hard.json"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("/does/not/exist.json"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, InvalidRequestExitsOne) {
  const auto bad = TempFile("bad_request.json", R"({"objective": "boolean", "constraints": [
      {"property": "x", "operator": "eq", "value": 1, "mode": "hard"}]})");
  const auto r = Cli({"match", "--catalog", kCatalog, "--request", bad});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("constraints[0].property"), std::string::npos) << r.err;
}

TEST(CliTest, MalformedJsonExitsOne) {
  const auto bad = TempFile("malformed.json", "{\"schema\": [");
  EXPECT_EQ(Cli({"validate", "--catalog", bad}).exit_code, 1);
}

TEST(CliTest, UsageErrorExitsOne) {
  EXPECT_EQ(Cli({}).exit_code, 1);
  EXPECT_EQ(Cli({"match", "--catalog", kCatalog}).exit_code, 1);
  EXPECT_EQ(Cli({"match", "--catalog", kCatalog, "--request", kCatalog, "--output", "xml"}).exit_code, 1);
}

TEST(CliTest, ValidateGoodFiles) {
  const auto r = Cli({"validate", "--catalog", kCatalog, "--request", kFixtures + "/saas_request_hard.json"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTest, ValidateListsEveryIssue) {
  const auto bad = TempFile("bad_catalog.json", R"({"schema": [],
      "services": [{"id": 0, "name": "s", "specs": {"x": 1, "y": 2}}]})");
  const auto r = Cli({"validate", "--catalog", bad});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("catalog: services[0].specs.x:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("catalog: services[0].specs.y:"), std::string::npos) << r.err;
}

TEST(CliTest, ServeRejectsBadCatalog) {
  const auto bad = TempFile("serve_bad.json", "[]");
  EXPECT_EQ(Cli({"serve", "--catalog", bad, "--port", "0"}).exit_code, 2);
}

TEST(CliTest, TableOutput) {
  const auto r = Cli({"match", "--catalog", kCatalog, "--request", kFixtures + "/saas_request_soft_bool.json",
                      "--output", "table"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("App X aaS by Provider #2"), std::string::npos);
  EXPECT_NE(r.out.find("++"), std::string::npos);
  EXPECT_THROW(nlohmann::json::parse(r.out), nlohmann::json::parse_error);
}

TEST(CliTest, DifferenceObjective) {
  const auto r = Cli({"match", "--catalog", kCatalog, "--request", kFixtures + "/saas_request_version_diff.json"});
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<int> ids;
  for (const auto& report : j["ranking"]) ids.push_back(report["service_id"].get<int>());
  EXPECT_EQ(ids, (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(j["ranking"][2]["total_violation"], 1);
}

TEST(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args = {"match", "--catalog", kCatalog, "--request",
                                         kFixtures + "/saas_request_soft_bool.json"};
  auto a = nlohmann::json::parse(Cli(args).out);
  auto b = nlohmann::json::parse(Cli(args).out);
  a.erase("timing_ms");
  b.erase("timing_ms");
  EXPECT_EQ(a, b);
}

}  // namespace
