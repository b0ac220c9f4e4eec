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

// Exercises the shared library through csm.h only.

#include "csm/csm.h"

#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <thread>

#include "json.hpp"

namespace {

const std::string kFixtures = CSM_FIXTURE_DIR;

std::string Take(char* s) {
  std::string out = s ? s : "";
  csm_string_free(s);
  return out;
}

class CapiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(csm_catalog_load_file((kFixtures + "/saas_catalog.json").c_str(), &catalog_), CSM_OK)
        << csm_last_error_message();
  }
  void TearDown() override { csm_catalog_free(catalog_); }

  csm_request* Request(const std::string& fixture) {
    csm_request* r = nullptr;
    EXPECT_EQ(csm_request_load_file(catalog_, (kFixtures + "/" + fixture).c_str(), &r), CSM_OK)
        << csm_last_error_message();
    return r;
  }

  csm_catalog* catalog_ = nullptr;
};

TEST(CapiBasicsTest, VersionAndNames) {
  EXPECT_GT(std::strlen(csm_version()), 0u);
  EXPECT_STREQ(csm_degree_name(CSM_DEGREE_SUPER), "SUPER");
  EXPECT_STREQ(csm_degree_name(CSM_DEGREE_NOSPEC), "NOSPEC");
}

TEST(CapiBasicsTest, NullArguments) {
  EXPECT_EQ(csm_catalog_load(nullptr, 0, nullptr), CSM_ERR_INVALID_ARGUMENT);
  csm_catalog* c = nullptr;
  EXPECT_EQ(csm_catalog_load(nullptr, 3, &c), CSM_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(c, nullptr);
  EXPECT_EQ(csm_match(nullptr, nullptr, nullptr, nullptr), CSM_ERR_INVALID_ARGUMENT);
  csm_catalog_free(nullptr);
  csm_request_free(nullptr);
  csm_ranking_free(nullptr);
  csm_string_free(nullptr);
}

TEST(CapiBasicsTest, ParseError) {
  csm_catalog* c = nullptr;
  const char doc[] = "{ nope";
  EXPECT_EQ(csm_catalog_load(doc, sizeof doc - 1, &c), CSM_ERR_PARSE);
  EXPECT_EQ(c, nullptr);
  EXPECT_GT(std::strlen(csm_last_error_message()), 0u);
}

TEST(CapiBasicsTest, MissingFileIsIo) {
  csm_catalog* c = nullptr;
  EXPECT_EQ(csm_catalog_load_file("/nonexistent/cat.json", &c), CSM_ERR_IO);
  EXPECT_NE(std::string(csm_last_error_message()).find("/nonexistent/cat.json"), std::string::npos);
}

TEST(CapiBasicsTest, ValidationIssues) {
  const std::string doc = R"({"schema": [], "services": [{"id": 0, "name": "s", "specs": {"x": 1, "y": 2}}]})";
  csm_catalog* c = nullptr;
  ASSERT_EQ(csm_catalog_load(doc.data(), doc.size(), &c), CSM_ERR_VALIDATION);
  ASSERT_EQ(csm_last_error_issue_count(), 2u);
  const char* path = nullptr;
  const char* message = nullptr;
  ASSERT_EQ(csm_last_error_issue(0, &path, &message), CSM_OK);
  EXPECT_STREQ(path, "services[0].specs.x");
  EXPECT_EQ(csm_last_error_issue(2, &path, &message), CSM_ERR_NOT_FOUND);
}

TEST(CapiBasicsTest, ErrorStateIsPerThread) {
  csm_catalog* c = nullptr;
  ASSERT_EQ(csm_catalog_load("{", 1, &c), CSM_ERR_PARSE);
  std::string other;
  std::thread([&] { other = csm_last_error_message(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(csm_last_error_message()), "");
}

TEST_F(CapiTest, Counts) {
  EXPECT_EQ(csm_catalog_service_count(catalog_), 3u);
  EXPECT_EQ(csm_catalog_property_count(catalog_), 7u);
}

TEST_F(CapiTest, ServiceJson) {
  char* out = nullptr;
  ASSERT_EQ(csm_catalog_service_json(catalog_, 1, &out), CSM_OK);
  const auto j = nlohmann::json::parse(Take(out));
  EXPECT_EQ(j["name"], "App X aaS by Provider #2");
  EXPECT_EQ(csm_catalog_service_json(catalog_, 9, &out), CSM_ERR_NOT_FOUND);
}

TEST_F(CapiTest, SaveReloads) {
  char* out = nullptr;
  ASSERT_EQ(csm_catalog_save(catalog_, &out), CSM_OK);
  const std::string saved = Take(out);
  csm_catalog* again = nullptr;
  ASSERT_EQ(csm_catalog_load(saved.data(), saved.size(), &again), CSM_OK);
  EXPECT_EQ(csm_catalog_service_count(again), 3u);
  csm_catalog_free(again);
}

TEST_F(CapiTest, MatchSoftBoolean) {
  csm_request* r = Request("saas_request_soft_bool.json");
  ASSERT_NE(r, nullptr);
  csm_ranking* ranking = nullptr;
  ASSERT_EQ(csm_match(catalog_, r, nullptr, &ranking), CSM_OK);
  csm_request_free(r);
  ASSERT_EQ(csm_ranking_size(ranking), 3u);
  EXPECT_EQ(csm_ranking_feasible_count(ranking), 3u);
  csm_report_view view;
  ASSERT_EQ(csm_ranking_report(ranking, 0, &view), CSM_OK);
  EXPECT_EQ(view.service_id, 1);
  EXPECT_STREQ(view.name, "App X aaS by Provider #2");
  EXPECT_EQ(view.total_points, 3);
  EXPECT_EQ(view.total_violation, 2);
  EXPECT_EQ(view.final_score, 1);
  EXPECT_EQ(view.property_count, 7u);
  csm_property_view prop;
  ASSERT_EQ(csm_ranking_property(ranking, 0, 6, &prop), CSM_OK);
  EXPECT_STREQ(prop.property_id, "compatible_browsers");
  EXPECT_EQ(prop.degree, CSM_DEGREE_SUPER);
  EXPECT_EQ(prop.soft, 0);
  EXPECT_EQ(csm_ranking_property(ranking, 0, 7, &prop), CSM_ERR_NOT_FOUND);
  EXPECT_EQ(csm_ranking_report(ranking, 3, &view), CSM_ERR_NOT_FOUND);

  char* out = nullptr;
  ASSERT_EQ(csm_ranking_response_json(ranking, &out), CSM_OK);
  const auto j = nlohmann::json::parse(Take(out));
  EXPECT_TRUE(j.contains("request_echo"));
  EXPECT_EQ(j["ranking"].size(), 3u);
  EXPECT_GE(csm_ranking_timing_ms(ranking), 0);
  csm_ranking_free(ranking);
}

TEST_F(CapiTest, HardRequestHasNoFeasible) {
  csm_request* r = Request("saas_request_hard.json");
  csm_ranking* ranking = nullptr;
  ASSERT_EQ(csm_match(catalog_, r, nullptr, &ranking), CSM_OK);
  EXPECT_EQ(csm_ranking_size(ranking), 3u);
  EXPECT_EQ(csm_ranking_feasible_count(ranking), 0u);
  csm_ranking_free(ranking);
  csm_request_free(r);
}

TEST_F(CapiTest, RankingOutlivesInputs) {
  csm_request* r = Request("saas_request_version_diff.json");
  csm_ranking* ranking = nullptr;
  ASSERT_EQ(csm_match(catalog_, r, nullptr, &ranking), CSM_OK);
  csm_request_free(r);
  csm_catalog_free(catalog_);
  catalog_ = nullptr;
  csm_report_view view;
  ASSERT_EQ(csm_ranking_report(ranking, 2, &view), CSM_OK);
  EXPECT_EQ(view.service_id, 0);
  EXPECT_EQ(view.total_violation, 1);
  char* out = nullptr;
  EXPECT_EQ(csm_ranking_response_json(ranking, &out), CSM_OK);
  csm_string_free(out);
  csm_ranking_free(ranking);
}

TEST_F(CapiTest, RequestValidation) {
  const std::string doc = R"({"objective": "boolean", "constraints": [
      {"property": "version", "operator": "eq", "value": 5.6, "mode": "hard", "weight": 3}]})";
  csm_request* r = nullptr;
  EXPECT_EQ(csm_request_load(catalog_, doc.data(), doc.size(), &r), CSM_ERR_VALIDATION);
  EXPECT_EQ(r, nullptr);
  ASSERT_EQ(csm_last_error_issue_count(), 1u);
  const char* path = nullptr;
  const char* message = nullptr;
  csm_last_error_issue(0, &path, &message);
  EXPECT_STREQ(path, "constraints[0].weight");
}

}  // namespace
