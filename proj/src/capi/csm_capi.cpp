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

#include "csm/csm.h"

#include <chrono>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "csm/catalog_io.hpp"
#include "csm/matcher.hpp"
#include "csm/report_json.hpp"

struct csm_catalog {
  std::shared_ptr<const csm::Catalog> catalog;
};

struct csm_request {
  std::shared_ptr<const csm::Catalog> catalog;
  csm::ServiceRequest request;
};

struct csm_ranking {
  std::shared_ptr<const csm::Catalog> catalog;
  csm::ServiceRequest request;
  csm::MatchRanking ranking;
  std::int64_t timing_ms = 0;
};

namespace {

struct LastError {
  std::string message;
  std::vector<csm::Issue> issues;
};

thread_local LastError g_last_error;

csm_status Fail(csm_status status, std::string message, std::vector<csm::Issue> issues = {}) {
  g_last_error.message = std::move(message);
  g_last_error.issues = std::move(issues);
  return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <typename F>
csm_status Guard(F&& body) {
  try {
    return body();
  } catch (const csm::ValidationError& e) {
    return Fail(CSM_ERR_VALIDATION, e.what(), e.issues());
  } catch (const csm::ParseError& e) {
    return Fail(CSM_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CSM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CSM_ERR_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

csm_status ReadFile(const char* path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Fail(CSM_ERR_IO, std::string("cannot open '") + path + "': " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return Fail(CSM_ERR_IO, std::string("cannot read '") + path + "'");
  out = buf.str();
  return CSM_OK;
}

static_assert(static_cast<int>(csm::MatchingDegree::kSuper) == CSM_DEGREE_SUPER &&
              static_cast<int>(csm::MatchingDegree::kNoSpec) == CSM_DEGREE_NOSPEC);

csm::MatchingDegree ToDegree(csm_degree d) { return static_cast<csm::MatchingDegree>(d); }

}  // namespace

extern "C" {

const char* csm_version(void) { return "0.1.0"; }

const char* csm_degree_name(csm_degree degree) {
  if (degree < CSM_DEGREE_NOSPEC || degree > CSM_DEGREE_SUPER) return "";
  return csm::ToString(ToDegree(degree)).data();
}

void csm_string_free(char* s) { std::free(s); }

const char* csm_last_error_message(void) { return g_last_error.message.c_str(); }

size_t csm_last_error_issue_count(void) { return g_last_error.issues.size(); }

csm_status csm_last_error_issue(size_t index, const char** path, const char** message) {
  if (index >= g_last_error.issues.size()) return CSM_ERR_NOT_FOUND;
  if (path) *path = g_last_error.issues[index].path.c_str();
  if (message) *message = g_last_error.issues[index].message.c_str();
  return CSM_OK;
}

csm_status csm_catalog_load(const char* data, size_t length, csm_catalog** out) {
  if (!data || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    auto catalog = std::make_shared<const csm::Catalog>(csm::LoadCatalog({data, length}));
    *out = new csm_catalog{std::move(catalog)};
    return CSM_OK;
  });
}

csm_status csm_catalog_load_file(const char* path, csm_catalog** out) {
  if (!path || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  std::string text;
  if (csm_status s = ReadFile(path, text); s != CSM_OK) return s;
  return csm_catalog_load(text.data(), text.size(), out);
}

void csm_catalog_free(csm_catalog* catalog) { delete catalog; }

size_t csm_catalog_service_count(const csm_catalog* catalog) {
  return catalog ? catalog->catalog->services.size() : 0;
}

size_t csm_catalog_property_count(const csm_catalog* catalog) {
  return catalog ? catalog->catalog->schema.size() : 0;
}

csm_status csm_catalog_save(const csm_catalog* catalog, char** out) {
  if (!catalog || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = Dup(csm::SaveCatalog(*catalog->catalog));
    return CSM_OK;
  });
}

csm_status csm_catalog_properties_json(const csm_catalog* catalog, char** out) {
  if (!catalog || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : catalog->catalog->schema) arr.push_back(csm::PropertyToJson(p));
    *out = Dup(arr.dump());
    return CSM_OK;
  });
}

csm_status csm_catalog_services_json(const csm_catalog* catalog, char** out) {
  if (!catalog || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : catalog->catalog->services) {
      arr.push_back(csm::ServiceSummaryToJson(s, *catalog->catalog));
    }
    *out = Dup(arr.dump());
    return CSM_OK;
  });
}

csm_status csm_catalog_service_json(const csm_catalog* catalog, int64_t service_id, char** out) {
  if (!catalog || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    for (const auto& s : catalog->catalog->services) {
      if (s.service_id == service_id) {
        *out = Dup(csm::ServiceSummaryToJson(s, *catalog->catalog).dump());
        return CSM_OK;
      }
    }
    return Fail(CSM_ERR_NOT_FOUND, "no service with id " + std::to_string(service_id));
  });
}

csm_status csm_request_load(const csm_catalog* catalog, const char* data, size_t length,
                            csm_request** out) {
  if (!catalog || !data || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    csm::ServiceRequest request = csm::LoadRequest({data, length}, *catalog->catalog);
    *out = new csm_request{catalog->catalog, std::move(request)};
    return CSM_OK;
  });
}

csm_status csm_request_load_file(const csm_catalog* catalog, const char* path, csm_request** out) {
  if (!catalog || !path || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  std::string text;
  if (csm_status s = ReadFile(path, text); s != CSM_OK) return s;
  return csm_request_load(catalog, text.data(), text.size(), out);
}

void csm_request_free(csm_request* request) { delete request; }

csm_status csm_match(const csm_catalog* catalog, const csm_request* request,
                     const csm_match_options* options, csm_ranking** out) {
  if (!catalog || !request || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  if (catalog->catalog != request->catalog) {
    return Fail(CSM_ERR_INVALID_ARGUMENT, "request was loaded against a different catalog");
  }
  return Guard([&] {
    csm::MatchOptions opts;
    if (options) {
      opts.strict_missing = options->strict_missing != 0;
      opts.normalize_difference = options->normalize_difference != 0;
    }
    const auto start = std::chrono::steady_clock::now();
    csm::MatchRanking ranking = csm::Match(*catalog->catalog, request->request, opts);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    auto result = std::make_unique<csm_ranking>();
    result->catalog = catalog->catalog;
    result->request = request->request;
    if (opts.normalize_difference) result->request.normalize_difference = true;
    result->ranking = std::move(ranking);
    result->timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    *out = result.release();
    return CSM_OK;
  });
}

void csm_ranking_free(csm_ranking* ranking) { delete ranking; }

size_t csm_ranking_size(const csm_ranking* ranking) {
  return ranking ? ranking->ranking.reports.size() : 0;
}

size_t csm_ranking_feasible_count(const csm_ranking* ranking) {
  return ranking ? ranking->ranking.feasible_count() : 0;
}

int64_t csm_ranking_timing_ms(const csm_ranking* ranking) {
  return ranking ? ranking->timing_ms : 0;
}

csm_status csm_ranking_report(const csm_ranking* ranking, size_t index, csm_report_view* out) {
  if (!ranking || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= ranking->ranking.reports.size()) {
    return Fail(CSM_ERR_NOT_FOUND, "rank index out of range");
  }
  const csm::MatchReport& r = ranking->ranking.reports[index];
  *out = csm_report_view{r.service_id,    r.name.c_str(),  r.hard_feasible ? 1 : 0,
                         r.total_points,  r.total_violation, r.final_score,
                         r.property_results.size()};
  return CSM_OK;
}

csm_status csm_ranking_property(const csm_ranking* ranking, size_t index, size_t property,
                                csm_property_view* out) {
  if (!ranking || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= ranking->ranking.reports.size() ||
      property >= ranking->ranking.reports[index].property_results.size()) {
    return Fail(CSM_ERR_NOT_FOUND, "index out of range");
  }
  const csm::PropertyResult& p = ranking->ranking.reports[index].property_results[property];
  *out = csm_property_view{p.property_id.c_str(), p.mode == csm::Hardness::kSoft ? 1 : 0,
                           static_cast<csm_degree>(p.degree), p.points, p.violation};
  return CSM_OK;
}

csm_status csm_ranking_response_json(const csm_ranking* ranking, char** out) {
  if (!ranking || !out) return Fail(CSM_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = Dup(csm::MatchResponseToJson(ranking->request, ranking->ranking, *ranking->catalog,
                                        ranking->timing_ms)
                   .dump(2));
    return CSM_OK;
  });
}

}  // extern "C"
