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

/* C interface to the cloud service matcher.
 *
 * Objects are opaque handles created by *_load / csm_match and released with
 * the matching *_free function. Every fallible call returns a csm_status;
 * on failure, csm_last_error_message() and csm_last_error_issue() describe
 * what went wrong. Error state is per thread.
 *
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with csm_string_free(). Strings inside view structs stay
 * valid as long as the handle they came from.
 */
#ifndef CSM_CSM_H_
#define CSM_CSM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CSM_BUILDING_LIBRARY)
#    define CSM_API __declspec(dllexport)
#  else
#    define CSM_API __declspec(dllimport)
#  endif
#else
#  define CSM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csm_status {
  CSM_OK = 0,
  CSM_ERR_PARSE = 1,
  CSM_ERR_VALIDATION = 2,
  CSM_ERR_IO = 3,
  CSM_ERR_NOT_FOUND = 4,
  CSM_ERR_INVALID_ARGUMENT = 5,
  CSM_ERR_INTERNAL = 6
} csm_status;

typedef enum csm_degree {
  CSM_DEGREE_NOSPEC = 0,
  CSM_DEGREE_FAIL = 1,
  CSM_DEGREE_PARTIAL = 2,
  CSM_DEGREE_EXACT = 3,
  CSM_DEGREE_SUPER = 4
} csm_degree;

typedef struct csm_catalog csm_catalog;
typedef struct csm_request csm_request;
typedef struct csm_ranking csm_ranking;

typedef struct csm_match_options {
  int strict_missing;       /* nonzero: a missing spec fails a hard constraint */
  int normalize_difference; /* nonzero: scale difference violations to 0..1000 */
} csm_match_options;

typedef struct csm_report_view {
  int64_t service_id;
  const char* name;
  int hard_feasible;
  int64_t total_points;
  int64_t total_violation;
  int64_t final_score;
  size_t property_count;
} csm_report_view;

typedef struct csm_property_view {
  const char* property_id;
  int soft;
  csm_degree degree;
  int64_t points;
  int64_t violation;
} csm_property_view;

CSM_API const char* csm_version(void);
CSM_API const char* csm_degree_name(csm_degree degree);
CSM_API void csm_string_free(char* s);

CSM_API const char* csm_last_error_message(void);
CSM_API size_t csm_last_error_issue_count(void);
/* CSM_ERR_NOT_FOUND past the last issue. */
CSM_API csm_status csm_last_error_issue(size_t index, const char** path, const char** message);

CSM_API csm_status csm_catalog_load(const char* data, size_t length, csm_catalog** out);
CSM_API csm_status csm_catalog_load_file(const char* path, csm_catalog** out);
CSM_API void csm_catalog_free(csm_catalog* catalog);
CSM_API size_t csm_catalog_service_count(const csm_catalog* catalog);
CSM_API size_t csm_catalog_property_count(const csm_catalog* catalog);
CSM_API csm_status csm_catalog_save(const csm_catalog* catalog, char** out);
CSM_API csm_status csm_catalog_properties_json(const csm_catalog* catalog, char** out);
CSM_API csm_status csm_catalog_services_json(const csm_catalog* catalog, char** out);
/* CSM_ERR_NOT_FOUND when no service has this id. */
CSM_API csm_status csm_catalog_service_json(const csm_catalog* catalog, int64_t service_id,
                                            char** out);

CSM_API csm_status csm_request_load(const csm_catalog* catalog, const char* data, size_t length,
                                    csm_request** out);
CSM_API csm_status csm_request_load_file(const csm_catalog* catalog, const char* path,
                                         csm_request** out);
CSM_API void csm_request_free(csm_request* request);

/* options may be NULL for defaults. The ranking keeps the catalog and request
 * alive on its own; either may be freed first. */
CSM_API csm_status csm_match(const csm_catalog* catalog, const csm_request* request,
                             const csm_match_options* options, csm_ranking** out);
CSM_API void csm_ranking_free(csm_ranking* ranking);
CSM_API size_t csm_ranking_size(const csm_ranking* ranking);
CSM_API size_t csm_ranking_feasible_count(const csm_ranking* ranking);
CSM_API int64_t csm_ranking_timing_ms(const csm_ranking* ranking);
/* Index-taking accessors return CSM_ERR_NOT_FOUND when out of range. */
CSM_API csm_status csm_ranking_report(const csm_ranking* ranking, size_t index,
                                      csm_report_view* out);
CSM_API csm_status csm_ranking_property(const csm_ranking* ranking, size_t index,
                                        size_t property, csm_property_view* out);
/* The full match response document: request echo, ranking, timing. */
CSM_API csm_status csm_ranking_response_json(const csm_ranking* ranking, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CSM_CSM_H_ */
