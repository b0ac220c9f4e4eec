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

#ifndef CSM_REPORT_JSON_HPP_
#define CSM_REPORT_JSON_HPP_

#include <cstdint>
#include <vector>

#include "csm/catalog.hpp"
#include "csm/matcher.hpp"
#include "json.hpp"

namespace csm {

// rank is 1-based.
nlohmann::json ReportToJson(const MatchReport& report, const Catalog& catalog, std::size_t rank);
nlohmann::json RankingToJson(const MatchRanking& ranking, const Catalog& catalog);

// {"request": ..., "ranking": [...], "feasible_count": n, "timing_ms": t}
nlohmann::json MatchResponseToJson(const ServiceRequest& request, const MatchRanking& ranking,
                                   const Catalog& catalog, std::int64_t timing_ms);

// {"service_id", "name", "values": {property: unscaled display value}}
nlohmann::json ServiceSummaryToJson(const ServiceDescription& service, const Catalog& catalog);

nlohmann::json IssuesToJson(const std::vector<Issue>& issues);

}  // namespace csm

#endif  // CSM_REPORT_JSON_HPP_
