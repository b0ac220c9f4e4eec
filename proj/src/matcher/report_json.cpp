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

#include "csm/report_json.hpp"

#include "csm/catalog_io.hpp"

namespace csm {

using nlohmann::json;

json ReportToJson(const MatchReport& report, const Catalog& catalog, std::size_t rank) {
  json properties = json::array();
  for (const PropertyResult& r : report.property_results) {
    json p = {
        {"property", r.property_id},
        {"mode", ToString(r.mode)},
        {"degree", ToString(r.degree)},
        {"points", r.points},
        {"violation", r.violation},
    };
    const PropertySchema* schema = catalog.find_property(r.property_id);
    if (schema && schema->kind == PropertyKind::kFeatureList) {
      p["solution_set"] = SpecToJson(*schema, r.solution_set);
    }
    properties.push_back(std::move(p));
  }
  return {
      {"rank", rank},
      {"service_id", report.service_id},
      {"name", report.name},
      {"hard_feasible", report.hard_feasible},
      {"total_points", report.total_points},
      {"total_violation", report.total_violation},
      {"final_score", report.final_score},
      {"properties", std::move(properties)},
  };
}

json RankingToJson(const MatchRanking& ranking, const Catalog& catalog) {
  json out = json::array();
  for (std::size_t i = 0; i < ranking.reports.size(); ++i) {
    out.push_back(ReportToJson(ranking.reports[i], catalog, i + 1));
  }
  return out;
}

json MatchResponseToJson(const ServiceRequest& request, const MatchRanking& ranking,
                         const Catalog& catalog, std::int64_t timing_ms) {
  return {
      {"request_echo", RequestToJson(request, catalog)},
      {"ranking", RankingToJson(ranking, catalog)},
      {"feasible_count", ranking.feasible_count()},
      {"timing_ms", timing_ms},
  };
}

json ServiceSummaryToJson(const ServiceDescription& service, const Catalog& catalog) {
  json values = json::object();
  for (const PropertySchema& p : catalog.schema) {
    json v = SpecToJson(p, service.spec(p.id));
    // Enumerations display as their single label.
    if (p.kind == PropertyKind::kEnumeration && v.is_array()) v = v[0];
    values[p.id] = std::move(v);
  }
  return {{"service_id", service.service_id}, {"name", service.name}, {"values", std::move(values)}};
}

json IssuesToJson(const std::vector<Issue>& issues) {
  json out = json::array();
  for (const Issue& i : issues) out.push_back({{"path", i.path}, {"message", i.message}});
  return out;
}

}  // namespace csm
