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

// Direct evaluation of a request against every service. Shares only the data
// types and the operator rule with the solver path.

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <stdexcept>
#include <tuple>

#include "csm/matcher.hpp"

namespace csm {
namespace {

bool Compare(std::int64_t spec, RequestOp op, std::int64_t requested) {
  return op == RequestOp::kEq ? spec == requested
         : op == RequestOp::kLe ? spec <= requested
                                : spec >= requested;
}

const std::int64_t* ScalarOf(const ServiceDescription& s, const std::string& property) {
  return std::get_if<std::int64_t>(&s.spec(property));
}

// Unweighted difference cost of every service for one soft property.
std::vector<std::int64_t> DifferenceCosts(const Catalog& catalog, const RequestConstraint& c,
                                          bool normalize) {
  std::vector<std::int64_t> known;
  for (const ServiceDescription& s : catalog.services) {
    if (const auto* v = ScalarOf(s, c.property_id)) known.push_back(*v);
  }
  const std::int64_t range =
      known.empty() ? 0
                    : *std::max_element(known.begin(), known.end()) -
                          *std::min_element(known.begin(), known.end());
  std::vector<std::int64_t> costs;
  for (const ServiceDescription& s : catalog.services) {
    const auto* v = ScalarOf(s, c.property_id);
    costs.push_back(v ? std::llabs(*v - c.scalar()) : range);
  }
  if (!normalize) return costs;
  const std::int64_t largest = costs.empty() ? 0 : *std::max_element(costs.begin(), costs.end());
  for (std::int64_t& cost : costs) {
    if (largest == 0) {
      cost = 0;
      continue;
    }
    // round(1000 * cost / largest), halves upward
    const std::int64_t num = 1000 * cost;
    std::int64_t q = num / largest;
    if ((num % largest) * 2 >= largest) ++q;
    cost = q;
  }
  return costs;
}

}  // namespace

MatchRanking OracleMatch(const Catalog& catalog, const ServiceRequest& request,
                         const MatchOptions& options) {
  const bool normalize = options.normalize_difference || request.normalize_difference;
  const bool difference = request.objective == ObjectiveMode::kDifferenceViolation;

  std::vector<std::vector<std::int64_t>> diff_costs(request.constraints.size());
  for (std::size_t i = 0; i < request.constraints.size(); ++i) {
    const RequestConstraint& c = request.constraints[i];
    const PropertySchema* p = catalog.find_property(c.property_id);
    if (!p) throw std::invalid_argument("unknown property '" + c.property_id + "'");
    if (difference && !c.hard() && p->kind != PropertyKind::kFeatureList) {
      diff_costs[i] = DifferenceCosts(catalog, c, normalize);
    }
  }

  MatchRanking ranking;
  for (std::size_t x = 0; x < catalog.services.size(); ++x) {
    const ServiceDescription& service = catalog.services[x];
    MatchReport report;
    report.service_id = service.service_id;
    report.name = service.name;
    report.hard_feasible = true;

    for (std::size_t i = 0; i < request.constraints.size(); ++i) {
      const RequestConstraint& c = request.constraints[i];
      const PropertySchema& p = *catalog.find_property(c.property_id);
      PropertyResult r;
      r.property_id = c.property_id;
      r.mode = c.mode;

      if (p.kind == PropertyKind::kFeatureList) {
        const auto* provided = std::get_if<FeatureSet>(&service.spec(c.property_id));
        const FeatureSet& wanted = c.features();
        if (!provided || provided->empty()) {
          r.degree = MatchingDegree::kNoSpec;
        } else {
          std::set_intersection(provided->begin(), provided->end(), wanted.begin(), wanted.end(),
                                std::back_inserter(r.solution_set));
          if (r.solution_set.empty()) {
            r.degree = MatchingDegree::kFail;
          } else if (wanted.size() > r.solution_set.size()) {
            r.degree = MatchingDegree::kPartial;
          } else if (provided->size() == r.solution_set.size()) {
            r.degree = MatchingDegree::kExact;
          } else {
            r.degree = MatchingDegree::kSuper;
          }
        }
      } else {
        const auto* v = ScalarOf(service, c.property_id);
        const bool ok = v && Compare(*v, EffectiveOperator(p, c), c.scalar());
        r.degree = !v ? MatchingDegree::kNoSpec : ok ? MatchingDegree::kExact : MatchingDegree::kFail;
        if (!c.hard()) {
          const std::int64_t w = c.weight.value_or(1);
          r.violation = difference ? w * diff_costs[i][x] : (ok ? 0 : w);
        }
      }

      if (c.hard()) {
        switch (r.degree) {
          case MatchingDegree::kSuper: r.points = 3; break;
          case MatchingDegree::kExact: r.points = 2; break;
          case MatchingDegree::kPartial: r.points = 1; break;
          case MatchingDegree::kFail: report.hard_feasible = false; break;
          case MatchingDegree::kNoSpec:
            if (options.strict_missing) report.hard_feasible = false;
            break;
        }
        report.total_points += r.points;
      } else {
        report.total_violation += r.violation;
      }
      report.property_results.push_back(std::move(r));
    }
    report.final_score = report.total_points - report.total_violation;
    ranking.reports.push_back(std::move(report));
  }

  std::sort(ranking.reports.begin(), ranking.reports.end(),
            [](const MatchReport& a, const MatchReport& b) {
              return std::make_tuple(!a.hard_feasible, -a.final_score, a.total_violation,
                                     a.service_id) <
                     std::make_tuple(!b.hard_feasible, -b.final_score, b.total_violation,
                                     b.service_id);
            });
  return ranking;
}

}  // namespace csm
