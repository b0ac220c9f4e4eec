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

#include "csm/matcher.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace csm {

std::string_view ToString(MatchingDegree degree) {
  switch (degree) {
    case MatchingDegree::kNoSpec: return "NOSPEC";
    case MatchingDegree::kFail: return "FAIL";
    case MatchingDegree::kPartial: return "PARTIAL";
    case MatchingDegree::kExact: return "EXACT";
    case MatchingDegree::kSuper: return "SUPER";
  }
  return "";
}

std::int64_t Points(MatchingDegree degree) {
  switch (degree) {
    case MatchingDegree::kSuper: return 3;
    case MatchingDegree::kExact: return 2;
    case MatchingDegree::kPartial: return 1;
    case MatchingDegree::kFail:
    case MatchingDegree::kNoSpec: return 0;
  }
  return 0;
}

std::size_t MatchRanking::feasible_count() const {
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [](const MatchReport& r) { return r.hard_feasible; }));
}

MatchingDegree DegreeOfScalar(const SpecValue& spec, const RequestConstraint& constraint,
                              const PropertySchema& schema) {
  const auto* value = std::get_if<std::int64_t>(&spec);
  if (!value) return MatchingDegree::kNoSpec;
  return Satisfies(*value, EffectiveOperator(schema, constraint), constraint.scalar())
             ? MatchingDegree::kExact
             : MatchingDegree::kFail;
}

MatchReport Score(MatchReport report, bool strict_missing) {
  report.total_points = 0;
  report.total_violation = 0;
  report.hard_feasible = true;
  for (const PropertyResult& r : report.property_results) {
    if (r.mode == Hardness::kHard) {
      report.total_points += r.points;
      if (r.degree == MatchingDegree::kFail ||
          (strict_missing && r.degree == MatchingDegree::kNoSpec)) {
        report.hard_feasible = false;
      }
    } else {
      report.total_violation += r.violation;
    }
  }
  report.final_score = report.total_points - report.total_violation;
  return report;
}

bool RanksBefore(const MatchReport& a, const MatchReport& b) {
  if (a.hard_feasible != b.hard_feasible) return a.hard_feasible;
  if (a.final_score != b.final_score) return a.final_score > b.final_score;
  if (a.total_violation != b.total_violation) return a.total_violation < b.total_violation;
  return a.service_id < b.service_id;
}

namespace {

std::set<std::int64_t> SolutionIndices(const std::vector<fd::Solution>& solutions,
                                       std::string_view var) {
  std::set<std::int64_t> out;
  for (const fd::Solution& s : solutions) out.insert(s.at(var));
  return out;
}

}  // namespace

MatchRanking Match(const Catalog& catalog, const ServiceRequest& request,
                   const MatchOptions& options) {
  MatchRanking ranking;
  const std::size_t n = catalog.services.size();
  if (n == 0) return ranking;

  std::vector<MatchReport> reports(n);
  for (std::size_t x = 0; x < n; ++x) {
    reports[x].service_id = catalog.services[x].service_id;
    reports[x].name = catalog.services[x].name;
    reports[x].property_results.reserve(request.constraints.size());
  }

  ServiceRequest hard_scalars;
  ServiceRequest softs;
  softs.objective = request.objective;
  bool any_soft = false;

  for (const RequestConstraint& c : request.constraints) {
    const PropertySchema* schema = catalog.find_property(c.property_id);
    if (!schema) throw std::invalid_argument("unknown property '" + c.property_id + "'");

    if (!schema->is_scalar()) {
      for (std::size_t x = 0; x < n; ++x) {
        const FeatureMatch fm = MatchFeatureList(catalog.services[x].spec(c.property_id),
                                                 c.features());
        PropertyResult r{c.property_id, c.mode, fm.degree, 0, 0, fm.solution_set};
        r.points = c.hard() ? Points(fm.degree) : 0;
        reports[x].property_results.push_back(std::move(r));
      }
      continue;
    }

    if (c.hard()) {
      // Per-constraint Model #1 problem: which services satisfy it.
      ServiceRequest single;
      single.constraints.push_back(c);
      const auto satisfied =
          SolutionIndices(BuildModelHard(catalog, single, {}).solve_all(), kServiceIndexVar);
      for (std::size_t x = 0; x < n; ++x) {
        const bool missing =
            std::holds_alternative<Missing>(catalog.services[x].spec(c.property_id));
        const MatchingDegree degree =
            missing ? MatchingDegree::kNoSpec
                    : (satisfied.contains(static_cast<std::int64_t>(x)) ? MatchingDegree::kExact
                                                                        : MatchingDegree::kFail);
        reports[x].property_results.push_back({c.property_id, c.mode, degree, Points(degree), 0, {}});
      }
      hard_scalars.constraints.push_back(c);
    } else {
      for (std::size_t x = 0; x < n; ++x) {
        const MatchingDegree degree =
            DegreeOfScalar(catalog.services[x].spec(c.property_id), c, *schema);
        reports[x].property_results.push_back({c.property_id, c.mode, degree, 0, 0, {}});
      }
      softs.constraints.push_back(c);
      any_soft = true;
    }
  }

  if (any_soft) {
    ModelOptions model;
    model.post_hard = false;
    model.normalize_difference = options.normalize_difference || request.normalize_difference;
    const bool difference = request.objective == ObjectiveMode::kDifferenceViolation;
    const fd::Problem problem = difference ? BuildModelSoftDifference(catalog, softs, model)
                                           : BuildModelSoftBoolean(catalog, softs, model);
    const std::string_view index_var = difference ? kServiceIdVar : kServiceIndexVar;
    const std::vector<fd::Solution> ranked = problem.solve_optimal();
    if (ranked.size() != n) {
      throw std::logic_error("soft model must yield exactly one solution per service");
    }
    for (const fd::Solution& s : ranked) {
      MatchReport& report = reports[static_cast<std::size_t>(s.at(index_var))];
      for (PropertyResult& r : report.property_results) {
        if (r.mode == Hardness::kSoft) r.violation = s.at(ViolationVarName(r.property_id));
      }
    }
  }

  for (MatchReport& report : reports) report = Score(std::move(report), options.strict_missing);

  // The conjunction of hard scalar constraints, solved as one problem, must
  // agree with the per-constraint degrees.
  if (!hard_scalars.constraints.empty()) {
    ModelOptions model;
    model.strict_missing = options.strict_missing;
    const auto feasible = SolutionIndices(BuildModelHard(catalog, hard_scalars, model).solve_all(),
                                          kServiceIndexVar);
    for (std::size_t x = 0; x < n; ++x) {
      bool scalar_ok = true;
      for (const PropertyResult& r : reports[x].property_results) {
        const PropertySchema* schema = catalog.find_property(r.property_id);
        if (r.mode != Hardness::kHard || !schema->is_scalar()) continue;
        if (r.degree == MatchingDegree::kFail ||
            (options.strict_missing && r.degree == MatchingDegree::kNoSpec)) {
          scalar_ok = false;
        }
      }
      if (scalar_ok != feasible.contains(static_cast<std::int64_t>(x))) {
        throw std::logic_error("hard model disagrees with per-constraint degrees");
      }
    }
  }

  ranking.reports = std::move(reports);
  std::sort(ranking.reports.begin(), ranking.reports.end(), RanksBefore);
  return ranking;
}

}  // namespace csm
