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

#ifndef CSM_MATCHER_HPP_
#define CSM_MATCHER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csm/catalog.hpp"
#include "csm/fd/problem.hpp"

namespace csm {

// How well one service specification meets one requested property.
enum class MatchingDegree { kNoSpec, kFail, kPartial, kExact, kSuper };

std::string_view ToString(MatchingDegree degree);
// Ranking points for a hard constraint: SUPER 3, EXACT 2, PARTIAL 1, else 0.
std::int64_t Points(MatchingDegree degree);

struct PropertyResult {
  std::string property_id;
  Hardness mode = Hardness::kHard;
  MatchingDegree degree = MatchingDegree::kNoSpec;
  std::int64_t points = 0;
  std::int64_t violation = 0;
  // Matched codes; feature lists only.
  FeatureSet solution_set;

  bool operator==(const PropertyResult&) const = default;
};

struct MatchReport {
  std::int64_t service_id = 0;
  std::string name;
  // One entry per request constraint, in request order.
  std::vector<PropertyResult> property_results;
  std::int64_t total_points = 0;
  std::int64_t total_violation = 0;
  std::int64_t final_score = 0;
  bool hard_feasible = true;

  bool operator==(const MatchReport&) const = default;
};

struct MatchRanking {
  std::vector<MatchReport> reports;
  std::size_t feasible_count() const;
  bool operator==(const MatchRanking&) const = default;
};

struct MatchOptions {
  // Treat a missing spec under a hard constraint as infeasible.
  bool strict_missing = false;
  // Normalize difference violations per property; the request's own flag is
  // honored as well.
  bool normalize_difference = false;
};

struct ModelOptions {
  // Post hard constraints on the index variable (soft builders only).
  bool post_hard = true;
  // Exclude services missing a hard-constrained spec; otherwise a missing
  // spec passes the hard constraint.
  bool strict_missing = true;
  bool normalize_difference = false;
};

// Variable names used by the model builders.
inline constexpr std::string_view kServiceIndexVar = "serviceIndex";
inline constexpr std::string_view kServiceIdVar = "serviceId";
inline constexpr std::string_view kViolationSumVar = "violationSum";
std::string ViolationVarName(std::string_view property_id);

// Index variable over the services plus one element constraint per hard
// scalar constraint. Soft and feature-list constraints are ignored.
fd::Problem BuildModelHard(const Catalog& catalog, const ServiceRequest& request,
                           const ModelOptions& options = {});

// Index model where each soft scalar constraint is reified and charged its
// weight when unsatisfied; minimizes the violation sum.
fd::Problem BuildModelSoftBoolean(const Catalog& catalog, const ServiceRequest& request,
                                  const ModelOptions& options = {});

// Variable model: one variable per soft property whose domain is the
// property's column, channeled to the service id by equivalences; minimizes
// the weighted sum of |spec - requested|.
fd::Problem BuildModelSoftDifference(const Catalog& catalog, const ServiceRequest& request,
                                     const ModelOptions& options = {});

struct FeatureMatch {
  FeatureSet solution_set;
  MatchingDegree degree = MatchingDegree::kNoSpec;
  // (position in the provided list, matched code) for every CSP solution.
  std::vector<std::pair<std::int64_t, std::int64_t>> matches;
};

// Solves one element CSP linking positions of `provided` to requested codes.
FeatureMatch MatchFeatureList(std::span<const std::int64_t> provided,
                              std::span<const std::int64_t> required);
FeatureMatch MatchFeatureList(const SpecValue& provided, const FeatureSet& required);

MatchingDegree DegreeOfScalar(const SpecValue& spec, const RequestConstraint& constraint,
                              const PropertySchema& schema);

// Fills totals, final score and feasibility from the property results.
MatchReport Score(MatchReport report, bool strict_missing = false);

// Ranking order: feasible first, then higher score, lower violation, lower id.
bool RanksBefore(const MatchReport& a, const MatchReport& b);

MatchRanking Match(const Catalog& catalog, const ServiceRequest& request,
                   const MatchOptions& options = {});

// Same ranking computed by direct evaluation of every service against every
// constraint, with no solver involved.
MatchRanking OracleMatch(const Catalog& catalog, const ServiceRequest& request,
                         const MatchOptions& options = {});

}  // namespace csm

#endif  // CSM_MATCHER_HPP_
