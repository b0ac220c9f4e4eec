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

#include <algorithm>

#include "csm/matcher.hpp"

namespace csm {

FeatureMatch MatchFeatureList(std::span<const std::int64_t> provided,
                              std::span<const std::int64_t> required) {
  FeatureMatch out;
  if (provided.empty()) return out;

  fd::Problem problem;
  const fd::VarId position = problem.add_variable(
      "providedIndex", 0, static_cast<std::int64_t>(provided.size()) - 1);
  const fd::VarId query = problem.add_variable(
      "query", std::vector<std::int64_t>(required.begin(), required.end()));
  problem.post_element(std::vector<std::int64_t>(provided.begin(), provided.end()), position,
                       fd::Op::kEq, query);
  for (const fd::Solution& s : problem.solve_all()) {
    out.matches.emplace_back(s.at("providedIndex"), s.at("query"));
    out.solution_set.push_back(s.at("query"));
  }
  std::sort(out.solution_set.begin(), out.solution_set.end());
  out.solution_set.erase(std::unique(out.solution_set.begin(), out.solution_set.end()),
                         out.solution_set.end());

  // Set sizes; duplicates in the inputs do not count twice.
  auto distinct = [](std::span<const std::int64_t> codes) {
    std::vector<std::int64_t> v(codes.begin(), codes.end());
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  const std::size_t s = out.solution_set.size();
  if (s == 0) {
    out.degree = MatchingDegree::kFail;
  } else if (distinct(required) > s) {
    out.degree = MatchingDegree::kPartial;
  } else if (distinct(provided) == s) {
    out.degree = MatchingDegree::kExact;
  } else {
    out.degree = MatchingDegree::kSuper;
  }
  return out;
}

FeatureMatch MatchFeatureList(const SpecValue& provided, const FeatureSet& required) {
  if (const auto* codes = std::get_if<FeatureSet>(&provided)) {
    return MatchFeatureList(std::span<const std::int64_t>(*codes), required);
  }
  return {};
}

}  // namespace csm
