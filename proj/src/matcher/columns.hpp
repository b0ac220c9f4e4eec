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

#ifndef CSM_SRC_MATCHER_COLUMNS_HPP_
#define CSM_SRC_MATCHER_COLUMNS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "csm/catalog.hpp"

namespace csm::detail {

// One property's scalar specs across all services; nullopt where missing.
std::vector<std::optional<std::int64_t>> ScalarColumn(const Catalog& catalog,
                                                      std::string_view property_id);

// A soft property recast for the difference objective: every service gets an
// effective value whose distance to `reference` is its unweighted violation.
// A missing spec sits at the column's range from the reference.
struct DistanceColumn {
  std::vector<std::int64_t> effective;
  std::int64_t reference = 0;
  std::int64_t max_distance = 0;
};

DistanceColumn MakeDistanceColumn(const Catalog& catalog, const RequestConstraint& constraint,
                                  bool normalize);

}  // namespace csm::detail

#endif  // CSM_SRC_MATCHER_COLUMNS_HPP_
