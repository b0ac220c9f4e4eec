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

#ifndef CSM_CATALOG_HPP_
#define CSM_CATALOG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csm/error.hpp"

namespace csm {

enum class PropertyKind { kDiscrete, kInterval, kEnumeration, kFeatureList };

// Which side of a value range a requester is better served by.
enum class Tendency { kLowPreferred, kHighPreferred, kNeutral, kRequesterDefined };

struct PropertySchema {
  std::string id;
  std::string display_name;
  PropertyKind kind = PropertyKind::kDiscrete;
  Tendency tendency = Tendency::kNeutral;
  std::string unit;
  // Power of ten mapping real values onto internal integers.
  std::int64_t scale = 1;
  // Labels for enumeration and feature-list kinds; code = position.
  std::vector<std::string> enum_values;

  bool is_scalar() const { return kind != PropertyKind::kFeatureList; }
  std::optional<std::int64_t> code_of(std::string_view label) const;
  bool operator==(const PropertySchema&) const = default;
};

struct Missing {
  bool operator==(const Missing&) const = default;
};

// Sorted, duplicate-free enumeration codes.
using FeatureSet = std::vector<std::int64_t>;

// Scalars are already scaled; enumeration specs are stored as their code.
using SpecValue = std::variant<Missing, std::int64_t, FeatureSet>;

struct ServiceDescription {
  std::int64_t service_id = 0;
  std::string name;
  // Holds an entry for every schema property once loaded.
  std::map<std::string, SpecValue, std::less<>> specs;

  const SpecValue& spec(std::string_view property_id) const;
  bool operator==(const ServiceDescription&) const = default;
};

struct Catalog {
  std::vector<PropertySchema> schema;
  std::vector<ServiceDescription> services;

  const PropertySchema* find_property(std::string_view id) const;
  bool operator==(const Catalog&) const = default;
};

enum class RequestOp { kEq, kLe, kGe };
enum class Hardness { kHard, kSoft };
enum class Direction { kLow, kHigh };
enum class ObjectiveMode { kBooleanViolation, kDifferenceViolation };

struct RequestConstraint {
  std::string property_id;
  RequestOp op = RequestOp::kEq;
  std::variant<std::int64_t, FeatureSet> value;
  Hardness mode = Hardness::kHard;
  // Present iff mode is kSoft.
  std::optional<std::int64_t> weight;
  // Present iff the property's tendency is kRequesterDefined.
  std::optional<Direction> direction;

  bool hard() const { return mode == Hardness::kHard; }
  std::int64_t scalar() const { return std::get<std::int64_t>(value); }
  const FeatureSet& features() const { return std::get<FeatureSet>(value); }
  bool operator==(const RequestConstraint&) const = default;
};

struct ServiceRequest {
  std::vector<RequestConstraint> constraints;
  ObjectiveMode objective = ObjectiveMode::kBooleanViolation;
  // Scale each soft distance into 0..1000 by the largest per-property distance.
  bool normalize_difference = false;

  bool operator==(const ServiceRequest&) const = default;
};

// The comparison a spec value must satisfy against the requested value. The
// requester's bound on the non-preferred side of an interval is ignored.
RequestOp EffectiveOperator(const PropertySchema& schema,
                            const RequestConstraint& constraint);

// spec op requested, for scalar values.
bool Satisfies(std::int64_t spec, RequestOp op, std::int64_t requested);

std::string_view ToString(PropertyKind kind);
std::string_view ToString(Tendency tendency);
std::string_view ToString(RequestOp op);
std::string_view ToString(Hardness mode);
std::string_view ToString(Direction direction);
std::string_view ToString(ObjectiveMode mode);

// Scaled magnitudes beyond this bound are rejected at load time so that
// weighted distances stay far from int64 overflow.
inline constexpr std::int64_t kMaxScaledMagnitude = 1'000'000'000'000;
inline constexpr std::int64_t kMaxScale = 1'000'000'000;
inline constexpr std::int64_t kMaxWeight = 10'000;

// Exact decimal scaling of a double, rounding half-up (toward +infinity on a
// tie). nullopt when the result exceeds kMaxScaledMagnitude or the input is
// not finite.
std::optional<std::int64_t> ScaleDecimal(double value, std::int64_t scale);
std::optional<std::int64_t> ScaleInteger(std::int64_t value, std::int64_t scale);
// The double nearest to scaled / scale.
double Unscale(std::int64_t scaled, std::int64_t scale);

}  // namespace csm

#endif  // CSM_CATALOG_HPP_
