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

#include "csm/catalog.hpp"

#include <algorithm>

namespace csm {

ValidationError::ValidationError(std::vector<Issue> issues)
    : std::runtime_error([&issues] {
        std::string what = "validation failed:";
        for (const Issue& i : issues) what += "\n  " + i.path + ": " + i.message;
        return what;
      }()),
      issues_(std::move(issues)) {}

std::optional<std::int64_t> PropertySchema::code_of(std::string_view label) const {
  auto it = std::find(enum_values.begin(), enum_values.end(), label);
  if (it == enum_values.end()) return std::nullopt;
  return static_cast<std::int64_t>(it - enum_values.begin());
}

const SpecValue& ServiceDescription::spec(std::string_view property_id) const {
  static const SpecValue kMissing = Missing{};
  auto it = specs.find(property_id);
  return it == specs.end() ? kMissing : it->second;
}

const PropertySchema* Catalog::find_property(std::string_view id) const {
  for (const PropertySchema& p : schema) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

RequestOp EffectiveOperator(const PropertySchema& schema,
                            const RequestConstraint& constraint) {
  if (schema.tendency == Tendency::kRequesterDefined) {
    return constraint.direction == Direction::kHigh ? RequestOp::kGe : RequestOp::kLe;
  }
  switch (schema.kind) {
    case PropertyKind::kInterval:
      return schema.tendency == Tendency::kHighPreferred ? RequestOp::kGe : RequestOp::kLe;
    case PropertyKind::kDiscrete:
    case PropertyKind::kEnumeration:
    case PropertyKind::kFeatureList:
      break;
  }
  return RequestOp::kEq;
}

bool Satisfies(std::int64_t spec, RequestOp op, std::int64_t requested) {
  switch (op) {
    case RequestOp::kEq: return spec == requested;
    case RequestOp::kLe: return spec <= requested;
    case RequestOp::kGe: return spec >= requested;
  }
  return false;
}

std::string_view ToString(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::kDiscrete: return "discrete";
    case PropertyKind::kInterval: return "interval";
    case PropertyKind::kEnumeration: return "enumeration";
    case PropertyKind::kFeatureList: return "feature_list";
  }
  return "";
}

std::string_view ToString(Tendency tendency) {
  switch (tendency) {
    case Tendency::kLowPreferred: return "low";
    case Tendency::kHighPreferred: return "high";
    case Tendency::kNeutral: return "neutral";
    case Tendency::kRequesterDefined: return "requester_defined";
  }
  return "";
}

std::string_view ToString(RequestOp op) {
  switch (op) {
    case RequestOp::kEq: return "eq";
    case RequestOp::kLe: return "lte";
    case RequestOp::kGe: return "gte";
  }
  return "";
}

std::string_view ToString(Hardness mode) {
  return mode == Hardness::kHard ? "hard" : "soft";
}

std::string_view ToString(Direction direction) {
  return direction == Direction::kHigh ? "high" : "low";
}

std::string_view ToString(ObjectiveMode mode) {
  return mode == ObjectiveMode::kBooleanViolation ? "boolean" : "difference";
}

}  // namespace csm
