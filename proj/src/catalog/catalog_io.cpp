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

#include "csm/catalog_io.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace csm {
namespace {

using json = nlohmann::json;

class Issues {
 public:
  void add(std::string path, std::string message) {
    list_.push_back({std::move(path), std::move(message)});
  }
  bool empty() const { return list_.empty(); }
  void throw_if_any() {
    if (!list_.empty()) throw ValidationError(std::move(list_));
  }

 private:
  std::vector<Issue> list_;
};

json Parse(std::string_view document) {
  try {
    return json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string Index(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

std::string Field(const std::string& base, std::string_view name) {
  return base.empty() ? std::string(name) : base + "." + std::string(name);
}

const json* Require(const json& obj, std::string_view name, const std::string& path,
                    Issues& issues) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    issues.add(Field(path, name), "required field is missing");
    return nullptr;
  }
  return &*it;
}

std::optional<std::string> RequireString(const json& obj, std::string_view name,
                                         const std::string& path, Issues& issues) {
  const json* v = Require(obj, name, path, issues);
  if (!v) return std::nullopt;
  if (!v->is_string()) {
    issues.add(Field(path, name), "expected a string");
    return std::nullopt;
  }
  return v->get<std::string>();
}

std::optional<std::string> OptionalString(const json& obj, std::string_view name,
                                          const std::string& path, Issues& issues) {
  auto it = obj.find(name);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_string()) {
    issues.add(Field(path, name), "expected a string");
    return std::nullopt;
  }
  return it->get<std::string>();
}

template <typename Enum, std::size_t N>
std::optional<Enum> ParseEnum(const std::optional<std::string>& text,
                              const std::array<std::pair<std::string_view, Enum>, N>& table,
                              const std::string& path, Issues& issues) {
  if (!text) return std::nullopt;
  for (const auto& [name, value] : table) {
    if (name == *text) return value;
  }
  std::string allowed;
  for (const auto& entry : table) {
    if (!allowed.empty()) allowed += ", ";
    allowed += "\"" + std::string(entry.first) + "\"";
  }
  issues.add(path, "unknown value \"" + *text + "\" (expected one of " + allowed + ")");
  return std::nullopt;
}

constexpr std::array<std::pair<std::string_view, PropertyKind>, 4> kKinds{{
    {"discrete", PropertyKind::kDiscrete},
    {"interval", PropertyKind::kInterval},
    {"enumeration", PropertyKind::kEnumeration},
    {"feature_list", PropertyKind::kFeatureList},
}};
constexpr std::array<std::pair<std::string_view, Tendency>, 4> kTendencies{{
    {"low", Tendency::kLowPreferred},
    {"high", Tendency::kHighPreferred},
    {"neutral", Tendency::kNeutral},
    {"requester_defined", Tendency::kRequesterDefined},
}};
constexpr std::array<std::pair<std::string_view, RequestOp>, 3> kOps{{
    {"eq", RequestOp::kEq},
    {"lte", RequestOp::kLe},
    {"gte", RequestOp::kGe},
}};
constexpr std::array<std::pair<std::string_view, Hardness>, 2> kModes{{
    {"hard", Hardness::kHard},
    {"soft", Hardness::kSoft},
}};
constexpr std::array<std::pair<std::string_view, Direction>, 2> kDirections{{
    {"low", Direction::kLow},
    {"high", Direction::kHigh},
}};
constexpr std::array<std::pair<std::string_view, ObjectiveMode>, 2> kObjectives{{
    {"boolean", ObjectiveMode::kBooleanViolation},
    {"difference", ObjectiveMode::kDifferenceViolation},
}};

bool IsPowerOfTen(std::int64_t v) {
  if (v < 1) return false;
  while (v % 10 == 0) v /= 10;
  return v == 1;
}

// Scaled integer for a JSON number, or nullopt with an issue recorded.
std::optional<std::int64_t> ScaledNumber(const json& v, const PropertySchema& property,
                                         const std::string& path, Issues& issues) {
  if (!v.is_number()) {
    issues.add(path, "expected a number");
    return std::nullopt;
  }
  std::optional<std::int64_t> scaled;
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxScaledMagnitude)) {
      scaled = std::nullopt;
    } else {
      scaled = ScaleInteger(v.get<std::int64_t>(), property.scale);
    }
  } else {
    scaled = ScaleDecimal(v.get<double>(), property.scale);
  }
  if (!scaled) issues.add(path, "number is out of the supported range");
  return scaled;
}

std::optional<std::int64_t> EnumCode(const json& v, const PropertySchema& property,
                                     const std::string& path, Issues& issues) {
  const json* label = &v;
  if (v.is_array() && v.size() == 1) label = &v[0];
  if (!label->is_string()) {
    issues.add(path, "expected a label string");
    return std::nullopt;
  }
  const auto code = property.code_of(label->get<std::string>());
  if (!code) {
    issues.add(path, "\"" + label->get<std::string>() + "\" is not a value of enumeration '" +
                         property.id + "'");
  }
  return code;
}

std::optional<FeatureSet> FeatureCodes(const json& v, const PropertySchema& property,
                                       const std::string& path, Issues& issues) {
  if (!v.is_array()) {
    issues.add(path, "expected an array of labels");
    return std::nullopt;
  }
  FeatureSet codes;
  bool ok = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string item_path = Index(path, i);
    if (!v[i].is_string()) {
      issues.add(item_path, "expected a label string");
      ok = false;
      continue;
    }
    const auto code = property.code_of(v[i].get<std::string>());
    if (!code) {
      issues.add(item_path, "\"" + v[i].get<std::string>() +
                                "\" is not a value of feature list '" + property.id + "'");
      ok = false;
      continue;
    }
    codes.push_back(*code);
  }
  if (!ok) return std::nullopt;
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::optional<PropertySchema> LoadProperty(const json& p, const std::string& path,
                                           Issues& issues) {
  if (!p.is_object()) {
    issues.add(path, "expected an object");
    return std::nullopt;
  }
  PropertySchema prop;
  bool ok = true;
  if (auto id = RequireString(p, "id", path, issues)) {
    if (id->empty()) {
      issues.add(Field(path, "id"), "must not be empty");
      ok = false;
    }
    prop.id = *id;
  } else {
    ok = false;
  }
  prop.display_name = OptionalString(p, "display_name", path, issues).value_or(prop.id);
  prop.unit = OptionalString(p, "unit", path, issues).value_or("");
  const auto kind = ParseEnum(RequireString(p, "kind", path, issues), kKinds,
                              Field(path, "kind"), issues);
  const auto tendency = ParseEnum(RequireString(p, "tendency", path, issues), kTendencies,
                                  Field(path, "tendency"), issues);
  if (!kind || !tendency) ok = false;
  if (kind) prop.kind = *kind;
  if (tendency) prop.tendency = *tendency;

  if (auto it = p.find("scale"); it != p.end()) {
    if (!it->is_number_integer() || !IsPowerOfTen(it->get<std::int64_t>()) ||
        it->get<std::int64_t>() > kMaxScale) {
      issues.add(Field(path, "scale"), "must be a power of ten between 1 and 1000000000");
      ok = false;
    } else {
      prop.scale = it->get<std::int64_t>();
    }
  }

  const bool labelled = kind && (*kind == PropertyKind::kEnumeration ||
                                 *kind == PropertyKind::kFeatureList);
  auto ev = p.find("enum_values");
  if (labelled) {
    if (ev == p.end()) {
      issues.add(Field(path, "enum_values"), "required for enumeration and feature_list kinds");
      ok = false;
    } else if (!ev->is_array() || ev->empty()) {
      issues.add(Field(path, "enum_values"), "expected a non-empty array of strings");
      ok = false;
    } else {
      std::set<std::string> seen;
      for (std::size_t i = 0; i < ev->size(); ++i) {
        const json& label = (*ev)[i];
        if (!label.is_string()) {
          issues.add(Index(Field(path, "enum_values"), i), "expected a string");
          ok = false;
        } else if (!seen.insert(label.get<std::string>()).second) {
          issues.add(Index(Field(path, "enum_values"), i),
                     "duplicate label \"" + label.get<std::string>() + "\"");
          ok = false;
        } else {
          prop.enum_values.push_back(label.get<std::string>());
        }
      }
    }
    if (tendency && *tendency != Tendency::kNeutral) {
      issues.add(Field(path, "tendency"), "must be \"neutral\" for " +
                                              std::string(ToString(*kind)) + " properties");
      ok = false;
    }
    if (prop.scale != 1) {
      issues.add(Field(path, "scale"), "must be 1 for labelled properties");
      ok = false;
    }
  } else if (kind) {
    if (ev != p.end()) {
      issues.add(Field(path, "enum_values"), "only allowed for enumeration and feature_list kinds");
      ok = false;
    }
    if (*kind == PropertyKind::kInterval && tendency && *tendency == Tendency::kNeutral) {
      issues.add(Field(path, "tendency"), "interval properties need a low, high or "
                                          "requester_defined tendency");
      ok = false;
    }
  }
  if (!ok) return std::nullopt;
  return prop;
}

std::optional<SpecValue> LoadSpec(const json& v, const PropertySchema& property,
                                  const std::string& path, Issues& issues) {
  if (v.is_null()) return SpecValue{Missing{}};
  switch (property.kind) {
    case PropertyKind::kDiscrete:
    case PropertyKind::kInterval:
      if (auto s = ScaledNumber(v, property, path, issues)) return SpecValue{*s};
      return std::nullopt;
    case PropertyKind::kEnumeration:
      if (auto c = EnumCode(v, property, path, issues)) return SpecValue{*c};
      return std::nullopt;
    case PropertyKind::kFeatureList:
      if (auto f = FeatureCodes(v, property, path, issues)) return SpecValue{*f};
      return std::nullopt;
  }
  return std::nullopt;
}

json Number(std::int64_t scaled, std::int64_t scale) {
  if (scaled % scale == 0) return json(scaled / scale);
  return json(Unscale(scaled, scale));
}

}  // namespace

Catalog LoadCatalog(std::string_view document) {
  const json doc = Parse(document);
  Issues issues;
  if (!doc.is_object()) {
    issues.add("$", "expected a JSON object");
    issues.throw_if_any();
  }
  Catalog catalog;
  const json* schema = Require(doc, "schema", "", issues);
  const json* services = Require(doc, "services", "", issues);
  if (schema && !schema->is_array()) {
    issues.add("schema", "expected an array");
    schema = nullptr;
  }
  if (services && !services->is_array()) {
    issues.add("services", "expected an array");
    services = nullptr;
  }

  std::set<std::string> known_ids;
  std::set<std::string> broken_ids;
  if (schema) {
    for (std::size_t i = 0; i < schema->size(); ++i) {
      const std::string path = Index("schema", i);
      auto prop = LoadProperty((*schema)[i], path, issues);
      if (!prop) {
        if ((*schema)[i].is_object()) {
          if (auto id = (*schema)[i].find("id"); id != (*schema)[i].end() && id->is_string()) {
            broken_ids.insert(id->get<std::string>());
          }
        }
        continue;
      }
      if (!known_ids.insert(prop->id).second) {
        issues.add(Field(path, "id"), "duplicate property id '" + prop->id + "'");
        continue;
      }
      catalog.schema.push_back(std::move(*prop));
    }
  }

  if (services) {
    for (std::size_t i = 0; i < services->size(); ++i) {
      const std::string path = Index("services", i);
      const json& s = (*services)[i];
      if (!s.is_object()) {
        issues.add(path, "expected an object");
        continue;
      }
      ServiceDescription svc;
      svc.service_id = static_cast<std::int64_t>(i);
      if (const json* id = Require(s, "id", path, issues)) {
        if (!id->is_number_integer() || id->get<std::int64_t>() != static_cast<std::int64_t>(i)) {
          issues.add(Field(path, "id"),
                     "service ids must be dense: expected " + std::to_string(i));
        }
      }
      svc.name = RequireString(s, "name", path, issues).value_or("");
      for (const PropertySchema& p : catalog.schema) svc.specs.emplace(p.id, Missing{});
      if (const json* specs = Require(s, "specs", path, issues)) {
        if (!specs->is_object()) {
          issues.add(Field(path, "specs"), "expected an object");
        } else {
          for (const auto& [key, value] : specs->items()) {
            const std::string spec_path = Field(Field(path, "specs"), key);
            const PropertySchema* prop = catalog.find_property(key);
            if (!prop) {
              // Properties that failed validation were already reported.
              if (!broken_ids.contains(key)) {
                issues.add(spec_path, "unknown property '" + key + "'");
              }
              continue;
            }
            if (auto spec = LoadSpec(value, *prop, spec_path, issues)) {
              svc.specs[key] = std::move(*spec);
            }
          }
        }
      }
      catalog.services.push_back(std::move(svc));
    }
  }
  issues.throw_if_any();
  return catalog;
}

json PropertyToJson(const PropertySchema& p) {
  json j = {
      {"id", p.id},
      {"display_name", p.display_name},
      {"kind", ToString(p.kind)},
      {"tendency", ToString(p.tendency)},
      {"unit", p.unit},
      {"scale", p.scale},
  };
  if (!p.enum_values.empty()) j["enum_values"] = p.enum_values;
  return j;
}

json SpecToJson(const PropertySchema& property, const SpecValue& spec) {
  if (std::holds_alternative<Missing>(spec)) return nullptr;
  if (const auto* codes = std::get_if<FeatureSet>(&spec)) {
    json labels = json::array();
    for (std::int64_t c : *codes) labels.push_back(property.enum_values.at(static_cast<std::size_t>(c)));
    return labels;
  }
  const std::int64_t v = std::get<std::int64_t>(spec);
  if (property.kind == PropertyKind::kEnumeration) {
    return json::array({property.enum_values.at(static_cast<std::size_t>(v))});
  }
  return Number(v, property.scale);
}

json CatalogToJson(const Catalog& catalog) {
  json schema = json::array();
  for (const PropertySchema& p : catalog.schema) schema.push_back(PropertyToJson(p));
  json services = json::array();
  for (const ServiceDescription& s : catalog.services) {
    json specs = json::object();
    for (const PropertySchema& p : catalog.schema) specs[p.id] = SpecToJson(p, s.spec(p.id));
    services.push_back({{"id", s.service_id}, {"name", s.name}, {"specs", std::move(specs)}});
  }
  return {{"schema", std::move(schema)}, {"services", std::move(services)}};
}

std::string SaveCatalog(const Catalog& catalog) { return CatalogToJson(catalog).dump(2) + "\n"; }

ServiceRequest LoadRequest(std::string_view document, const Catalog& catalog) {
  const json doc = Parse(document);
  Issues issues;
  if (!doc.is_object()) {
    issues.add("$", "expected a JSON object");
    issues.throw_if_any();
  }
  ServiceRequest request;
  if (auto it = doc.find("objective"); it != doc.end()) {
    const auto text = it->is_string() ? std::optional<std::string>(it->get<std::string>())
                                      : std::nullopt;
    if (!text) issues.add("objective", "expected a string");
    if (auto mode = ParseEnum(text, kObjectives, "objective", issues)) request.objective = *mode;
  }
  if (auto it = doc.find("normalize_difference"); it != doc.end()) {
    if (!it->is_boolean()) {
      issues.add("normalize_difference", "expected a boolean");
    } else {
      request.normalize_difference = it->get<bool>();
    }
  }

  const json* constraints = Require(doc, "constraints", "", issues);
  if (constraints && (!constraints->is_array() || constraints->empty())) {
    issues.add("constraints", "expected a non-empty array");
    constraints = nullptr;
  }
  std::set<std::string> seen;
  if (constraints) {
    for (std::size_t i = 0; i < constraints->size(); ++i) {
      const std::string path = Index("constraints", i);
      const json& c = (*constraints)[i];
      if (!c.is_object()) {
        issues.add(path, "expected an object");
        continue;
      }
      RequestConstraint rc;
      bool ok = true;
      const PropertySchema* prop = nullptr;
      if (auto id = RequireString(c, "property", path, issues)) {
        rc.property_id = *id;
        prop = catalog.find_property(*id);
        if (!prop) {
          issues.add(Field(path, "property"), "unknown property '" + *id + "'");
        } else if (!seen.insert(*id).second) {
          issues.add(Field(path, "property"), "property '" + *id + "' is constrained twice");
          ok = false;
        }
      }
      const auto op = ParseEnum(RequireString(c, "operator", path, issues), kOps,
                                Field(path, "operator"), issues);
      const auto mode = ParseEnum(RequireString(c, "mode", path, issues), kModes,
                                  Field(path, "mode"), issues);
      if (op) rc.op = *op;
      if (mode) rc.mode = *mode;
      if (!op || !mode) ok = false;

      if (auto w = c.find("weight"); w != c.end()) {
        if (!w->is_number_integer() || w->get<std::int64_t>() < 1 ||
            w->get<std::int64_t>() > kMaxWeight) {
          issues.add(Field(path, "weight"), "must be an integer between 1 and 10000");
          ok = false;
        } else if (mode == Hardness::kHard) {
          issues.add(Field(path, "weight"), "only soft constraints carry a weight");
          ok = false;
        } else {
          rc.weight = w->get<std::int64_t>();
        }
      }
      if (mode == Hardness::kSoft && !rc.weight) rc.weight = 1;

      const auto direction_text = OptionalString(c, "direction", path, issues);
      const auto direction = ParseEnum(direction_text, kDirections, Field(path, "direction"), issues);
      if (direction_text && !direction) ok = false;
      rc.direction = direction;

      const json* value = Require(c, "value", path, issues);
      if (!value) ok = false;
      if (!prop) continue;

      if (prop->tendency == Tendency::kRequesterDefined && !direction && !direction_text) {
        issues.add(Field(path, "direction"), "required for requester_defined properties");
        ok = false;
      } else if (prop->tendency != Tendency::kRequesterDefined && direction_text) {
        issues.add(Field(path, "direction"), "only requester_defined properties take a direction");
        ok = false;
      }
      if (op && *op != RequestOp::kEq) {
        const bool ordered = prop->kind == PropertyKind::kInterval ||
                             prop->tendency == Tendency::kRequesterDefined ||
                             (prop->kind == PropertyKind::kFeatureList && *op == RequestOp::kGe);
        if (!ordered) {
          issues.add(Field(path, "operator"), "\"" + std::string(ToString(*op)) +
                                                  "\" is not allowed on " +
                                                  std::string(ToString(prop->kind)) +
                                                  " property '" + prop->id + "'");
          ok = false;
        }
      }
      if (prop->kind == PropertyKind::kFeatureList && mode == Hardness::kSoft) {
        issues.add(Field(path, "mode"), "feature_list constraints must be hard");
        ok = false;
      }
      if (value) {
        const std::string value_path = Field(path, "value");
        switch (prop->kind) {
          case PropertyKind::kDiscrete:
          case PropertyKind::kInterval:
            if (auto s = ScaledNumber(*value, *prop, value_path, issues)) {
              rc.value = *s;
            } else {
              ok = false;
            }
            break;
          case PropertyKind::kEnumeration:
            if (auto code = EnumCode(*value, *prop, value_path, issues)) {
              rc.value = *code;
            } else {
              ok = false;
            }
            break;
          case PropertyKind::kFeatureList:
            if (auto codes = FeatureCodes(*value, *prop, value_path, issues)) {
              if (codes->empty()) {
                issues.add(value_path, "must name at least one feature");
                ok = false;
              }
              rc.value = std::move(*codes);
            } else {
              ok = false;
            }
            break;
        }
      }
      if (ok) request.constraints.push_back(std::move(rc));
    }
  }
  if (request.objective == ObjectiveMode::kDifferenceViolation) {
    for (std::size_t i = 0; constraints && i < constraints->size(); ++i) {
      const json& c = (*constraints)[i];
      if (!c.is_object()) continue;
      const auto prop_it = c.find("property");
      const auto mode_it = c.find("mode");
      if (prop_it == c.end() || !prop_it->is_string() || mode_it == c.end() ||
          *mode_it != "soft") {
        continue;
      }
      const PropertySchema* prop = catalog.find_property(prop_it->get<std::string>());
      if (prop && prop->kind != PropertyKind::kDiscrete && prop->kind != PropertyKind::kFeatureList) {
        issues.add(Field(Index("constraints", i), "mode"),
                   "difference objective only applies to soft constraints on discrete properties");
      }
    }
  }
  issues.throw_if_any();
  return request;
}

json RequestToJson(const ServiceRequest& request, const Catalog& catalog) {
  json constraints = json::array();
  for (const RequestConstraint& c : request.constraints) {
    const PropertySchema* prop = catalog.find_property(c.property_id);
    json j = {{"property", c.property_id}, {"operator", ToString(c.op)}, {"mode", ToString(c.mode)}};
    if (prop) {
      if (const auto* codes = std::get_if<FeatureSet>(&c.value)) {
        j["value"] = SpecToJson(*prop, *codes);
      } else {
        j["value"] = SpecToJson(*prop, c.scalar());
      }
    }
    if (c.weight) j["weight"] = *c.weight;
    if (c.direction) j["direction"] = ToString(*c.direction);
    constraints.push_back(std::move(j));
  }
  json doc = {{"constraints", std::move(constraints)}, {"objective", ToString(request.objective)}};
  if (request.normalize_difference) doc["normalize_difference"] = true;
  return doc;
}

}  // namespace csm
