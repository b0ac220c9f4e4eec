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
#include <cstdlib>
#include <map>

#include "columns.hpp"
#include "csm/matcher.hpp"

namespace csm {
namespace detail {

std::vector<std::optional<std::int64_t>> ScalarColumn(const Catalog& catalog,
                                                      std::string_view property_id) {
  std::vector<std::optional<std::int64_t>> column;
  column.reserve(catalog.services.size());
  for (const ServiceDescription& s : catalog.services) {
    const SpecValue& spec = s.spec(property_id);
    if (const auto* v = std::get_if<std::int64_t>(&spec)) {
      column.push_back(*v);
    } else {
      column.push_back(std::nullopt);
    }
  }
  return column;
}

DistanceColumn MakeDistanceColumn(const Catalog& catalog, const RequestConstraint& constraint,
                                  bool normalize) {
  const auto column = ScalarColumn(catalog, constraint.property_id);
  const std::int64_t q = constraint.scalar();
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  for (const auto& v : column) {
    if (!v) continue;
    lo = lo ? std::min(*lo, *v) : *v;
    hi = hi ? std::max(*hi, *v) : *v;
  }
  const std::int64_t range = lo ? *hi - *lo : 0;

  std::vector<std::int64_t> raw;  // signed offsets from q
  raw.reserve(column.size());
  std::int64_t denominator = 0;
  for (const auto& v : column) {
    raw.push_back(v ? *v - q : range);
    denominator = std::max(denominator, std::abs(raw.back()));
  }

  DistanceColumn out;
  if (!normalize) {
    out.reference = q;
    for (std::int64_t offset : raw) out.effective.push_back(q + offset);
    out.max_distance = denominator;
    return out;
  }
  out.reference = 0;
  for (std::int64_t offset : raw) {
    const std::int64_t d = std::abs(offset);
    const std::int64_t scaled = denominator == 0 ? 0 : (2000 * d + denominator) / (2 * denominator);
    out.effective.push_back(offset < 0 ? -scaled : scaled);
  }
  out.max_distance = denominator == 0 ? 0 : 1000;
  return out;
}

}  // namespace detail

namespace {

using detail::ScalarColumn;

fd::Op ToFdOp(RequestOp op) {
  switch (op) {
    case RequestOp::kEq: return fd::Op::kEq;
    case RequestOp::kLe: return fd::Op::kLe;
    case RequestOp::kGe: return fd::Op::kGe;
  }
  return fd::Op::kEq;
}

// A value that satisfies (or, with pass=false, violates) spec op q.
std::int64_t Filler(RequestOp op, std::int64_t q, bool pass) {
  if (pass) return q;
  return op == RequestOp::kGe ? q - 1 : q + 1;
}

bool IsScalar(const Catalog& catalog, const RequestConstraint& c) {
  const PropertySchema* p = catalog.find_property(c.property_id);
  return p && p->is_scalar();
}

// Index domain: all services, minus those missing a hard-constrained spec
// when missing specs are strict.
fd::Domain IndexDomain(const Catalog& catalog, const ServiceRequest& request,
                       const ModelOptions& options) {
  const auto n = static_cast<std::int64_t>(catalog.services.size());
  if (!options.post_hard || !options.strict_missing) return fd::Domain::Range(0, n - 1);
  std::vector<std::int64_t> keep;
  for (std::int64_t x = 0; x < n; ++x) {
    bool complete = true;
    for (const RequestConstraint& c : request.constraints) {
      if (c.hard() && IsScalar(catalog, c) &&
          std::holds_alternative<Missing>(
              catalog.services[static_cast<std::size_t>(x)].spec(c.property_id))) {
        complete = false;
        break;
      }
    }
    if (complete) keep.push_back(x);
  }
  return fd::Domain::Values(keep);
}

// Registers the index variable. An empty catalog, or one where every service
// was filtered out, yields an index that cannot take any value.
fd::VarId AddIndex(fd::Problem& problem, std::string_view name, fd::Domain domain) {
  if (domain.empty()) {
    const fd::VarId index = problem.add_variable(std::string(name), fd::Domain::Singleton(0));
    problem.post_compare(index, fd::Op::kNe, std::int64_t{0});
    return index;
  }
  return problem.add_variable(std::string(name), std::move(domain));
}

void PostHard(fd::Problem& problem, fd::VarId index, const Catalog& catalog,
              const ServiceRequest& request) {
  for (const RequestConstraint& c : request.constraints) {
    if (!c.hard() || !IsScalar(catalog, c)) continue;
    const PropertySchema& schema = *catalog.find_property(c.property_id);
    const RequestOp op = EffectiveOperator(schema, c);
    std::vector<std::int64_t> list;
    for (const auto& v : ScalarColumn(catalog, c.property_id)) {
      list.push_back(v ? *v : Filler(op, c.scalar(), true));
    }
    if (list.empty()) continue;
    problem.post_element(std::move(list), index, ToFdOp(op), c.scalar());
  }
}

}  // namespace

std::string ViolationVarName(std::string_view property_id) {
  return "violation." + std::string(property_id);
}

fd::Problem BuildModelHard(const Catalog& catalog, const ServiceRequest& request,
                           const ModelOptions& options) {
  ModelOptions hard = options;
  hard.post_hard = true;
  fd::Problem problem;
  const fd::VarId index =
      AddIndex(problem, kServiceIndexVar, IndexDomain(catalog, request, hard));
  PostHard(problem, index, catalog, request);
  return problem;
}

fd::Problem BuildModelSoftBoolean(const Catalog& catalog, const ServiceRequest& request,
                                  const ModelOptions& options) {
  fd::Problem problem;
  const fd::VarId index =
      AddIndex(problem, kServiceIndexVar, IndexDomain(catalog, request, options));
  if (options.post_hard) PostHard(problem, index, catalog, request);

  std::vector<fd::SumTerm> total_terms;
  std::int64_t max_total = 0;
  for (const RequestConstraint& c : request.constraints) {
    if (c.hard() || !IsScalar(catalog, c)) continue;
    const PropertySchema& schema = *catalog.find_property(c.property_id);
    const RequestOp op = EffectiveOperator(schema, c);
    std::vector<std::int64_t> list;
    for (const auto& v : ScalarColumn(catalog, c.property_id)) {
      list.push_back(v ? *v : Filler(op, c.scalar(), false));
    }
    if (list.empty()) continue;
    const std::int64_t weight = c.weight.value_or(1);
    const fd::VarId satisfied =
        problem.reify(fd::ElementAtom{std::move(list), index, ToFdOp(op), c.scalar()});
    const fd::VarId violation =
        problem.add_variable(ViolationVarName(c.property_id), 0, weight);
    problem.post_weighted_sum(violation, {fd::SumTerm::Falsity(satisfied, weight)});
    total_terms.push_back(fd::SumTerm::Value(violation));
    max_total += weight;
  }
  const fd::VarId total = problem.add_variable(std::string(kViolationSumVar), 0, max_total);
  problem.post_weighted_sum(total, std::move(total_terms));
  problem.set_minimize(total);
  return problem;
}

fd::Problem BuildModelSoftDifference(const Catalog& catalog, const ServiceRequest& request,
                                     const ModelOptions& options) {
  fd::Problem problem;
  const fd::VarId service =
      AddIndex(problem, kServiceIdVar, IndexDomain(catalog, request, options));
  if (options.post_hard) PostHard(problem, service, catalog, request);

  struct Soft {
    const RequestConstraint* constraint;
    detail::DistanceColumn column;
    fd::VarId property;
  };
  std::vector<Soft> softs;
  const std::size_t n = catalog.services.size();
  for (const RequestConstraint& c : request.constraints) {
    if (c.hard() || !IsScalar(catalog, c) || n == 0) continue;
    detail::DistanceColumn column =
        detail::MakeDistanceColumn(catalog, c, options.normalize_difference);
    const fd::VarId property =
        problem.add_variable("property." + c.property_id, fd::Domain::Values(column.effective));

    // serviceId in {services holding v}  <=>  property = v, for every distinct
    // effective value v. A value held by one service x gives exactly
    // serviceId = x <=> property = column[x]; shared values use an indicator
    // list over service ids.
    std::map<std::int64_t, std::vector<std::int64_t>> holders;
    for (std::size_t x = 0; x < n; ++x) holders[column.effective[x]].push_back(static_cast<std::int64_t>(x));
    // Posted from the largest value down, so the propagation that strikes
    // non-held values off the property domain trims it from the back.
    for (auto it = holders.rbegin(); it != holders.rend(); ++it) {
      const auto& [value, services] = *it;
      const fd::CompareAtom holds_value{property, fd::Op::kEq, value};
      if (services.size() == 1) {
        problem.post_equivalence(fd::CompareAtom{service, fd::Op::kEq, services.front()},
                                 holds_value);
        continue;
      }
      std::vector<std::int64_t> indicator(n, 0);
      for (std::int64_t x : services) indicator[static_cast<std::size_t>(x)] = 1;
      problem.post_equivalence(
          fd::ElementAtom{std::move(indicator), service, fd::Op::kEq, std::int64_t{1}},
          holds_value);
    }
    softs.push_back({&c, std::move(column), property});
  }

  std::vector<fd::SumTerm> total_terms;
  std::int64_t max_total = 0;
  for (const Soft& s : softs) {
    const std::int64_t weight = s.constraint->weight.value_or(1);
    const std::int64_t max_violation = weight * s.column.max_distance;
    const fd::VarId violation =
        problem.add_variable(ViolationVarName(s.constraint->property_id), 0, max_violation);
    problem.post_weighted_sum(
        violation, {fd::SumTerm::Distance(s.property, s.column.reference, weight)});
    total_terms.push_back(fd::SumTerm::Value(violation));
    max_total += max_violation;
  }
  const fd::VarId total = problem.add_variable(std::string(kViolationSumVar), 0, max_total);
  problem.post_weighted_sum(total, std::move(total_terms));
  problem.set_minimize(total);
  return problem;
}

}  // namespace csm
