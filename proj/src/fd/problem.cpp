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

#include "csm/fd/problem.hpp"

#include <algorithm>
#include <sstream>

#include "engine.hpp"

namespace csm::fd {

bool Holds(std::int64_t lhs, Op op, std::int64_t rhs) {
  switch (op) {
    case Op::kEq: return lhs == rhs;
    case Op::kNe: return lhs != rhs;
    case Op::kLt: return lhs < rhs;
    case Op::kLe: return lhs <= rhs;
    case Op::kGt: return lhs > rhs;
    case Op::kGe: return lhs >= rhs;
  }
  return false;
}

Op Negate(Op op) {
  switch (op) {
    case Op::kEq: return Op::kNe;
    case Op::kNe: return Op::kEq;
    case Op::kLt: return Op::kGe;
    case Op::kLe: return Op::kGt;
    case Op::kGt: return Op::kLe;
    case Op::kGe: return Op::kLt;
  }
  return op;
}

Op Mirror(Op op) {
  switch (op) {
    case Op::kLt: return Op::kGt;
    case Op::kLe: return Op::kGe;
    case Op::kGt: return Op::kLt;
    case Op::kGe: return Op::kLe;
    default: return op;
  }
}

std::string_view ToString(Op op) {
  switch (op) {
    case Op::kEq: return "=";
    case Op::kNe: return "!=";
    case Op::kLt: return "<";
    case Op::kLe: return "<=";
    case Op::kGt: return ">";
    case Op::kGe: return ">=";
  }
  return "?";
}

std::int64_t Solution::at(std::string_view name) const {
  auto it = assignment.find(name);
  if (it == assignment.end()) {
    throw std::out_of_range("no variable '" + std::string(name) + "' in solution");
  }
  return it->second;
}

VarId Problem::add_internal(std::string name, Domain domain, bool auxiliary) {
  if (domain.empty()) {
    throw FdError(Errc::kEmptyDomain, "variable '" + name + "' has an empty domain");
  }
  if (by_name_.contains(name)) {
    throw FdError(Errc::kDuplicateId, "variable '" + name + "' already exists");
  }
  const VarId id{static_cast<std::uint32_t>(vars_.size())};
  by_name_.emplace(name, id);
  vars_.push_back({std::move(name), std::move(domain), auxiliary});
  if (!auxiliary) ++decision_count_;
  return id;
}

VarId Problem::add_variable(std::string name, Domain domain) {
  return add_internal(std::move(name), std::move(domain), false);
}

void Problem::check_var(VarId v) const {
  if (v.index >= vars_.size()) {
    std::ostringstream os;
    os << "variable #" << v.index << " is not registered";
    throw FdError(Errc::kUnknownVariable, os.str());
  }
}

void Problem::check_operand(const Operand& o) const {
  if (const VarId* v = std::get_if<VarId>(&o)) check_var(*v);
}

void Problem::check_atom(const Atom& a) const {
  if (const auto* e = std::get_if<ElementAtom>(&a)) {
    if (e->list.empty()) throw FdError(Errc::kEmptyList, "element list is empty");
    check_var(e->index);
    check_operand(e->value);
  } else {
    const auto& c = std::get<CompareAtom>(a);
    check_var(c.left);
    check_operand(c.right);
  }
}

void Problem::post_element(std::vector<std::int64_t> list, VarId index, Op op,
                           Operand value) {
  ElementAtom atom{std::move(list), index, op, value};
  check_atom(atom);
  constraints_.emplace_back(std::move(atom));
  ++posted_count_;
}

void Problem::post_compare(VarId left, Op op, Operand right) {
  CompareAtom atom{left, op, right};
  check_atom(atom);
  constraints_.emplace_back(atom);
  ++posted_count_;
}

VarId Problem::reify(Atom atom) {
  check_atom(atom);
  const VarId truth = add_internal("$truth" + std::to_string(aux_counter_++),
                                   Domain::Range(0, 1), true);
  constraints_.emplace_back(ReifiedAtom{std::move(atom), truth});
  return truth;
}

void Problem::post_equivalence(Atom p, Atom q) {
  check_atom(p);
  check_atom(q);
  const VarId p_truth = reify(std::move(p));
  const VarId q_truth = reify(std::move(q));
  constraints_.emplace_back(CompareAtom{p_truth, Op::kEq, q_truth});
  ++posted_count_;
}

void Problem::post_weighted_sum(VarId total, std::vector<SumTerm> terms) {
  check_var(total);
  for (const SumTerm& t : terms) check_var(t.var);
  constraints_.emplace_back(WeightedSum{total, std::move(terms)});
  ++posted_count_;
}

void Problem::set_minimize(VarId objective) {
  check_var(objective);
  if (objective_) {
    throw FdError(Errc::kDuplicateObjective, "an objective is already set");
  }
  objective_ = objective;
}

std::optional<VarId> Problem::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const Problem::Variable& Problem::variable(VarId v) const {
  check_var(v);
  return vars_[v.index];
}

std::vector<Solution> Problem::solve_all() const {
  if (decision_count_ == 0) {
    throw FdError(Errc::kNoVariables, "problem has no variables");
  }
  Engine engine(*this);
  std::vector<Solution> out;
  engine.search(std::nullopt, [&out](Solution s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::vector<Solution> Problem::solve_optimal() const {
  if (!objective_) throw FdError(Errc::kNoObjective, "no objective set");
  std::vector<Solution> out = solve_all();
  std::stable_sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
    return *a.objective_value < *b.objective_value;
  });
  return out;
}

std::vector<Solution> Problem::solve_minimal() const {
  if (!objective_) throw FdError(Errc::kNoObjective, "no objective set");
  if (decision_count_ == 0) {
    throw FdError(Errc::kNoVariables, "problem has no variables");
  }
  Engine engine(*this);
  std::vector<Solution> out;
  std::optional<std::int64_t> best;
  engine.search(
      [&best]() { return best; },
      [&out, &best](Solution s) {
        const std::int64_t value = *s.objective_value;
        if (!best || value < *best) {
          best = value;
          out.clear();
        }
        out.push_back(std::move(s));
        return true;
      });
  return out;
}

}  // namespace csm::fd
