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

#ifndef CSM_FD_PROBLEM_HPP_
#define CSM_FD_PROBLEM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csm/fd/domain.hpp"

namespace csm::fd {

enum class Op { kEq, kNe, kLt, kLe, kGt, kGe };

bool Holds(std::int64_t lhs, Op op, std::int64_t rhs);
Op Negate(Op op);
// The operator with its operands swapped: (a op b) == (b Mirror(op) a).
Op Mirror(Op op);
std::string_view ToString(Op op);

enum class Errc {
  kEmptyDomain,
  kDuplicateId,
  kUnknownVariable,
  kDuplicateObjective,
  kNoObjective,
  kEmptyList,
  kNoVariables,
};

class FdError : public std::runtime_error {
 public:
  FdError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct VarId {
  std::uint32_t index = 0;
  auto operator<=>(const VarId&) const = default;
};

using Operand = std::variant<std::int64_t, VarId>;

// list[index] op value. Index values outside [0, |list|-1] never satisfy it.
struct ElementAtom {
  std::vector<std::int64_t> list;
  VarId index;
  Op op = Op::kEq;
  Operand value;
};

// left op right.
struct CompareAtom {
  VarId left;
  Op op = Op::kEq;
  Operand right;
};

using Atom = std::variant<ElementAtom, CompareAtom>;

// truth == 1 iff atom holds; truth is a 0/1 variable.
struct ReifiedAtom {
  Atom atom;
  VarId truth;
};

struct SumTerm {
  enum class Kind {
    kValue,     // weight * var
    kFalsity,   // weight * (1 - var), var a 0/1 truth variable
    kDistance,  // weight * |var - reference|
  };
  Kind kind = Kind::kValue;
  std::int64_t weight = 1;
  VarId var;
  std::int64_t reference = 0;

  static SumTerm Value(VarId v, std::int64_t weight = 1) {
    return {Kind::kValue, weight, v, 0};
  }
  static SumTerm Falsity(VarId truth, std::int64_t weight = 1) {
    return {Kind::kFalsity, weight, truth, 0};
  }
  static SumTerm Distance(VarId v, std::int64_t reference,
                          std::int64_t weight = 1) {
    return {Kind::kDistance, weight, v, reference};
  }
};

// total == sum of terms.
struct WeightedSum {
  VarId total;
  std::vector<SumTerm> terms;
};

using Constraint = std::variant<ElementAtom, CompareAtom, ReifiedAtom, WeightedSum>;

struct Solution {
  std::map<std::string, std::int64_t, std::less<>> assignment;
  std::optional<std::int64_t> objective_value;

  // Throws std::out_of_range for names not in the assignment.
  std::int64_t at(std::string_view name) const;
  bool operator==(const Solution&) const = default;
};

// A finite-domain constraint satisfaction problem. Search is depth-first over
// the registered variables in registration order, values ascending, so every
// solve returns solutions in lexicographic order of the assignment vector.
//
// Variables created internally (reification truth variables) are auxiliary:
// they are never branched on before the registered ones and never appear in a
// Solution.
class Problem {
 public:
  struct Variable {
    std::string name;
    Domain domain;
    bool auxiliary = false;
  };

  Problem() = default;

  VarId add_variable(std::string name, Domain domain);
  VarId add_variable(std::string name, std::int64_t lo, std::int64_t hi) {
    return add_variable(std::move(name), Domain::Range(lo, hi));
  }
  VarId add_variable(std::string name, const std::vector<std::int64_t>& values) {
    return add_variable(std::move(name), Domain::Values(values));
  }

  void post_element(std::vector<std::int64_t> list, VarId index, Op op,
                    Operand value);
  void post_compare(VarId left, Op op, Operand right);
  // Returns a fresh auxiliary 0/1 variable that equals the truth of `atom`.
  VarId reify(Atom atom);
  // Solutions satisfy p iff they satisfy q.
  void post_equivalence(Atom p, Atom q);
  void post_weighted_sum(VarId total, std::vector<SumTerm> terms);

  void set_minimize(VarId objective);
  std::optional<VarId> objective() const { return objective_; }

  // Every assignment satisfying all constraints. Empty when unsatisfiable.
  std::vector<Solution> solve_all() const;
  // All solutions, stable-sorted ascending by objective value.
  std::vector<Solution> solve_optimal() const;
  // Only the solutions attaining the minimum objective, found by
  // branch-and-bound on the objective's lower bound.
  std::vector<Solution> solve_minimal() const;

  // Registered (non-auxiliary) variables.
  std::size_t variable_count() const { return decision_count_; }
  // Constraints posted through the public API; an equivalence counts once.
  std::size_t constraint_count() const { return posted_count_; }

  std::optional<VarId> find(std::string_view name) const;
  const Variable& variable(VarId v) const;
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  void check_var(VarId v) const;
  void check_operand(const Operand& o) const;
  void check_atom(const Atom& a) const;
  VarId add_internal(std::string name, Domain domain, bool auxiliary);

  std::vector<Variable> vars_;
  std::map<std::string, VarId, std::less<>> by_name_;
  std::vector<Constraint> constraints_;
  std::optional<VarId> objective_;
  std::size_t decision_count_ = 0;
  std::size_t posted_count_ = 0;
  std::uint32_t aux_counter_ = 0;
};

}  // namespace csm::fd

#endif  // CSM_FD_PROBLEM_HPP_
