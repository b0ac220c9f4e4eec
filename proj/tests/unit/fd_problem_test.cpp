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

#include <gtest/gtest.h>

#include <functional>
#include <vector>

namespace csm::fd {
namespace {

std::vector<std::int64_t> Column(const std::vector<Solution>& sols, const char* name) {
  std::vector<std::int64_t> out;
  for (const Solution& s : sols) out.push_back(s.at(name));
  return out;
}

Errc CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const FdError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no FdError thrown";
  return Errc::kEmptyDomain;
}

TEST(ProblemTest, NewProblemIsEmpty) {
  Problem p;
  EXPECT_EQ(p.variable_count(), 0u);
  EXPECT_EQ(p.constraint_count(), 0u);
  p.add_variable("x", 0, 2);
  EXPECT_EQ(p.variable_count(), 1u);
  EXPECT_EQ(p.constraint_count(), 0u);
  EXPECT_EQ(p.variable(*p.find("x")).domain.size(), 3u);
}

TEST(ProblemTest, AddVariableErrors) {
  Problem p;
  p.add_variable("serviceIndex", 0, 2);
  EXPECT_EQ(CodeOf([&] { p.add_variable("serviceIndex", 0, 1); }), Errc::kDuplicateId);
  EXPECT_EQ(CodeOf([&] { p.add_variable("x", std::vector<std::int64_t>{}); }),
            Errc::kEmptyDomain);
  const VarId x = p.add_variable("x", std::vector<std::int64_t>{5, 5, 3});
  EXPECT_EQ(p.variable(x).domain.values(), (std::vector<std::int64_t>{3, 5}));
}

TEST(ProblemTest, UnknownVariableRejected) {
  Problem p;
  p.add_variable("x", 0, 1);
  EXPECT_EQ(CodeOf([&] { p.post_compare(VarId{7}, Op::kEq, std::int64_t{1}); }),
            Errc::kUnknownVariable);
  EXPECT_EQ(CodeOf([&] { p.post_element({}, VarId{0}, Op::kEq, std::int64_t{1}); }),
            Errc::kEmptyList);
}

TEST(ProblemTest, ElementEqualsNarrowsIndex) {
  Problem p;
  const VarId idx = p.add_variable("idx", 0, 2);
  p.post_element({55, 56, 56}, idx, Op::kEq, std::int64_t{56});
  EXPECT_EQ(Column(p.solve_all(), "idx"), (std::vector<std::int64_t>{1, 2}));
}

TEST(ProblemTest, ElementSingleton) {
  Problem p;
  const VarId idx = p.add_variable("idx", 0, 0);
  p.post_element({7}, idx, Op::kEq, std::int64_t{7});
  EXPECT_EQ(Column(p.solve_all(), "idx"), (std::vector<std::int64_t>{0}));
}

TEST(ProblemTest, ElementUnsatisfiable) {
  Problem p;
  const VarId idx = p.add_variable("idx", 0, 2);
  p.post_element({1, 2, 3}, idx, Op::kGt, std::int64_t{9});
  EXPECT_TRUE(p.solve_all().empty());
}

TEST(ProblemTest, ElementIndexBeyondListIsNarrowed) {
  Problem p;
  const VarId idx = p.add_variable("idx", -3, 10);
  p.post_element({4, 5}, idx, Op::kGe, std::int64_t{0});
  EXPECT_EQ(Column(p.solve_all(), "idx"), (std::vector<std::int64_t>{0, 1}));
}

TEST(ProblemTest, AvailabilityElement) {
  Problem p;
  const VarId idx = p.add_variable("idx", 0, 2);
  p.post_element({9999, 9995, 9995}, idx, Op::kGe, std::int64_t{9900});
  EXPECT_EQ(p.solve_all().size(), 3u);
}

TEST(ProblemTest, SingletonWithoutConstraints) {
  Problem p;
  p.add_variable("x", std::vector<std::int64_t>{4});
  const auto sols = p.solve_all();
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].at("x"), 4);
  EXPECT_FALSE(sols[0].objective_value.has_value());
}

TEST(ProblemTest, Contradiction) {
  Problem p;
  const VarId x = p.add_variable("x", 1, 2);
  p.post_compare(x, Op::kEq, std::int64_t{1});
  p.post_compare(x, Op::kEq, std::int64_t{2});
  EXPECT_TRUE(p.solve_all().empty());
}

TEST(ProblemTest, NoVariables) {
  Problem p;
  EXPECT_EQ(CodeOf([&] { p.solve_all(); }), Errc::kNoVariables);
}

TEST(ProblemTest, CompareConstantAndVariable) {
  {
    Problem p;
    const VarId x = p.add_variable("x", 1, 5);
    p.post_compare(x, Op::kLe, std::int64_t{3});
    EXPECT_EQ(Column(p.solve_all(), "x"), (std::vector<std::int64_t>{1, 2, 3}));
  }
  {
    Problem p;
    const VarId x = p.add_variable("x", 2, 2);
    const VarId y = p.add_variable("y", 2, 2);
    p.post_compare(x, Op::kEq, y);
    EXPECT_EQ(p.solve_all().size(), 1u);
  }
  {
    Problem p;
    const VarId x = p.add_variable("x", 1, 1);
    const VarId y = p.add_variable("y", 4, 4);
    p.post_compare(x, Op::kGt, y);
    EXPECT_TRUE(p.solve_all().empty());
  }
}

TEST(ProblemTest, EquivalenceBindsBothWays) {
  Problem p;
  const VarId idx = p.add_variable("idx", 0, 1);
  const VarId prop = p.add_variable("prop", std::vector<std::int64_t>{55, 56});
  p.post_equivalence(CompareAtom{idx, Op::kEq, std::int64_t{0}},
                     CompareAtom{prop, Op::kEq, std::int64_t{55}});
  EXPECT_EQ(p.constraint_count(), 1u);
  const auto sols = p.solve_all();
  ASSERT_EQ(sols.size(), 2u);
  // (0, 55): both true. (1, 56): both false. (1, 55) is rejected.
  EXPECT_EQ(sols[0].at("idx"), 0);
  EXPECT_EQ(sols[0].at("prop"), 55);
  EXPECT_EQ(sols[1].at("idx"), 1);
  EXPECT_EQ(sols[1].at("prop"), 56);
  // Truth variables stay out of the assignment.
  EXPECT_EQ(sols[0].assignment.size(), 2u);
}

TEST(ProblemTest, ObjectiveErrors) {
  Problem p;
  const VarId x = p.add_variable("x", 0, 3);
  EXPECT_EQ(CodeOf([&] { p.solve_optimal(); }), Errc::kNoObjective);
  EXPECT_EQ(CodeOf([&] { p.solve_minimal(); }), Errc::kNoObjective);
  p.set_minimize(x);
  EXPECT_EQ(CodeOf([&] { p.set_minimize(x); }), Errc::kDuplicateObjective);
}

// Three services with violation sums {2, 0, 0}.
Problem ViolationProblem() {
  Problem p;
  const VarId idx = p.add_variable("idx", 0, 2);
  const VarId v = p.add_variable("violation", 0, 2);
  p.post_element({2, 0, 0}, idx, Op::kEq, v);
  p.set_minimize(v);
  return p;
}

TEST(ProblemTest, SolveOptimalOrdersByObjectiveThenSearchOrder) {
  const auto sols = ViolationProblem().solve_optimal();
  EXPECT_EQ(Column(sols, "idx"), (std::vector<std::int64_t>{1, 2, 0}));
  std::vector<std::int64_t> objective;
  for (const Solution& s : sols) objective.push_back(*s.objective_value);
  EXPECT_EQ(objective, (std::vector<std::int64_t>{0, 0, 2}));
}

TEST(ProblemTest, SolveMinimalKeepsEqualOptima) {
  const auto sols = ViolationProblem().solve_minimal();
  EXPECT_EQ(Column(sols, "idx"), (std::vector<std::int64_t>{1, 2}));
}

TEST(ProblemTest, SolveOptimalUnsatisfiableAndSingleton) {
  {
    Problem p;
    const VarId x = p.add_variable("x", 0, 1);
    p.post_compare(x, Op::kGt, std::int64_t{5});
    p.set_minimize(x);
    EXPECT_TRUE(p.solve_optimal().empty());
  }
  {
    Problem p;
    const VarId x = p.add_variable("x", 7, 7);
    p.set_minimize(x);
    const auto sols = p.solve_optimal();
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_EQ(sols[0].objective_value, 7);
  }
}

TEST(ProblemTest, WeightedSumOfFalsities) {
  Problem p;
  const VarId idx = p.add_variable("idx", 0, 2);
  const VarId b = p.reify(ElementAtom{{10, 20, 30}, idx, Op::kGe, std::int64_t{20}});
  const VarId total = p.add_variable("total", 0, 5);
  p.post_weighted_sum(total, {SumTerm::Falsity(b, 5)});
  p.set_minimize(total);
  const auto sols = p.solve_optimal();
  EXPECT_EQ(Column(sols, "idx"), (std::vector<std::int64_t>{1, 2, 0}));
  EXPECT_EQ(Column(sols, "total"), (std::vector<std::int64_t>{0, 0, 5}));
}

TEST(ProblemTest, DistanceTerm) {
  Problem p;
  const VarId x = p.add_variable("x", std::vector<std::int64_t>{55, 56, 60});
  const VarId d = p.add_variable("d", 0, 100);
  p.post_weighted_sum(d, {SumTerm::Distance(x, 56, 3)});
  EXPECT_EQ(Column(p.solve_all(), "d"), (std::vector<std::int64_t>{3, 0, 12}));
}

TEST(ProblemTest, ReifiedOutOfRangeIndexIsFalse) {
  Problem p;
  const VarId i = p.add_variable("i", -1, 3);
  const VarId b = p.reify(ElementAtom{{1, 1}, i, Op::kEq, std::int64_t{1}});
  const VarId t = p.add_variable("t", 0, 1);
  p.post_compare(t, Op::kEq, b);
  std::vector<std::int64_t> truths;
  for (const Solution& s : p.solve_all()) truths.push_back(s.at("t"));
  EXPECT_EQ(truths, (std::vector<std::int64_t>{0, 1, 1, 0, 0}));
}

TEST(ProblemTest, SelfReferentialSumIsChecked) {
  // x = 3|x - 6| + (list[x] <= 0 ? 0 : 1) has no solution in this domain.
  // Bounds narrowing alone leaves x = 12 standing.
  Problem p;
  const VarId x = p.add_variable("x", std::vector<std::int64_t>{-6, -1, 1, 3, 5, 9, 12});
  const VarId b = p.reify(ElementAtom{{5, 4, -2, -2}, x, Op::kLe, std::int64_t{0}});
  p.post_weighted_sum(x, {SumTerm::Falsity(b, 1), SumTerm::Distance(x, 6, 3)});
  EXPECT_TRUE(p.solve_all().empty());
}

TEST(ProblemTest, AtNamesMissingVariable) {
  Solution s;
  s.assignment["a"] = 1;
  EXPECT_EQ(s.at("a"), 1);
  EXPECT_THROW(s.at("b"), std::out_of_range);
}

}  // namespace
}  // namespace csm::fd
