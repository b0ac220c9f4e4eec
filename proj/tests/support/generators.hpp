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

#ifndef CSM_TESTS_SUPPORT_GENERATORS_HPP_
#define CSM_TESTS_SUPPORT_GENERATORS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "csm/catalog.hpp"
#include "csm/fd/problem.hpp"

namespace csm::testing {

using Rng = std::mt19937_64;

namespace csp {

struct Var {
  std::string name;
  std::vector<std::int64_t> values;  // sorted, distinct
};
// A constant, or the index of a variable.
struct Operand {
  bool is_var = false;
  std::int64_t value = 0;
};
struct Element {
  std::vector<std::int64_t> list;
  std::size_t index = 0;
  fd::Op op = fd::Op::kEq;
  Operand value;
};
struct Compare {
  std::size_t left = 0;
  fd::Op op = fd::Op::kEq;
  Operand right;
};
using Atom = std::variant<Element, Compare>;
struct Equivalence {
  Atom p;
  Atom q;
};
struct Dist {
  std::size_t var = 0;
  std::int64_t reference = 0;
  std::int64_t weight = 1;
};
// total = sum of weight * (1 - [atom]) over the listed atoms plus
// weight * |var - reference| over the distance terms.
struct Penalty {
  std::size_t total = 0;
  std::vector<std::pair<Atom, std::int64_t>> falsity;
  std::vector<Dist> distance;
};
using Item = std::variant<Atom, Equivalence, Penalty>;

}  // namespace csp

// A CSP described independently of the solver's internal lowering, so that
// a brute-force scan can evaluate it directly.
struct CspSpec {
  using Var = csp::Var;
  using Operand = csp::Operand;
  using Element = csp::Element;
  using Compare = csp::Compare;
  using Atom = csp::Atom;
  using Equivalence = csp::Equivalence;
  using Penalty = csp::Penalty;
  using Item = csp::Item;

  std::vector<Var> vars;
  std::vector<Item> items;
  std::optional<std::size_t> minimize;

  fd::Problem Build() const;
  // Every satisfying assignment, keyed by variable name.
  std::vector<std::map<std::string, std::int64_t>> BruteForce() const;
  std::uint64_t CrossProduct() const;
};

CspSpec RandomCsp(Rng& rng, std::uint64_t max_cross_product = 10'000);

struct CatalogShape {
  std::size_t max_services = 50;
  std::size_t max_properties = 8;
  double missing_rate = 0.1;
};

Catalog RandomCatalog(Rng& rng, const CatalogShape& shape = {});
ServiceRequest RandomRequest(Rng& rng, const Catalog& catalog);
// Soft boolean request, scalar properties only, no hard constraints.
ServiceRequest RandomSoftBooleanRequest(Rng& rng, const Catalog& catalog);

// n services over `properties` scalar and feature-list properties.
Catalog ScaleCatalog(std::size_t services, std::size_t properties, std::uint64_t seed);
ServiceRequest ScaleRequest(const Catalog& catalog, ObjectiveMode mode);

}  // namespace csm::testing

#endif  // CSM_TESTS_SUPPORT_GENERATORS_HPP_
