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

#ifndef CSM_ERROR_HPP_
#define CSM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace csm {

// One validation finding, addressed by a JSON-style path such as
// "services[1].specs.availability".
struct Issue {
  std::string path;
  std::string message;
  bool operator==(const Issue&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Carries every issue found, in document order.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

}  // namespace csm

#endif  // CSM_ERROR_HPP_
