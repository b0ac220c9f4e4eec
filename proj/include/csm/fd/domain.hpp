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

#ifndef CSM_FD_DOMAIN_HPP_
#define CSM_FD_DOMAIN_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace csm::fd {

// Finite set of integers stored as sorted, disjoint, non-adjacent closed
// intervals. Large contiguous ranges cost one interval regardless of width.
class Domain {
 public:
  struct Interval {
    std::int64_t lo;
    std::int64_t hi;
    bool operator==(const Interval&) const = default;
  };

  Domain() = default;

  static Domain Range(std::int64_t lo, std::int64_t hi);
  static Domain Values(std::span<const std::int64_t> values);
  static Domain Values(std::initializer_list<std::int64_t> values);
  static Domain Singleton(std::int64_t value) { return Range(value, value); }

  bool empty() const { return intervals_.empty(); }
  bool fixed() const {
    return intervals_.size() == 1 && intervals_[0].lo == intervals_[0].hi;
  }
  // Saturates at UINT64_MAX for the full int64 range.
  std::uint64_t size() const;
  std::int64_t min() const { return intervals_.front().lo; }
  std::int64_t max() const { return intervals_.back().hi; }
  // Requires fixed().
  std::int64_t value() const { return intervals_.front().lo; }
  bool contains(std::int64_t v) const;

  // Value of this domain closest to `target`; ties resolve to the smaller one.
  std::int64_t nearest(std::int64_t target) const;
  bool subset_of(const Domain& other) const;
  bool intersects(const Domain& other) const;

  // Each mutator returns true iff the domain changed.
  bool remove(std::int64_t v);
  bool restrict_min(std::int64_t lo);
  bool restrict_max(std::int64_t hi);
  bool assign(std::int64_t v);
  bool intersect(const Domain& other);
  bool clear();
  // Replaces the contents with [lo, hi], reusing storage.
  void reset(std::int64_t lo, std::int64_t hi);

  std::span<const Interval> intervals() const { return intervals_; }
  // Materializes every value; only sensible for small domains.
  std::vector<std::int64_t> values() const;

  template <typename F>
  void for_each(F&& f) const {
    for (const Interval& iv : intervals_) {
      for (std::int64_t v = iv.lo;; ++v) {
        f(v);
        if (v == iv.hi) break;
      }
    }
  }

  std::string to_string() const;

  bool operator==(const Domain&) const = default;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace csm::fd

#endif  // CSM_FD_DOMAIN_HPP_
