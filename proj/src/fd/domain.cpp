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

#include "csm/fd/domain.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace csm::fd {

Domain Domain::Range(std::int64_t lo, std::int64_t hi) {
  Domain d;
  if (lo <= hi) d.intervals_.push_back({lo, hi});
  return d;
}

Domain Domain::Values(std::span<const std::int64_t> values) {
  std::vector<std::int64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Domain d;
  for (std::int64_t v : sorted) {
    if (!d.intervals_.empty() && d.intervals_.back().hi != std::numeric_limits<std::int64_t>::max() &&
        d.intervals_.back().hi + 1 == v) {
      d.intervals_.back().hi = v;
    } else {
      d.intervals_.push_back({v, v});
    }
  }
  return d;
}

Domain Domain::Values(std::initializer_list<std::int64_t> values) {
  return Values(std::span<const std::int64_t>(values.begin(), values.size()));
}

std::uint64_t Domain::size() const {
  std::uint64_t total = 0;
  for (const Interval& iv : intervals_) {
    const std::uint64_t width =
        static_cast<std::uint64_t>(iv.hi) - static_cast<std::uint64_t>(iv.lo);
    if (width == std::numeric_limits<std::uint64_t>::max()) {
      return width;
    }
    const std::uint64_t n = width + 1;
    if (total > std::numeric_limits<std::uint64_t>::max() - n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total += n;
  }
  return total;
}

bool Domain::contains(std::int64_t v) const {
  if (intervals_.size() == 1) return v >= intervals_[0].lo && v <= intervals_[0].hi;
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), v,
      [](std::int64_t x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return v <= it->hi;
}

std::int64_t Domain::nearest(std::int64_t target) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), target,
      [](std::int64_t x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return it->lo;
  auto prev = std::prev(it);
  if (target <= prev->hi) return target;
  if (it == intervals_.end()) return prev->hi;
  // Distances compared in unsigned arithmetic; target lies strictly between.
  const std::uint64_t below =
      static_cast<std::uint64_t>(target) - static_cast<std::uint64_t>(prev->hi);
  const std::uint64_t above =
      static_cast<std::uint64_t>(it->lo) - static_cast<std::uint64_t>(target);
  return above < below ? it->lo : prev->hi;
}

bool Domain::remove(std::int64_t v) {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), v,
      [](std::int64_t x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  if (v > it->hi) return false;
  if (it->lo == it->hi) {
    intervals_.erase(it);
  } else if (v == it->lo) {
    ++it->lo;
  } else if (v == it->hi) {
    --it->hi;
  } else {
    const Interval upper{v + 1, it->hi};
    it->hi = v - 1;
    intervals_.insert(std::next(it), upper);
  }
  return true;
}

bool Domain::restrict_min(std::int64_t lo) {
  if (empty() || lo <= min()) return false;
  auto it = std::find_if(intervals_.begin(), intervals_.end(),
                         [lo](const Interval& iv) { return iv.hi >= lo; });
  intervals_.erase(intervals_.begin(), it);
  if (!intervals_.empty() && intervals_.front().lo < lo) {
    intervals_.front().lo = lo;
  }
  return true;
}

bool Domain::restrict_max(std::int64_t hi) {
  if (empty() || hi >= max()) return false;
  auto it = std::find_if(intervals_.begin(), intervals_.end(),
                         [hi](const Interval& iv) { return iv.lo > hi; });
  intervals_.erase(it, intervals_.end());
  if (!intervals_.empty() && intervals_.back().hi > hi) {
    intervals_.back().hi = hi;
  }
  return true;
}

bool Domain::assign(std::int64_t v) {
  if (fixed() && value() == v) return false;
  if (!contains(v)) return clear();
  if (intervals_.size() == 1) {
    intervals_[0] = Interval{v, v};
  } else {
    intervals_.assign(1, Interval{v, v});
  }
  return true;
}

bool Domain::subset_of(const Domain& other) const {
  auto b = other.intervals_.begin();
  for (const Interval& a : intervals_) {
    while (b != other.intervals_.end() && b->hi < a.lo) ++b;
    if (b == other.intervals_.end() || b->lo > a.lo || b->hi < a.hi) return false;
  }
  return true;
}

bool Domain::intersects(const Domain& other) const {
  auto a = intervals_.begin();
  auto b = other.intervals_.begin();
  while (a != intervals_.end() && b != other.intervals_.end()) {
    if (std::max(a->lo, b->lo) <= std::min(a->hi, b->hi)) return true;
    if (a->hi < b->hi) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

void Domain::reset(std::int64_t lo, std::int64_t hi) {
  intervals_.clear();
  if (lo <= hi) intervals_.push_back({lo, hi});
}

bool Domain::intersect(const Domain& other) {
  if (subset_of(other)) return false;
  std::vector<Interval> out;
  auto a = intervals_.begin();
  auto b = other.intervals_.begin();
  while (a != intervals_.end() && b != other.intervals_.end()) {
    const std::int64_t lo = std::max(a->lo, b->lo);
    const std::int64_t hi = std::min(a->hi, b->hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a->hi < b->hi) {
      ++a;
    } else {
      ++b;
    }
  }
  if (out == intervals_) return false;
  intervals_ = std::move(out);
  return true;
}

bool Domain::clear() {
  if (intervals_.empty()) return false;
  intervals_.clear();
  return true;
}

std::vector<std::int64_t> Domain::values() const {
  std::vector<std::int64_t> out;
  for_each([&out](std::int64_t v) { out.push_back(v); });
  return out;
}

std::string Domain::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Interval& iv : intervals_) {
    if (!first) os << ',';
    first = false;
    if (iv.lo == iv.hi) {
      os << iv.lo;
    } else {
      os << iv.lo << ".." << iv.hi;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace csm::fd
