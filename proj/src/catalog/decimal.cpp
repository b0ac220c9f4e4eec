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

#include <charconv>
#include <cmath>
#include <string>

#include "csm/catalog.hpp"

namespace csm {
namespace {

int Log10Exact(std::int64_t scale) {
  int digits = 0;
  while (scale > 1) {
    scale /= 10;
    ++digits;
  }
  return digits;
}

}  // namespace

std::optional<std::int64_t> ScaleInteger(std::int64_t value, std::int64_t scale) {
  const __int128 scaled = static_cast<__int128>(value) * scale;
  if (scaled > kMaxScaledMagnitude || scaled < -kMaxScaledMagnitude) return std::nullopt;
  return static_cast<std::int64_t>(scaled);
}

// Works on the shortest round-tripping decimal form of the double, so a
// literal like 99.95 scales to exactly 9995.
std::optional<std::int64_t> ScaleDecimal(double value, std::int64_t scale) {
  if (!std::isfinite(value)) return std::nullopt;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  const std::string text(buf, res.ptr);

  bool negative = false;
  std::string digits;
  int exponent = 0;
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  bool after_point = false;
  for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
    if (text[i] == '.') {
      after_point = true;
      continue;
    }
    digits.push_back(text[i]);
    if (after_point) --exponent;
  }
  if (i < text.size()) exponent += std::stoi(text.substr(i + 1));
  exponent += Log10Exact(scale);

  // value = digits * 10^exponent
  __int128 magnitude = 0;
  bool round_up = false;
  const std::size_t keep =
      exponent >= 0 ? digits.size()
                    : (static_cast<std::size_t>(-exponent) >= digits.size()
                           ? 0
                           : digits.size() - static_cast<std::size_t>(-exponent));
  for (std::size_t k = 0; k < keep; ++k) {
    magnitude = magnitude * 10 + (digits[k] - '0');
    if (magnitude > kMaxScaledMagnitude) return std::nullopt;
  }
  for (int e = 0; e < exponent; ++e) {
    magnitude *= 10;
    if (magnitude > kMaxScaledMagnitude) return std::nullopt;
  }
  if (exponent < 0) {
    // Digits dropped from the right, plus implicit leading zeros when the
    // value is below one.
    const std::size_t dropped_total = static_cast<std::size_t>(-exponent);
    const std::size_t leading_zeros =
        dropped_total > digits.size() ? dropped_total - digits.size() : 0;
    const std::string dropped = digits.substr(keep);
    if (leading_zeros == 0 && !dropped.empty()) {
      const char first = dropped[0];
      const bool rest_nonzero = dropped.find_first_not_of('0', 1) != std::string::npos;
      if (negative) {
        round_up = first > '5' || (first == '5' && rest_nonzero);
      } else {
        round_up = first >= '5';
      }
    }
  }
  if (round_up) ++magnitude;
  if (magnitude > kMaxScaledMagnitude) return std::nullopt;
  const auto result = static_cast<std::int64_t>(magnitude);
  return negative ? -result : result;
}

double Unscale(std::int64_t scaled, std::int64_t scale) {
  return static_cast<double>(scaled) / static_cast<double>(scale);
}

}  // namespace csm
