// Copyright 2026 The rnarith Authors
//
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

// Test-only brute-force oracles. Everything here works by exhaustive
// enumeration and exact rational comparison, independent of the rounding
// and stepping code paths it is used to check.

#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "rnarith/internal/grid_math.hpp"
#include "rnarith/number.hpp"

namespace rnarith::testing {

// Every canonical number with exponent in [e_lo, e_hi], both signs, plus
// zero (optional), in no particular order.
inline std::vector<RnNumber> all_numbers(const GridParams& params, long e_lo,
                                         long e_hi, bool with_zero = true) {
  std::vector<RnNumber> out;
  if (with_zero) out.push_back(RnNumber::zero(params));
  const BigInt lo = internal::mantissa_lo(params);
  const BigInt hi = internal::mantissa_hi(params);
  for (long e = e_lo; e <= e_hi; ++e) {
    for (BigInt m = lo; m <= hi; ++m) {
      out.push_back(RnNumber::from_parts(params, 1, m, e));
      out.push_back(RnNumber::from_parts(params, -1, m, e));
    }
  }
  return out;
}

inline std::vector<RnNumber> sorted_by_value(std::vector<RnNumber> xs) {
  std::sort(xs.begin(), xs.end(), [](const RnNumber& a, const RnNumber& b) {
    return value_of(a) < value_of(b);
  });
  return xs;
}

// Brute-force rounding over an enumerated candidate set: scan every grid
// value and keep the one the round mode selects. q must lie inside the
// value range covered by `sorted` (same sign side).
inline RnNumber brute_force_round(const Rational& q,
                                  const std::vector<RnNumber>& sorted,
                                  RoundMode mode) {
  const RnNumber* below = nullptr;  // largest value <= q
  const RnNumber* above = nullptr;  // smallest value >= q
  for (const RnNumber& x : sorted) {
    const Rational v = value_of(x);
    if (v <= q) below = &x;
    if (v >= q) {
      above = &x;
      break;
    }
  }
  if (below == nullptr || above == nullptr) {
    throw std::logic_error("oracle: q outside the enumerated coverage");
  }
  if (value_of(*below) == q) return *below;
  switch (mode) {
    case RoundMode::TruncateTowardZero:
      return q > 0 ? *below : *above;
    case RoundMode::RoundUpAway:
      return q > 0 ? *above : *below;
    case RoundMode::RoundHalfUp: {
      const Rational down = q - value_of(*below);
      const Rational up = value_of(*above) - q;
      if (down < up) return *below;
      if (up < down) return *above;
      return q > 0 ? *above : *below;  // tie: away from zero
    }
  }
  return *below;
}

// Deterministic random rationals for property tests.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  Rational in_range(const Rational& lo, const Rational& hi, long denominator_bound) {
    std::uniform_int_distribution<long> den_dist(1, denominator_bound);
    const long den = den_dist(rng_);
    const BigInt lo_num = ceil_rat(lo * den);
    const BigInt hi_num = floor_rat(hi * den);
    const long span = (hi_num - lo_num).convert_to<long>();
    std::uniform_int_distribution<long> num_dist(0, span);
    return Rational(lo_num + num_dist(rng_), BigInt(den));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rnarith::testing
