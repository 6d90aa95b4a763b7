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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rnarith/number.hpp"

namespace rnarith {

// Measurement outcomes are fixed-point base-k digit strings with a point
// and an optional sign, e.g. "11.011". Every digit is significant, including
// zeros left of the leading nonzero digit (a measured sub-threshold
// position) and trailing zeros. The figure count of an outcome is therefore
// its digit count.

/// Exact value of an outcome string. Throws MalformedString.
Rational outcome_value(std::string_view outcome, int base);

/// Digit count of an outcome string (the point does not count).
int outcome_figures(std::string_view outcome);

struct Interval {
  Rational lo;
  Rational hi;
};

/// Bin assignment for outcomes: outcome o covers
/// [value(o) - delta_lower, value(o) + delta_upper]. Both deltas >= 0.
/// Per-outcome overrides take precedence over the constant deltas.
struct CoarseGrainRule {
  Rational delta_lower;
  Rational delta_upper;
  std::map<std::string, std::pair<Rational, Rational>> per_outcome;
};

Interval bin_of(std::string_view outcome, int base, const CoarseGrainRule& rule);

/// The figures-digit outcome whose bin contains q: |q| is rounded to
/// `figures` significant base-k digits with the context round mode, then
/// rendered fixed-point (zero padding carries the scale, e.g. "0.0323" or
/// "32300."). Requires figures >= 1.
std::string coarse_grain(const Rational& q, int figures, const GridParams& params);

/// Maps an outcome into the 2n-digit symmetric grid by zero-padding the
/// mantissa around the k-al point; the exact value is preserved. Throws
/// PrecisionExceedsTarget when the outcome has more figures than n, and
/// ModeMismatch for FreeExponent targets.
RnNumber embed(std::string_view outcome, const GridParams& params);

/// One reading of the j-th instrument in the infinite hierarchy of
/// finite-range instruments. Instrument j detects quantities in
/// [u_j, k^digits * u_j) with unit u_j = k^(digits*(j-1)); below is
/// NonDetect, at or above full scale is OffScale (and threshold detection
/// for instrument j+1, so the ranges tile (0, inf)).
struct ApparatusReading {
  enum class Kind { NonDetect, Value, OffScale };
  Kind kind;
  std::string digits;  // empty unless kind == Value
  BigInt apparatus_index;
};

/// Throws NegativeQuantity for q < 0.
ApparatusReading apparatus_reading(const Rational& q, const BigInt& j, int digits,
                                   int base);

std::vector<ApparatusReading> hierarchy_scan(const Rational& q, const BigInt& j_lo,
                                             const BigInt& j_hi, int digits,
                                             int base);

}  // namespace rnarith
