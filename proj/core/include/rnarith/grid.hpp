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

#include <string>
#include <string_view>

#include "rnarith/errors.hpp"
#include "rnarith/rational.hpp"

namespace rnarith {

/// How the exponent of a number is constrained.
///
/// SymmetricRegion: the mantissa is a 2n-digit significant-figure string
/// (leading zeros significant, the k-al point after position n) and the
/// exponent of k is 2n*e - n for an unbounded integer region index e.
/// Representable positive values form regions of k^{2n}-1 evenly spaced
/// points separated by exponential jumps of k^{2n}.
///
/// FreeExponent: conventional normalized floating point — the 2n-digit
/// significand has a nonzero leading digit and the power-of-k exponent is
/// unconstrained.
enum class GridMode { SymmetricRegion, FreeExponent };

/// Projection rule used when an exact value falls between grid points.
/// Ties in RoundHalfUp resolve away from zero.
enum class RoundMode { TruncateTowardZero, RoundHalfUp, RoundUpAway };

/// Ambient parameters of one arithmetic context. Values from different
/// contexts may not be mixed in a single operation.
struct GridParams {
  int base = 2;        // k >= 2
  int half_digits = 1; // n >= 1; mantissa length is 2n
  GridMode grid = GridMode::SymmetricRegion;
  RoundMode round = RoundMode::TruncateTowardZero;

  int digits() const { return 2 * half_digits; }

  /// Throws DomainError on k < 2 or n < 1.
  void validate() const;

  friend bool operator==(const GridParams&, const GridParams&) = default;
};

/// Throws ParamsMismatch unless a == b.
void require_same_params(const GridParams& a, const GridParams& b);

/// "k=2,n=2,grid=sym,round=trunc"
std::string params_str(const GridParams& params);
GridParams parse_params(std::string_view text);

/// Digit alphabet 0-9 then a-z; text forms support bases up to 36.
int digit_value(char c, int base);
char digit_char(int value);

/// Parses a fixed-width digit string into its integer value. The string
/// length and every digit are validated against params-style constraints.
BigInt digits_to_int(std::string_view digits, int base);

/// Renders value as exactly `width` digits, most significant first.
/// Requires 0 <= value < base^width.
std::string int_to_digits(const BigInt& value, int base, int width);

}  // namespace rnarith
