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

#include <compare>
#include <string>
#include <string_view>

#include "rnarith/grid.hpp"

namespace rnarith {

/// One element of the finite significant-figure number system: a sign, a
/// 2n-digit base-k mantissa (stored as its integer value M) and an unbounded
/// exponent index e.
///
///   SymmetricRegion: value = sign * M * k^(2n*e - n),  1 <= M <= k^{2n}-1
///   FreeExponent:    value = sign * M * k^(e - n),     k^{2n-1} <= M < k^{2n}
///
/// The zero element is (sign +1, M = 0, e = 0) in both modes. Canonical
/// representations are unique, so structural equality is value equality.
/// Instances are immutable.
class RnNumber {
 public:
  /// Validates canonical form; throws DomainError otherwise.
  static RnNumber from_parts(const GridParams& params, int sign, BigInt mantissa,
                             BigInt exponent);

  static RnNumber zero(const GridParams& params);
  /// The grid point of value 1 (exact in both modes).
  static RnNumber one(const GridParams& params);

  const GridParams& params() const { return params_; }
  int sign() const { return sign_; }
  const BigInt& mantissa_int() const { return mantissa_; }
  const BigInt& exponent() const { return exponent_; }
  bool is_zero() const { return mantissa_ == 0; }

  /// The mantissa as a 2n-digit string, most significant digit first.
  std::string mantissa_digits() const;

  friend bool operator==(const RnNumber&, const RnNumber&) = default;

 private:
  RnNumber(const GridParams& params, int sign, BigInt mantissa, BigInt exponent)
      : params_(params), sign_(sign), mantissa_(std::move(mantissa)),
        exponent_(std::move(exponent)) {}

  GridParams params_;
  int sign_;
  BigInt mantissa_;
  BigInt exponent_;
};

/// Builds a number from a digit string of length exactly 2n.
/// Errors: WrongMantissaLength, DigitOutOfRange, NonCanonicalZero (zero
/// mantissa with e != 0 or sign -1), NotNormalized (FreeExponent leading 0).
RnNumber make_number(const GridParams& params, int sign, std::string_view mantissa,
                     const BigInt& exponent);

/// Exact rational value of a grid point; value_of(zero) = 0. Injective on
/// canonical forms.
Rational value_of(const RnNumber& x);

/// Correctly rounded projection of an arbitrary rational onto the grid:
/// locate the unique region/exponent for |q|, scale to a raw mantissa and
/// apply the context round mode once. A carry past the top of the mantissa
/// range moves to the next region. There is no overflow or underflow; the
/// exponent is unbounded. round_to_grid(value_of(x)) == x for every x.
RnNumber round_to_grid(const Rational& q, const GridParams& params);

/// Value order. Equality holds iff the canonical representations coincide.
/// Throws ParamsMismatch across contexts.
std::strong_ordering compare(const RnNumber& a, const RnNumber& b);

/// Sign flip; zero is fixed.
RnNumber negate(const RnNumber& x);

// --- Text and record forms -------------------------------------------------
//
// Literal:  {+|-}{s-digits}.{t-digits}e{signed-decimal-e}  with the k-al
// point after position n. Positive numbers print unsigned, negative with
// '-', and the canonical zero prints as "+0...0.0...0e0". Parsing accepts an
// optional sign on any number.
//
// Record:   {"k":..,"n":..,"sign":..,"mantissa":"..","e":".."} — a single
// JSON object per number, mantissa as a digit string and e as a decimal
// string so the unbounded exponent round-trips bit-exactly.

std::string to_literal(const RnNumber& x);
RnNumber parse_literal(std::string_view text, const GridParams& params);

std::string to_record_json(const RnNumber& x);
RnNumber from_record_json(std::string_view text, GridMode grid, RoundMode round);

}  // namespace rnarith
