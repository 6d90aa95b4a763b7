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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rnarith {

/// Unbounded signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational value: reduced, denominator > 0, no rounding anywhere.
/// This is the oracle value space for every number and operation in the
/// library.
using Rational = boost::multiprecision::cpp_rational;

/// base^exp for exp >= 0. Throws ExponentOverflow on absurdly large exp.
BigInt pow_big(unsigned base, const BigInt& exp);

/// base^exp as an exact rational, exp of any sign.
Rational pow_signed(unsigned base, const BigInt& exp);

/// Floor division (rounds toward negative infinity). den != 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

BigInt floor_rat(const Rational& q);
BigInt ceil_rat(const Rational& q);

/// Largest F with base^F <= q. Requires q > 0, base >= 2.
BigInt floor_log(unsigned base, const Rational& q);

/// Strict signed decimal integer: optional sign then digits only. Leading
/// zeros are plain decimal (never octal). Throws MalformedString.
BigInt parse_decimal_int(std::string_view text);

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string fraction_str(const Rational& q);

/// Accepts "p", "p/q" and plain decimal forms like "-3.25" or "0.5774".
Rational parse_rational_text(std::string_view text);

}  // namespace rnarith
