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

#include "rnarith/number.hpp"

#include <nlohmann/json.hpp>

#include "rnarith/internal/grid_math.hpp"

namespace rnarith {

namespace internal {

BigInt mantissa_lo(const GridParams& params) {
  if (params.grid == GridMode::SymmetricRegion) return 1;
  return pow_big(static_cast<unsigned>(params.base),
                 BigInt(params.digits() - 1));
}

BigInt mantissa_hi(const GridParams& params) {
  return pow_big(static_cast<unsigned>(params.base), BigInt(params.digits())) -
         1;
}

BigInt scale_exponent(const GridParams& params, const BigInt& e) {
  if (params.grid == GridMode::SymmetricRegion) {
    return BigInt(params.digits()) * e - params.half_digits;
  }
  return e - params.half_digits;
}

BigInt round_mantissa(const Rational& raw, RoundMode mode) {
  switch (mode) {
    case RoundMode::TruncateTowardZero:
      return floor_rat(raw);  // raw > 0 here
    case RoundMode::RoundHalfUp:
      return floor_rat(raw + Rational(1, 2));
    case RoundMode::RoundUpAway:
      return ceil_rat(raw);
  }
  return floor_rat(raw);
}

}  // namespace internal

using internal::mantissa_hi;
using internal::mantissa_lo;
using internal::scale_exponent;

RnNumber RnNumber::from_parts(const GridParams& params, int sign, BigInt mantissa,
                              BigInt exponent) {
  params.validate();
  if (sign != 1 && sign != -1) {
    throw DomainError(Errc::UsageError, "sign must be +1 or -1");
  }
  if (mantissa == 0) {
    if (exponent != 0 || sign != 1) {
      throw DomainError(Errc::NonCanonicalZero,
                        "zero must be (+, all-zero mantissa, e=0)");
    }
    return RnNumber(params, 1, 0, 0);
  }
  if (mantissa < 0 || mantissa > mantissa_hi(params)) {
    throw DomainError(Errc::DigitOutOfRange,
                      "mantissa outside the 2n-digit range");
  }
  if (params.grid == GridMode::FreeExponent && mantissa < mantissa_lo(params)) {
    throw DomainError(Errc::NotNormalized,
                      "FreeExponent mantissa must have a nonzero leading digit");
  }
  return RnNumber(params, sign, std::move(mantissa), std::move(exponent));
}

RnNumber RnNumber::zero(const GridParams& params) {
  return from_parts(params, 1, 0, 0);
}

RnNumber RnNumber::one(const GridParams& params) {
  if (params.grid == GridMode::SymmetricRegion) {
    // 1 = k^n * k^(2n*0 - n)
    return from_parts(params, 1,
                      pow_big(static_cast<unsigned>(params.base),
                              BigInt(params.half_digits)),
                      0);
  }
  // 1 = k^{2n-1} * k^(e - n) with e = 1 - n.
  return from_parts(params, 1, mantissa_lo(params), BigInt(1 - params.half_digits));
}

std::string RnNumber::mantissa_digits() const {
  return int_to_digits(mantissa_, params_.base, params_.digits());
}

RnNumber make_number(const GridParams& params, int sign, std::string_view mantissa,
                     const BigInt& exponent) {
  params.validate();
  if (static_cast<int>(mantissa.size()) != params.digits()) {
    throw DomainError(Errc::WrongMantissaLength,
                      "mantissa must have exactly " +
                          std::to_string(params.digits()) + " digits, got " +
                          std::to_string(mantissa.size()));
  }
  return RnNumber::from_parts(params, sign, digits_to_int(mantissa, params.base),
                              exponent);
}

Rational value_of(const RnNumber& x) {
  if (x.is_zero()) return Rational(0);
  Rational magnitude =
      Rational(x.mantissa_int()) *
      pow_signed(static_cast<unsigned>(x.params().base),
                 scale_exponent(x.params(), x.exponent()));
  return x.sign() < 0 ? -magnitude : magnitude;
}

RnNumber round_to_grid(const Rational& q, const GridParams& params) {
  params.validate();
  if (q == 0) return RnNumber::zero(params);

  const int sign = q < 0 ? -1 : 1;
  const Rational magnitude = sign < 0 ? -q : q;
  const unsigned base = static_cast<unsigned>(params.base);
  const int two_n = params.digits();

  // Exponent index such that |q| scaled by the region step lands in the
  // mantissa range [lo, hi+1).
  const BigInt f = floor_log(base, magnitude);
  BigInt exponent;
  if (params.grid == GridMode::SymmetricRegion) {
    exponent = floor_div(f + params.half_digits, BigInt(two_n));
  } else {
    exponent = f - params.half_digits + 1;
  }

  const Rational raw =
      magnitude * pow_signed(base, -scale_exponent(params, exponent));
  BigInt mant = internal::round_mantissa(raw, params.round);
  if (mant > mantissa_hi(params)) {
    // Carry into the next region: the bottom point there has the same value
    // as mantissa hi+1 here.
    mant = mantissa_lo(params);
    ++exponent;
  }
  return RnNumber::from_parts(params, sign, std::move(mant), std::move(exponent));
}

std::strong_ordering compare(const RnNumber& a, const RnNumber& b) {
  require_same_params(a.params(), b.params());
  const int sa = a.is_zero() ? 0 : a.sign();
  const int sb = b.is_zero() ? 0 : b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;

  // Same nonzero sign: regions are disjoint and ordered by exponent, so
  // (e, M) decides lexicographically; flip for negatives.
  auto order_big = [](const BigInt& x, const BigInt& y) {
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  };
  std::strong_ordering magnitude = order_big(a.exponent(), b.exponent());
  if (magnitude == std::strong_ordering::equal) {
    magnitude = order_big(a.mantissa_int(), b.mantissa_int());
  }
  if (sa > 0) return magnitude;
  if (magnitude == std::strong_ordering::less) return std::strong_ordering::greater;
  if (magnitude == std::strong_ordering::greater) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

RnNumber negate(const RnNumber& x) {
  if (x.is_zero()) return x;
  return RnNumber::from_parts(x.params(), -x.sign(), x.mantissa_int(),
                              x.exponent());
}

std::string to_literal(const RnNumber& x) {
  const int n = x.params().half_digits;
  const std::string digits = x.mantissa_digits();
  std::string out;
  if (x.is_zero()) out += '+';
  else if (x.sign() < 0) out += '-';
  out += digits.substr(0, static_cast<std::size_t>(n));
  out += '.';
  out += digits.substr(static_cast<std::size_t>(n));
  out += 'e';
  out += x.exponent().str();
  return out;
}

RnNumber parse_literal(std::string_view text, const GridParams& params) {
  auto fail = [&](const std::string& why) {
    throw DomainError(Errc::MalformedString,
                      "bad number literal '" + std::string(text) + "': " + why);
  };
  std::string_view rest = text;
  int sign = 1;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    sign = rest.front() == '-' ? -1 : 1;
    rest.remove_prefix(1);
  }
  const auto point = rest.find('.');
  if (point == std::string_view::npos) fail("missing k-al point");
  const auto marker = rest.find('e', point + 1);
  if (marker == std::string_view::npos) fail("missing exponent marker 'e'");
  const std::string_view s_part = rest.substr(0, point);
  const std::string_view t_part = rest.substr(point + 1, marker - point - 1);
  const std::string_view e_part = rest.substr(marker + 1);
  if (e_part.empty()) fail("empty exponent");

  BigInt exponent;
  try {
    exponent = parse_decimal_int(e_part);
  } catch (const DomainError&) {
    fail("exponent is not a decimal integer");
  }
  const int n = params.half_digits;
  if (static_cast<int>(s_part.size()) != n ||
      static_cast<int>(t_part.size()) != n) {
    throw DomainError(Errc::WrongMantissaLength,
                      "literal '" + std::string(text) + "' needs " +
                          std::to_string(n) + " digits on each side of the point");
  }
  const std::string mantissa = std::string(s_part) + std::string(t_part);
  return make_number(params, sign, mantissa, exponent);
}

std::string to_record_json(const RnNumber& x) {
  nlohmann::ordered_json record;
  record["k"] = x.params().base;
  record["n"] = x.params().half_digits;
  record["sign"] = x.sign();
  record["mantissa"] = x.mantissa_digits();
  record["e"] = x.exponent().str();
  return record.dump();
}

RnNumber from_record_json(std::string_view text, GridMode grid, RoundMode round) {
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(text);
  } catch (const std::exception& err) {
    throw DomainError(Errc::MalformedString,
                      std::string("bad number record: ") + err.what());
  }
  try {
    GridParams params{record.at("k").get<int>(), record.at("n").get<int>(), grid,
                      round};
    const int sign = record.at("sign").get<int>();
    const std::string mantissa = record.at("mantissa").get<std::string>();
    const BigInt exponent = parse_decimal_int(record.at("e").get<std::string>());
    return make_number(params, sign, mantissa, exponent);
  } catch (const nlohmann::json::exception& err) {
    throw DomainError(Errc::MalformedString,
                      std::string("bad number record: ") + err.what());
  }
}

}  // namespace rnarith
