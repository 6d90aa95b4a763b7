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

#include "rnarith/rational.hpp"

#include <cctype>
#include <cmath>

#include "rnarith/errors.hpp"

namespace rnarith {

namespace {

// Enough for any sane grid; pow_big beyond this would allocate gigabytes.
constexpr long long kMaxPowerExponent = 1'000'000;

}  // namespace

BigInt pow_big(unsigned base, const BigInt& exp) {
  if (exp < 0) {
    throw DomainError(Errc::ExponentOverflow, "pow_big: negative exponent");
  }
  if (exp > kMaxPowerExponent) {
    throw DomainError(Errc::ExponentOverflow,
                      "exponent too large to materialize: " + exp.str());
  }
  return boost::multiprecision::pow(BigInt(base), exp.convert_to<unsigned>());
}

Rational pow_signed(unsigned base, const BigInt& exp) {
  if (exp >= 0) {
    return Rational(pow_big(base, exp));
  }
  return Rational(BigInt(1), pow_big(base, -exp));
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) {
    --q;
  }
  return q;
}

BigInt floor_rat(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

BigInt ceil_rat(const Rational& q) {
  return -floor_div(-numerator(q), denominator(q));
}

BigInt floor_log(unsigned base, const Rational& q) {
  if (base < 2) {
    throw DomainError(Errc::UsageError, "floor_log: base must be >= 2");
  }
  if (q <= 0) {
    throw DomainError(Errc::UsageError, "floor_log: argument must be > 0");
  }
  // k^F <= q, checked by cross multiplication so nothing is ever rounded.
  auto pow_le = [&](const BigInt& f) {
    if (f >= 0) return pow_big(base, f) * denominator(q) <= numerator(q);
    return denominator(q) <= numerator(q) * pow_big(base, -f);
  };

  // Initial guess from bit lengths; the exact loops below fix it up.
  const long bits_num = static_cast<long>(boost::multiprecision::msb(numerator(q)));
  const long bits_den = static_cast<long>(boost::multiprecision::msb(denominator(q)));
  const double approx =
      static_cast<double>(bits_num - bits_den) * 0.6931471805599453 /
      std::log(static_cast<double>(base));
  BigInt f = static_cast<long long>(std::floor(approx));

  while (!pow_le(f)) --f;
  while (pow_le(f + 1)) ++f;
  return f;
}

BigInt parse_decimal_int(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) {
    throw DomainError(Errc::MalformedString,
                      "not a decimal integer: '" + std::string(text) + "'");
  }
  BigInt acc = 0;
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError(Errc::MalformedString,
                        "not a decimal integer: '" + std::string(text) + "'");
    }
    acc = acc * 10 + (c - '0');
  }
  return neg ? BigInt(-acc) : acc;
}

std::string fraction_str(const Rational& q) {
  if (denominator(q) == 1) {
    return numerator(q).str();
  }
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational_text(std::string_view text) {
  auto fail = [&] {
    throw DomainError(Errc::MalformedString,
                      "not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (num.empty() || den.empty()) fail();
    const BigInt top = parse_decimal_int(num);
    const BigInt bottom = parse_decimal_int(den);
    if (bottom == 0) fail();
    return Rational(top, bottom);
  }

  // Signed decimal with optional fractional part: -12.0625
  std::string_view body = text;
  bool neg = false;
  if (body.front() == '+' || body.front() == '-') {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) fail();
  const auto point = body.find('.');
  std::string digits;
  std::size_t frac_len = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i == point) continue;
    if (!std::isdigit(static_cast<unsigned char>(body[i]))) fail();
    digits.push_back(body[i]);
    if (point != std::string_view::npos && i > point) ++frac_len;
  }
  if (digits.empty()) fail();
  Rational q(parse_decimal_int(digits), pow_big(10, BigInt(frac_len)));
  return neg ? -q : q;
}

}  // namespace rnarith
