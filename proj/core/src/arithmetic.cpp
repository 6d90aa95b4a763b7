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

#include "rnarith/arithmetic.hpp"

namespace rnarith {

RnNumber add(const RnNumber& a, const RnNumber& b) {
  require_same_params(a.params(), b.params());
  return round_to_grid(value_of(a) + value_of(b), a.params());
}

RnNumber subtract(const RnNumber& a, const RnNumber& b) {
  return add(a, negate(b));
}

RnNumber mul(const RnNumber& a, const RnNumber& b) {
  require_same_params(a.params(), b.params());
  return round_to_grid(value_of(a) * value_of(b), a.params());
}

RnNumber divide(const RnNumber& a, const RnNumber& b) {
  require_same_params(a.params(), b.params());
  if (b.is_zero()) {
    throw DomainError(Errc::DivisionByZero, "division by the zero string");
  }
  return round_to_grid(value_of(a) / value_of(b), a.params());
}

bool eq_2n(const RnNumber& a, const RnNumber& b) {
  require_same_params(a.params(), b.params());
  return a == b;
}

CnNumber::CnNumber(RnNumber re, RnNumber im)
    : re_(std::move(re)), im_(std::move(im)) {
  require_same_params(re_.params(), im_.params());
}

CnNumber CnNumber::zero(const GridParams& params) {
  return CnNumber(RnNumber::zero(params), RnNumber::zero(params));
}

CnNumber CnNumber::one(const GridParams& params) {
  return CnNumber(RnNumber::one(params), RnNumber::zero(params));
}

CnNumber cadd(const CnNumber& a, const CnNumber& b) {
  return CnNumber(add(a.re(), b.re()), add(a.im(), b.im()));
}

CnNumber cmul(const CnNumber& a, const CnNumber& b) {
  require_same_params(a.params(), b.params());
  const Rational ar = value_of(a.re()), ai = value_of(a.im());
  const Rational br = value_of(b.re()), bi = value_of(b.im());
  return CnNumber(round_to_grid(ar * br - ai * bi, a.params()),
                  round_to_grid(ar * bi + ai * br, a.params()));
}

CnNumber conj(const CnNumber& a) {
  return CnNumber(a.re(), negate(a.im()));
}

CnNumber cnegate(const CnNumber& a) {
  return CnNumber(negate(a.re()), negate(a.im()));
}

OpClassification classify_op(const RnNumber& a, const RnNumber& b,
                             const RnNumber& result) {
  const bool same_region =
      a.exponent() == b.exponent() && b.exponent() == result.exponent();
  return OpClassification{
      same_region ? OpClassification::Kind::Region : OpClassification::Kind::Jump,
      {a.exponent(), b.exponent()},
      result.exponent()};
}

AssocCheck check_associative(const RnNumber& a, const RnNumber& b,
                             const RnNumber& c) {
  RnNumber lhs = add(add(a, b), c);
  RnNumber rhs = add(a, add(b, c));
  const bool holds = lhs == rhs;
  return AssocCheck{holds, std::move(lhs), std::move(rhs)};
}

}  // namespace rnarith
