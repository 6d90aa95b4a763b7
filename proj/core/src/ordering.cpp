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

#include "rnarith/ordering.hpp"

#include "rnarith/internal/grid_math.hpp"

namespace rnarith {

namespace {

using internal::mantissa_hi;
using internal::mantissa_lo;

void require_nonzero(const RnNumber& x, const char* op) {
  if (x.is_zero()) {
    throw DomainError(Errc::UndefinedAtOrigin,
                      std::string(op) + " is not defined on the zero string");
  }
}

// Successor restricted to the positive half-line.
StepResult succ_positive(const GridParams& params, const BigInt& mantissa,
                         const BigInt& exponent) {
  if (mantissa < mantissa_hi(params)) {
    return {RnNumber::from_parts(params, 1, mantissa + 1, exponent), false};
  }
  return {RnNumber::from_parts(params, 1, mantissa_lo(params), exponent + 1),
          true};
}

// Predecessor restricted to the positive half-line; total because the
// exponent is unbounded below.
StepResult pred_positive(const GridParams& params, const BigInt& mantissa,
                         const BigInt& exponent) {
  if (mantissa > mantissa_lo(params)) {
    return {RnNumber::from_parts(params, 1, mantissa - 1, exponent), false};
  }
  return {RnNumber::from_parts(params, 1, mantissa_hi(params), exponent - 1),
          true};
}

}  // namespace

StepResult succ(const RnNumber& x) {
  require_nonzero(x, "succ");
  if (x.sign() > 0) {
    return succ_positive(x.params(), x.mantissa_int(), x.exponent());
  }
  StepResult step = pred_positive(x.params(), x.mantissa_int(), x.exponent());
  return {negate(step.next), step.jumped};
}

StepResult pred(const RnNumber& x) {
  require_nonzero(x, "pred");
  if (x.sign() > 0) {
    return pred_positive(x.params(), x.mantissa_int(), x.exponent());
  }
  StepResult step = succ_positive(x.params(), x.mantissa_int(), x.exponent());
  return {negate(step.next), step.jumped};
}

Rational spacing(const RnNumber& x) {
  require_nonzero(x, "spacing");
  return value_of(succ(x).next) - value_of(x);
}

std::vector<RnNumber> enumerate_region(const GridParams& params, const BigInt& e,
                                       int sign) {
  params.validate();
  const BigInt lo = mantissa_lo(params);
  const BigInt hi = mantissa_hi(params);
  std::vector<RnNumber> out;
  out.reserve((hi - lo + 1).convert_to<std::size_t>());
  if (sign > 0) {
    for (BigInt m = lo; m <= hi; ++m) {
      out.push_back(RnNumber::from_parts(params, 1, m, e));
    }
  } else {
    for (BigInt m = hi; m >= lo; --m) {
      out.push_back(RnNumber::from_parts(params, -1, m, e));
    }
  }
  return out;
}

RnNumber iterate(const RnNumber& x, const BigInt& steps) {
  require_nonzero(x, "iterate");
  const GridParams& params = x.params();
  const BigInt lo = mantissa_lo(params);
  const BigInt per_region = mantissa_hi(params) - lo + 1;

  // Each sign's half-line is order-isomorphic to the integers via
  // index = e * points_per_region + (M - lo); stepping is index arithmetic.
  const BigInt index = x.exponent() * per_region + (x.mantissa_int() - lo);
  const BigInt target =
      x.sign() > 0 ? BigInt(index + steps) : BigInt(index - steps);
  const BigInt e = floor_div(target, per_region);
  const BigInt m = lo + (target - e * per_region);
  return RnNumber::from_parts(params, x.sign(), m, e);
}

}  // namespace rnarith
