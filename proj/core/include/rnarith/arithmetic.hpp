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

#include <utility>

#include "rnarith/number.hpp"

namespace rnarith {

// Every operation here is exact-then-round: compute the exact rational
// result of the operation on the operands' exact values, then project once
// onto the grid with the context round mode. This makes add and mul
// commutative by construction; associativity does not survive rounding.

/// Throws ParamsMismatch across contexts. An exact zero sum returns the
/// canonical zero.
RnNumber add(const RnNumber& a, const RnNumber& b);
RnNumber subtract(const RnNumber& a, const RnNumber& b);
RnNumber mul(const RnNumber& a, const RnNumber& b);
/// Exact quotient, then one projection. Throws DivisionByZero.
RnNumber divide(const RnNumber& a, const RnNumber& b);

/// String-number equality: true iff the canonical forms are identical.
/// Throws ParamsMismatch across contexts.
bool eq_2n(const RnNumber& a, const RnNumber& b);

/// Complex grid number: an ordered pair of same-context components.
class CnNumber {
 public:
  CnNumber(RnNumber re, RnNumber im);

  static CnNumber zero(const GridParams& params);
  static CnNumber one(const GridParams& params);

  const RnNumber& re() const { return re_; }
  const RnNumber& im() const { return im_; }
  const GridParams& params() const { return re_.params(); }

  friend bool operator==(const CnNumber&, const CnNumber&) = default;

 private:
  RnNumber re_;
  RnNumber im_;
};

CnNumber cadd(const CnNumber& a, const CnNumber& b);
/// Exact complex product over rational pairs, then one rounding per
/// component. Partial products are never rounded.
CnNumber cmul(const CnNumber& a, const CnNumber& b);
CnNumber conj(const CnNumber& a);
CnNumber cnegate(const CnNumber& a);

/// Whether an operation stayed inside one region or jumped between regions.
struct OpClassification {
  enum class Kind { Region, Jump };
  Kind kind;
  std::pair<BigInt, BigInt> regions_in;
  BigInt region_out;
};

/// Region iff both inputs and the result share one exponent index.
OpClassification classify_op(const RnNumber& a, const RnNumber& b,
                             const RnNumber& result);

/// Compares add(add(a,b),c) with add(a,add(b,c)). Both groupings are
/// returned so a mismatch carries its own witness.
struct AssocCheck {
  bool holds;
  RnNumber lhs;  // (a+b)+c
  RnNumber rhs;  // a+(b+c)
};

AssocCheck check_associative(const RnNumber& a, const RnNumber& b,
                             const RnNumber& c);

}  // namespace rnarith
