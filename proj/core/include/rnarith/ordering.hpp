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

#include <vector>

#include "rnarith/number.hpp"

namespace rnarith {

struct StepResult {
  RnNumber next;
  bool jumped;  // true iff the region exponent changed
};

/// Immediate successor in value order. Within a region this adds one unit
/// in the last place; at the top mantissa it crosses to the bottom of region
/// e+1. On negatives the ordering mirrors: stepping up moves toward zero by
/// walking the positive chain backwards and flipping the sign. Zero is not
/// in the domain (UndefinedAtOrigin) and is never returned: the exponent is
/// unbounded below, so chains approach the origin without reaching it.
StepResult succ(const RnNumber& x);

/// Inverse of succ: pred(succ(x).next) == x. Zero is not in the domain or
/// the range.
StepResult pred(const RnNumber& x);

/// value_of(succ(x).next) - value_of(x); constant k^(2n*e - n) within a
/// region. Requires x != 0.
Rational spacing(const RnNumber& x);

/// All points of one region for one sign in ascending value order —
/// k^{2n}-1 points with constant spacing (SymmetricRegion).
std::vector<RnNumber> enumerate_region(const GridParams& params, const BigInt& e,
                                       int sign);

/// steps-fold application of succ (positive steps) or pred (negative).
/// Computed by index arithmetic, so large step counts stay cheap.
RnNumber iterate(const RnNumber& x, const BigInt& steps);

}  // namespace rnarith
