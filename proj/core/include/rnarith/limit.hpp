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

// Finite-n diagnostics for the large-n behavior of the grid: how the
// jump-free range around 1 grows, how the in-range spacing shrinks, and how
// the symmetric mantissa form compares with the point-at-the-end form.

struct RegionBounds {
  Rational low;   // k^(2n*e - n)
  Rational high;  // (k^n - k^-n) * k^(2n*e)
  Rational step;  // equals low's region step k^(2n*e - n)
};

/// SymmetricRegion only (ModeMismatch otherwise).
RegionBounds region_bounds(const GridParams& params, const BigInt& e);

struct LimitRow {
  int n;
  Rational low;             // k^-n
  Rational high;            // k^n - k^-n
  Rational step;            // k^-n
  Rational jump_below_one;  // nearest region boundary <= 1
  Rational jump_above_one;  // nearest region boundary > 1
};

LimitRow limit_row(int base, int n);

/// Largest gap between consecutive representable values inside [a, b],
/// 0 < a < b, computed by walking the successor chain.
Rational max_gap_in(const GridParams& params, const Rational& a, const Rational& b);

struct GapRow {
  int n;
  Rational max_gap;
};

std::vector<GapRow> convergence_table(int base, int n_lo, int n_hi,
                                      const Rational& a, const Rational& b);

/// Region-boundary values (where the spacing changes by k^2n) strictly
/// inside (lo, hi) on the positive axis of the symmetric grid.
std::vector<Rational> symmetric_jump_locations(const GridParams& params,
                                               const Rational& lo,
                                               const Rational& hi);

struct JumpDemo {
  Rational location;
  Rational ratio;  // spacing after / spacing before
};

/// The point-at-the-end form (n digits, exponent step k^n) keeps an
/// exponential spacing jump pinned at the value 1 for every n; this locates
/// it by enumerating that grid around 1 and comparing adjacent gaps.
JumpDemo asymmetric_jump_demo(int base, int n);

}  // namespace rnarith
