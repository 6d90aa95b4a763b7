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

#include "rnarith/limit.hpp"

#include <algorithm>

#include "rnarith/ordering.hpp"

namespace rnarith {

namespace {

void require_symmetric(const GridParams& params) {
  if (params.grid != GridMode::SymmetricRegion) {
    throw DomainError(Errc::ModeMismatch,
                      "limit diagnostics target the symmetric-region grid");
  }
}

void require_window(const Rational& a, const Rational& b) {
  if (!(0 < a && a < b)) {
    throw DomainError(Errc::UsageError, "need a probe window 0 < a < b");
  }
}

Rational region_bottom(const GridParams& params, const BigInt& e) {
  return pow_signed(static_cast<unsigned>(params.base),
                    BigInt(params.digits()) * e - params.half_digits);
}

}  // namespace

RegionBounds region_bounds(const GridParams& params, const BigInt& e) {
  params.validate();
  require_symmetric(params);
  const Rational low = region_bottom(params, e);
  const BigInt points =
      pow_big(static_cast<unsigned>(params.base), BigInt(params.digits())) - 1;
  return RegionBounds{low, Rational(points) * low, low};
}

LimitRow limit_row(int base, int n) {
  GridParams params{base, n, GridMode::SymmetricRegion,
                    RoundMode::TruncateTowardZero};
  params.validate();
  const RegionBounds bounds = region_bounds(params, 0);
  // 1 sits inside region 0 for every n >= 1, so the nearest boundaries are
  // the bottom of region 0 and the bottom of region 1.
  return LimitRow{n, bounds.low, bounds.high, bounds.step,
                  region_bottom(params, 0), region_bottom(params, 1)};
}

Rational max_gap_in(const GridParams& params, const Rational& a, const Rational& b) {
  params.validate();
  require_window(a, b);
  GridParams seek = params;
  seek.round = RoundMode::RoundUpAway;  // smallest grid point >= a
  RnNumber x = round_to_grid(a, seek);
  Rational prev = value_of(x);
  Rational max_gap = 0;
  while (true) {
    const RnNumber next = succ(x).next;
    const Rational v = value_of(next);
    if (v > b) break;
    max_gap = std::max(max_gap, Rational(v - prev));
    prev = v;
    x = next;
  }
  return max_gap;
}

std::vector<GapRow> convergence_table(int base, int n_lo, int n_hi,
                                      const Rational& a, const Rational& b) {
  if (n_lo > n_hi) {
    throw DomainError(Errc::UsageError, "need n_lo <= n_hi");
  }
  std::vector<GapRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    GridParams params{base, n, GridMode::SymmetricRegion,
                      RoundMode::TruncateTowardZero};
    rows.push_back(GapRow{n, max_gap_in(params, a, b)});
  }
  return rows;
}

std::vector<Rational> symmetric_jump_locations(const GridParams& params,
                                               const Rational& lo,
                                               const Rational& hi) {
  params.validate();
  require_symmetric(params);
  require_window(lo, hi);
  // Boundaries sit at k^(2n*e - n); find every e with lo < bottom(e) < hi.
  const BigInt f = floor_log(static_cast<unsigned>(params.base), lo);
  BigInt e = floor_div(f + params.half_digits, BigInt(params.digits()));
  while (region_bottom(params, e) > lo) --e;
  while (region_bottom(params, e) <= lo) ++e;
  std::vector<Rational> out;
  for (; region_bottom(params, e) < hi; ++e) {
    out.push_back(region_bottom(params, e));
  }
  return out;
}

JumpDemo asymmetric_jump_demo(int base, int n) {
  GridParams probe{base, n, GridMode::SymmetricRegion,
                   RoundMode::TruncateTowardZero};
  probe.validate();
  // Point-at-the-end form: values S * k^(n*e), S in [1, k^n - 1]; enumerate
  // three regions around 1 and locate the first spacing change at or above 1.
  const BigInt top = pow_big(static_cast<unsigned>(base), BigInt(n)) - 1;
  std::vector<Rational> values;
  for (BigInt e = -1; e <= 1; ++e) {
    const Rational unit = pow_signed(static_cast<unsigned>(base), BigInt(n) * e);
    for (BigInt s = 1; s <= top; ++s) {
      values.push_back(Rational(s) * unit);
    }
  }
  std::sort(values.begin(), values.end());

  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const Rational before = values[i] - values[i - 1];
    const Rational after = values[i + 1] - values[i];
    if (values[i] >= 1 && after != before) {
      return JumpDemo{values[i], after / before};
    }
  }
  throw DomainError(Errc::UsageError, "no spacing change found near 1");
}

}  // namespace rnarith
