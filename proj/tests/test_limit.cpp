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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rnarith/limit.hpp"
#include "rnarith/ordering.hpp"

using namespace rnarith;

namespace {

GridParams sym(int base, int n) {
  return GridParams{base, n, GridMode::SymmetricRegion,
                    RoundMode::TruncateTowardZero};
}

}  // namespace

TEST_CASE("region bounds instantiate the closed-form triple") {
  const RegionBounds b = region_bounds(sym(2, 2), 0);
  CHECK(b.low == Rational(1, 4));
  CHECK(b.high == Rational(15, 4));
  CHECK(b.step == Rational(1, 4));

  for (int n = 1; n <= 6; ++n) {
    const RegionBounds e0 = region_bounds(sym(2, n), 0);
    CHECK(e0.low == pow_signed(2, -n));
    CHECK(e0.high == pow_signed(2, n) - pow_signed(2, -n));
    CHECK(e0.step == pow_signed(2, -n));
  }

  // Exponent translation scales the bounds by k^2n.
  for (long e = -2; e <= 2; ++e) {
    const RegionBounds lower = region_bounds(sym(2, 2), e);
    const RegionBounds upper = region_bounds(sym(2, 2), e + 1);
    CHECK(upper.low / lower.low == 16);
  }

  GridParams free_grid = sym(2, 2);
  free_grid.grid = GridMode::FreeExponent;
  CHECK_THROWS_AS(region_bounds(free_grid, 0), DomainError);
}

TEST_CASE("bounds agree with region enumeration and stepping") {
  const GridParams params = sym(2, 3);
  for (long e = -1; e <= 1; ++e) {
    const RegionBounds b = region_bounds(params, e);
    const auto region = enumerate_region(params, e, 1);
    CHECK(value_of(region.front()) == b.low);
    CHECK(value_of(region.back()) == b.high);
    CHECK(spacing(region.front()) == b.step);
  }
}

TEST_CASE("limit rows pin the jump-free range around 1") {
  for (int n = 2; n <= 12; ++n) {
    const LimitRow row = limit_row(2, n);
    CHECK(row.low == pow_signed(2, -n));
    CHECK(row.high == pow_signed(2, n) - pow_signed(2, -n));
    CHECK(row.step == pow_signed(2, -n));
    CHECK(row.jump_below_one == pow_signed(2, -n));
    CHECK(row.jump_above_one == pow_signed(2, n));
  }
  // The jump-free range widens toward 0 and infinity.
  for (int n = 2; n <= 11; ++n) {
    CHECK(limit_row(2, n + 1).low < limit_row(2, n).low);
    CHECK(limit_row(2, n + 1).high > limit_row(2, n).high);
  }
}

TEST_CASE("the largest gap in a fixed window shrinks like the step") {
  const auto rows = convergence_table(2, 2, 16, Rational(1, 2), 2);
  for (const GapRow& row : rows) {
    CHECK(row.max_gap == pow_signed(2, -row.n));
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i + 1].max_gap <= rows[i].max_gap);
  }
}

TEST_CASE("gap scans see region boundaries when the window spans them") {
  // n=1 over [1/8, 8] spans three regions; the widest gap is the top one.
  const Rational gap = max_gap_in(sym(2, 1), Rational(1, 8), 8);
  CHECK(gap == 2);

  CHECK_THROWS_AS(max_gap_in(sym(2, 1), Rational(2), Rational(1)), DomainError);
  CHECK_THROWS_AS(max_gap_in(sym(2, 1), Rational(0), Rational(1)), DomainError);
}

TEST_CASE("no spacing jump lies strictly inside the e=0 range") {
  for (int n = 2; n <= 16; ++n) {
    const auto jumps = symmetric_jump_locations(sym(2, n), pow_signed(2, -n),
                                                pow_signed(2, n));
    CHECK(jumps.empty());
  }
}

TEST_CASE("the boundary scanner finds jumps in wider windows") {
  const auto jumps = symmetric_jump_locations(sym(2, 1), Rational(1, 8), 8);
  REQUIRE(jumps.size() == 2);
  CHECK(jumps[0] == Rational(1, 2));
  CHECK(jumps[1] == 2);

  // Verify the spacing ratio at a found boundary via local stepping.
  const RnNumber at = round_to_grid(jumps[1], sym(2, 1));
  CHECK(value_of(at) == jumps[1]);
  CHECK(spacing(at) / spacing(pred(at).next) == 4);
}

TEST_CASE("the point-at-the-end form keeps a jump pinned at 1") {
  for (int n = 2; n <= 8; ++n) {
    const JumpDemo demo = asymmetric_jump_demo(2, n);
    CHECK(demo.location == 1);
    CHECK(demo.ratio == pow_signed(2, n));
  }
  const JumpDemo decimal = asymmetric_jump_demo(10, 2);
  CHECK(decimal.location == 1);
  CHECK(decimal.ratio == 100);
}
