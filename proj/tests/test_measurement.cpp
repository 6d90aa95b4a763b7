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

#include "oracle.hpp"
#include "rnarith/measurement.hpp"

using namespace rnarith;
using rnarith::testing::RationalGen;

namespace {

const GridParams kBin44{2, 4, GridMode::SymmetricRegion,
                        RoundMode::TruncateTowardZero};

}  // namespace

TEST_CASE("outcome strings parse to exact values") {
  CHECK(outcome_value("11.011", 2) == Rational(27, 8));
  CHECK(outcome_value("0.0011", 2) == Rational(3, 16));
  CHECK(outcome_value("110.", 2) == 6);
  CHECK(outcome_value("-11.011", 2) == Rational(-27, 8));
  CHECK(outcome_figures("11.011") == 5);
  CHECK(outcome_figures("-0.0011") == 5);
  CHECK_THROWS_AS(outcome_value("1.2", 2), DomainError);
  CHECK_THROWS_AS(outcome_value("1.0.1", 2), DomainError);
  CHECK_THROWS_AS(outcome_value(".", 2), DomainError);
}

TEST_CASE("bins are centered intervals with the chosen half-widths") {
  CoarseGrainRule rule{Rational(1, 16), Rational(1, 16), {}};
  const Interval bin = bin_of("11.011", 2, rule);
  CHECK(bin.lo == outcome_value("11.0101", 2));
  CHECK(bin.hi == outcome_value("11.0111", 2));

  CoarseGrainRule degenerate{0, 0, {}};
  const Interval point = bin_of("11.011", 2, degenerate);
  CHECK(point.lo == point.hi);
  CHECK(point.lo == Rational(27, 8));

  // The outcome's own value always lies in its bin.
  CoarseGrainRule lopsided{Rational(1, 32), Rational(3), {}};
  const Interval wide = bin_of("11.011", 2, lopsided);
  CHECK(wide.lo <= Rational(27, 8));
  CHECK(Rational(27, 8) <= wide.hi);
}

TEST_CASE("per-outcome widths override the constant rule") {
  CoarseGrainRule rule{Rational(1, 16), Rational(1, 16), {}};
  rule.per_outcome["11.011"] = {Rational(1, 4), Rational(1, 2)};
  const Interval special = bin_of("11.011", 2, rule);
  CHECK(special.lo == Rational(27, 8) - Rational(1, 4));
  CHECK(special.hi == Rational(27, 8) + Rational(1, 2));
  const Interval regular = bin_of("11.010", 2, rule);
  CHECK(regular.lo == Rational(26, 8) - Rational(1, 16));
}

TEST_CASE("coarse graining fixes grid points and honors the round mode") {
  const GridParams dec{10, 2, GridMode::FreeExponent, RoundMode::RoundHalfUp};
  CHECK(coarse_grain(Rational(3334, 10000), 4, dec) == "0.3334");
  CHECK(coarse_grain(Rational(33339076, 100000000), 4, dec) == "0.3334");
  // Midway: half-up goes away from zero, truncation does not.
  CHECK(coarse_grain(Rational(33335, 100000), 4, dec) == "0.3334");
  GridParams trunc = dec;
  trunc.round = RoundMode::TruncateTowardZero;
  CHECK(coarse_grain(Rational(33335, 100000), 4, trunc) == "0.3333");

  // Scale padding on both sides of the digit run.
  CHECK(coarse_grain(Rational(32256), 3, trunc) == "32200.");
  CHECK(coarse_grain(Rational(32256, 100000000), 3, trunc) == "0.000322");
  CHECK(coarse_grain(Rational(995, 100), 2, dec) == "10.");
  CHECK(coarse_grain(0, 3, dec) == "0.00");
  CHECK(coarse_grain(Rational(-33335, 100000), 4, dec) == "-0.3334");
}

TEST_CASE("values land inside their own coarse-grained bin") {
  RationalGen gen(424242);
  const GridParams dec{10, 3, GridMode::FreeExponent, RoundMode::RoundHalfUp};
  for (int i = 0; i < 300; ++i) {
    const Rational q = gen.in_range(Rational(1, 1000), Rational(5000), 977);
    if (q == 0) continue;
    const std::string outcome = coarse_grain(q, 3, dec);
    // Half-widths of one outcome step at q's magnitude cover the residue.
    const Rational step = pow_signed(10, floor_log(10, q) + 1 - 3);
    CoarseGrainRule rule{step, step, {}};
    const Interval bin = bin_of(outcome, 10, rule);
    CHECK(bin.lo <= q);
    CHECK(q <= bin.hi);
  }
}

TEST_CASE("adjacent bins cover the line once widths reach one step") {
  // Consecutive 4-figure binary outcomes around 11.01; with half-widths
  // summing to the step there is no gap between neighboring bins.
  const Rational step(1, 4);
  CoarseGrainRule rule{step / 2, step / 2, {}};
  const char* outcomes[] = {"11.00", "11.01", "11.10", "11.11"};
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    const Interval left = bin_of(outcomes[i], 2, rule);
    const Interval right = bin_of(outcomes[i + 1], 2, rule);
    CHECK(left.hi >= right.lo);  // no gap
    CHECK(left.lo < right.lo);   // still ordered
  }
}

TEST_CASE("re-graining a grain output is a fixed point") {
  RationalGen gen(2026);
  const GridParams dec{10, 3, GridMode::FreeExponent, RoundMode::RoundHalfUp};
  for (int i = 0; i < 200; ++i) {
    const Rational q = gen.in_range(Rational(1, 500), Rational(4000), 313);
    if (q == 0) continue;
    const std::string outcome = coarse_grain(q, 3, dec);
    CHECK(coarse_grain(outcome_value(outcome, 10), 3, dec) == outcome);
  }
}

TEST_CASE("embedding preserves exact values and pads with zeros") {
  const RnNumber embedded = embed("11.011", {2, 5, GridMode::SymmetricRegion,
                                             RoundMode::TruncateTowardZero});
  CHECK(value_of(embedded) == Rational(27, 8));
  CHECK(embedded.mantissa_digits() == "0001101100");
  CHECK(embedded.exponent() == 0);

  const RnNumber two_fig = embed("11.", kBin44);
  CHECK(value_of(two_fig) == 3);

  CHECK(embed("0.0", kBin44).is_zero());
  CHECK(value_of(embed("-1.1", kBin44)) == Rational(-3, 2));
}

TEST_CASE("embedding rejects outcomes finer than the target") {
  const GridParams narrow{2, 2, GridMode::SymmetricRegion,
                          RoundMode::TruncateTowardZero};
  CHECK_THROWS_AS(embed("11.011", narrow), DomainError);
  try {
    embed("11.011", narrow);
  } catch (const DomainError& err) {
    CHECK(err.code() == Errc::PrecisionExceedsTarget);
  }
  const GridParams free_grid{2, 8, GridMode::FreeExponent,
                             RoundMode::TruncateTowardZero};
  CHECK_THROWS_AS(embed("11.011", free_grid), DomainError);
}

TEST_CASE("embedding round-trips random coarse-grained outcomes") {
  RationalGen gen(5150);
  const GridParams dec4{10, 4, GridMode::SymmetricRegion,
                        RoundMode::TruncateTowardZero};
  const GridParams grain_params{10, 2, GridMode::FreeExponent,
                                RoundMode::RoundHalfUp};
  for (int i = 0; i < 200; ++i) {
    const Rational q = gen.in_range(Rational(1, 100), Rational(99), 997);
    const std::string outcome = coarse_grain(q, 2, grain_params);
    if (outcome_figures(outcome) > dec4.half_digits) continue;
    CHECK(value_of(embed(outcome, dec4)) == outcome_value(outcome, 10));
  }
}

TEST_CASE("instrument readings tile the positive axis") {
  const int digits = 4;
  // Threshold of instrument 1 is exactly 1; reading is the zero-padded
  // truncated quotient.
  const auto at_threshold = apparatus_reading(1, 1, digits, 2);
  CHECK(at_threshold.kind == ApparatusReading::Kind::Value);
  CHECK(at_threshold.digits == "0001");

  CHECK(apparatus_reading(Rational(15, 16), 1, digits, 2).kind ==
        ApparatusReading::Kind::NonDetect);
  CHECK(apparatus_reading(16, 1, digits, 2).kind ==
        ApparatusReading::Kind::OffScale);
  // Just off scale for instrument j is threshold detection for j+1.
  const auto next_up = apparatus_reading(16, 2, digits, 2);
  CHECK(next_up.kind == ApparatusReading::Kind::Value);
  CHECK(next_up.digits == "0001");

  CHECK_THROWS_AS(apparatus_reading(-1, 1, digits, 2), DomainError);
}

TEST_CASE("exactly one instrument detects any positive quantity") {
  RationalGen gen(31337);
  for (int i = 0; i < 200; ++i) {
    const Rational q = gen.in_range(Rational(1, 4096), Rational(1 << 20), 777);
    if (q == 0) continue;
    const auto scan = hierarchy_scan(q, -4, 7, 4, 2);
    int detecting = 0;
    for (const auto& reading : scan) {
      detecting += reading.kind == ApparatusReading::Kind::Value ? 1 : 0;
    }
    CHECK(detecting == 1);
  }
}

TEST_CASE("a zero quantity is below every threshold") {
  for (const auto& reading : hierarchy_scan(0, -3, 3, 4, 2)) {
    CHECK(reading.kind == ApparatusReading::Kind::NonDetect);
  }
}

TEST_CASE("scan readings are consistent and ordered nondetect-value-offscale") {
  const Rational q = 96;
  const auto scan = hierarchy_scan(q, -2, 5, 4, 2);
  for (const auto& reading : scan) {
    const auto solo =
        apparatus_reading(q, reading.apparatus_index, 4, 2);
    CHECK(solo.kind == reading.kind);
    CHECK(solo.digits == reading.digits);
  }
  // 96 = 0110 0000 in binary: instrument 2 (unit 16) reads 0110.
  CHECK(scan[4].apparatus_index == 2);
  CHECK(scan[4].kind == ApparatusReading::Kind::Value);
  CHECK(scan[4].digits == "0110");
  CHECK(scan[3].kind == ApparatusReading::Kind::OffScale);
  CHECK(scan[5].kind == ApparatusReading::Kind::NonDetect);
}
