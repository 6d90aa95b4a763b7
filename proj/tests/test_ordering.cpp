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
#include "rnarith/ordering.hpp"

using namespace rnarith;
using rnarith::testing::all_numbers;
using rnarith::testing::sorted_by_value;

namespace {

const GridParams kBin22{2, 2, GridMode::SymmetricRegion,
                        RoundMode::TruncateTowardZero};
const GridParams kBin21{2, 1, GridMode::SymmetricRegion,
                        RoundMode::TruncateTowardZero};

}  // namespace

TEST_CASE("stepping up crosses regions at the top mantissa") {
  const RnNumber top = parse_literal("11.11e0", kBin22);
  const StepResult step = succ(top);
  CHECK(to_literal(step.next) == "00.01e1");
  CHECK(step.jumped);

  const StepResult within = succ(parse_literal("00.01e0", kBin22));
  CHECK(to_literal(within.next) == "00.10e0");
  CHECK_FALSE(within.jumped);
}

TEST_CASE("stepping down inverts the jump") {
  const StepResult step = pred(parse_literal("00.01e1", kBin22));
  CHECK(to_literal(step.next) == "11.11e0");
  CHECK(step.jumped);
}

TEST_CASE("succ chains every window in exactly ascending value order") {
  for (const GridParams& params : {kBin21, kBin22}) {
    const auto sorted = sorted_by_value(all_numbers(params, -3, 3, false));
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      // Skip the sign change: the positive side has no predecessor chain
      // into the negatives (zero is unreachable in between).
      if (sorted[i].sign() < 0 && sorted[i + 1].sign() > 0) continue;
      CHECK(succ(sorted[i]).next == sorted[i + 1]);
      CHECK(pred(sorted[i + 1]).next == sorted[i]);
    }
  }
}

TEST_CASE("succ and pred are mutually inverse") {
  for (const RnNumber& x : all_numbers(kBin22, -2, 2, false)) {
    CHECK(pred(succ(x).next).next == x);
    CHECK(succ(pred(x).next).next == x);
  }
}

TEST_CASE("neither step function is defined at the origin") {
  const RnNumber zero = RnNumber::zero(kBin22);
  CHECK_THROWS_AS(succ(zero), DomainError);
  CHECK_THROWS_AS(pred(zero), DomainError);
  CHECK_THROWS_AS(spacing(zero), DomainError);
  CHECK_THROWS_AS(iterate(zero, 3), DomainError);
}

TEST_CASE("spacing is the region step and jumps by k^2n across boundaries") {
  const RnNumber x = parse_literal("00.10e0", kBin22);
  CHECK(spacing(x) == Rational(1, 4));

  // Ratio of spacings on the two sides of a region boundary.
  const RnNumber below = parse_literal("11.11e0", kBin22);
  const RnNumber above = succ(below).next;
  CHECK(spacing(above) / spacing(below) == 16);

  for (const RnNumber& p : all_numbers(kBin21, -2, 2, false)) {
    if (p.sign() < 0) continue;
    CHECK(spacing(p) == value_of(succ(p).next) - value_of(p));
  }
}

TEST_CASE("regions hold k^2n - 1 points at constant spacing per sign") {
  for (int sign : {1, -1}) {
    const auto region = enumerate_region(kBin22, 1, sign);
    CHECK(region.size() == 15);
    for (std::size_t i = 0; i + 1 < region.size(); ++i) {
      CHECK(value_of(region[i]) < value_of(region[i + 1]));
      CHECK(value_of(region[i + 1]) - value_of(region[i]) == 4);
    }
  }
  // 3 points for the smallest word.
  CHECK(enumerate_region(kBin21, 0, 1).size() == 3);
}

TEST_CASE("regions stitch: the first point above continues the chain") {
  const auto low = enumerate_region(kBin22, 0, 1);
  const auto high = enumerate_region(kBin22, 1, 1);
  CHECK(succ(low.back()).next == high.front());
}

TEST_CASE("concatenated regions equal the value-sorted enumeration") {
  std::vector<RnNumber> chained;
  for (long e = 2; e >= -2; --e) {
    for (const RnNumber& x : enumerate_region(kBin21, e, -1)) {
      chained.push_back(x);
    }
  }
  for (long e = -2; e <= 2; ++e) {
    for (const RnNumber& x : enumerate_region(kBin21, e, 1)) {
      chained.push_back(x);
    }
  }
  const auto sorted = sorted_by_value(all_numbers(kBin21, -2, 2, false));
  CHECK(chained == sorted);
}

TEST_CASE("iterate is the n-fold step and undoes itself") {
  const RnNumber x = parse_literal("00.10e0", kBin22);
  CHECK(iterate(x, 0) == x);
  CHECK(iterate(iterate(x, 23), -23) == x);
  CHECK(iterate(x, 1) == succ(x).next);
  CHECK(iterate(x, -1) == pred(x).next);

  RnNumber walked = x;
  for (int i = 0; i < 40; ++i) walked = succ(walked).next;
  CHECK(iterate(x, 40) == walked);

  const RnNumber neg = negate(x);
  RnNumber neg_walked = neg;
  for (int i = 0; i < 40; ++i) neg_walked = succ(neg_walked).next;
  CHECK(iterate(neg, 40) == neg_walked);
}

TEST_CASE("descending chains approach zero but never reach it") {
  RnNumber x = parse_literal("00.01e0", kBin22);
  x = iterate(x, -1000);
  CHECK_FALSE(x.is_zero());
  CHECK(x.sign() > 0);
  CHECK(value_of(x) > 0);
  // 1000 steps of 15 per region put it 67 regions down.
  CHECK(x.exponent() == -67);

  // The mirrored walk on the negative side also never crosses.
  RnNumber y = iterate(negate(parse_literal("00.01e0", kBin22)), 1000);
  CHECK_FALSE(y.is_zero());
  CHECK(y.sign() < 0);
}

TEST_CASE("a full descending sweep takes one step per point") {
  // From the top of e=2 down to the bottom of e=-2: 5 regions of 15 points.
  const RnNumber top = parse_literal("11.11e2", kBin22);
  const RnNumber bottom = parse_literal("00.01e-2", kBin22);
  RnNumber x = top;
  int steps = 0;
  while (!(x == bottom)) {
    x = pred(x).next;
    ++steps;
  }
  CHECK(steps == 15 * 5 - 1);
  CHECK(iterate(top, -(15 * 5 - 1)) == bottom);
}
