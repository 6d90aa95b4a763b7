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

#include "rnarith/measurement.hpp"

#include "rnarith/internal/grid_math.hpp"

namespace rnarith {

namespace {

struct SplitOutcome {
  int sign = 1;
  std::string integer_part;  // digits left of the point
  std::string fraction_part; // digits right of the point
};

SplitOutcome split_outcome(std::string_view outcome, int base) {
  SplitOutcome split;
  if (!outcome.empty() && (outcome.front() == '+' || outcome.front() == '-')) {
    split.sign = outcome.front() == '-' ? -1 : 1;
    outcome.remove_prefix(1);
  }
  bool seen_point = false;
  for (char c : outcome) {
    if (c == '.') {
      if (seen_point) {
        throw DomainError(Errc::MalformedString, "outcome has two points");
      }
      seen_point = true;
      continue;
    }
    digit_value(c, base);  // validates
    (seen_point ? split.fraction_part : split.integer_part).push_back(c);
  }
  if (split.integer_part.empty() && split.fraction_part.empty()) {
    throw DomainError(Errc::MalformedString, "outcome has no digits");
  }
  return split;
}

}  // namespace

Rational outcome_value(std::string_view outcome, int base) {
  const SplitOutcome split = split_outcome(outcome, base);
  const BigInt all =
      digits_to_int(split.integer_part + split.fraction_part, base);
  const Rational magnitude =
      Rational(all) /
      pow_big(static_cast<unsigned>(base), BigInt(split.fraction_part.size()));
  return split.sign < 0 ? -magnitude : magnitude;
}

int outcome_figures(std::string_view outcome) {
  int count = 0;
  for (char c : outcome) {
    if (c != '.' && c != '+' && c != '-') ++count;
  }
  return count;
}

Interval bin_of(std::string_view outcome, int base, const CoarseGrainRule& rule) {
  if (rule.delta_lower < 0 || rule.delta_upper < 0) {
    throw DomainError(Errc::UsageError, "bin deltas must be >= 0");
  }
  const Rational center = outcome_value(outcome, base);
  Rational lower = rule.delta_lower;
  Rational upper = rule.delta_upper;
  if (auto it = rule.per_outcome.find(std::string(outcome));
      it != rule.per_outcome.end()) {
    lower = it->second.first;
    upper = it->second.second;
  }
  return Interval{center - lower, center + upper};
}

std::string coarse_grain(const Rational& q, int figures,
                         const GridParams& params) {
  params.validate();
  if (figures < 1) {
    throw DomainError(Errc::UsageError, "figures must be >= 1");
  }
  const int base = params.base;
  if (q == 0) {
    std::string zero = "0.";
    zero.append(static_cast<std::size_t>(figures - 1), '0');
    return zero;
  }
  const Rational magnitude = q < 0 ? -q : q;

  // Round |q| to `figures` significant digits: significand in
  // [k^{figures-1}, k^figures), exact scaling, one projection.
  BigInt f = floor_log(static_cast<unsigned>(base), magnitude);
  Rational raw =
      magnitude * pow_signed(static_cast<unsigned>(base), BigInt(figures - 1) - f);
  BigInt significand = internal::round_mantissa(raw, params.round);
  const BigInt top = pow_big(static_cast<unsigned>(base), BigInt(figures));
  if (significand >= top) {
    significand /= base;  // carry: k^figures has the single digit 1 back on top
    ++f;
  }
  const std::string digits =
      int_to_digits(significand, base, figures);

  // Point position: value = significand * k^(f+1-figures).
  const BigInt left = f + 1;  // digit positions left of the point
  std::string out;
  if (q < 0) out = "-";
  if (left >= figures) {
    out += digits;
    out.append((left - figures).convert_to<std::size_t>(), '0');
    out += '.';
  } else if (left >= 1) {
    const auto cut = left.convert_to<std::size_t>();
    out += digits.substr(0, cut);
    out += '.';
    out += digits.substr(cut);
  } else {
    out += "0.";
    out.append((-left).convert_to<std::size_t>(), '0');
    out += digits;
  }
  return out;
}

RnNumber embed(std::string_view outcome, const GridParams& params) {
  params.validate();
  if (params.grid != GridMode::SymmetricRegion) {
    throw DomainError(Errc::ModeMismatch,
                      "embed targets the symmetric-region grid");
  }
  const SplitOutcome split = split_outcome(outcome, params.base);
  const int figures =
      static_cast<int>(split.integer_part.size() + split.fraction_part.size());
  const int n = params.half_digits;
  if (figures > n) {
    throw DomainError(Errc::PrecisionExceedsTarget,
                      std::to_string(figures) + "-figure outcome is outside a " +
                          std::to_string(n) + "-figure context");
  }

  // Zero-pad around the k-al point: the outcome's integer digits become the
  // low end of the s-half, its fraction digits the high end of the t-half.
  std::string mantissa(static_cast<std::size_t>(params.digits()), '0');
  const std::size_t s_offset = static_cast<std::size_t>(n) - split.integer_part.size();
  for (std::size_t i = 0; i < split.integer_part.size(); ++i) {
    mantissa[s_offset + i] = split.integer_part[i];
  }
  for (std::size_t i = 0; i < split.fraction_part.size(); ++i) {
    mantissa[static_cast<std::size_t>(n) + i] = split.fraction_part[i];
  }

  const BigInt m = digits_to_int(mantissa, params.base);
  if (m == 0) return RnNumber::zero(params);
  return RnNumber::from_parts(params, split.sign, m, 0);
}

ApparatusReading apparatus_reading(const Rational& q, const BigInt& j, int digits,
                                   int base) {
  if (q < 0) {
    throw DomainError(Errc::NegativeQuantity,
                      "instruments measure nonnegative quantities");
  }
  if (digits < 1 || base < 2) {
    throw DomainError(Errc::UsageError, "need digits >= 1 and base >= 2");
  }
  const Rational unit =
      pow_signed(static_cast<unsigned>(base), BigInt(digits) * (j - 1));
  const Rational full_scale =
      unit * pow_big(static_cast<unsigned>(base), BigInt(digits));
  if (q < unit) {
    return ApparatusReading{ApparatusReading::Kind::NonDetect, "", j};
  }
  if (q >= full_scale) {
    return ApparatusReading{ApparatusReading::Kind::OffScale, "", j};
  }
  const BigInt reading = floor_rat(q / unit);
  return ApparatusReading{ApparatusReading::Kind::Value,
                          int_to_digits(reading, base, digits), j};
}

std::vector<ApparatusReading> hierarchy_scan(const Rational& q, const BigInt& j_lo,
                                             const BigInt& j_hi, int digits,
                                             int base) {
  if (j_lo > j_hi) {
    throw DomainError(Errc::UsageError, "scan range has j_lo > j_hi");
  }
  std::vector<ApparatusReading> out;
  for (BigInt j = j_lo; j <= j_hi; ++j) {
    out.push_back(apparatus_reading(q, j, digits, base));
  }
  return out;
}

}  // namespace rnarith
