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

#include "rnarith/grid.hpp"

#include <charconv>

namespace rnarith {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::WrongMantissaLength: return "WrongMantissaLength";
    case Errc::DigitOutOfRange: return "DigitOutOfRange";
    case Errc::NonCanonicalZero: return "NonCanonicalZero";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::ParamsMismatch: return "ParamsMismatch";
    case Errc::UndefinedAtOrigin: return "UndefinedAtOrigin";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::WindowTooLarge: return "WindowTooLarge";
    case Errc::MalformedString: return "MalformedString";
    case Errc::PrecisionExceedsTarget: return "PrecisionExceedsTarget";
    case Errc::NegativeQuantity: return "NegativeQuantity";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::TextBaseUnsupported: return "TextBaseUnsupported";
    case Errc::UsageError: return "UsageError";
  }
  return "UnknownError";
}

void GridParams::validate() const {
  if (base < 2) {
    throw DomainError(Errc::UsageError, "base k must be >= 2");
  }
  if (half_digits < 1) {
    throw DomainError(Errc::UsageError, "half-length n must be >= 1");
  }
}

void require_same_params(const GridParams& a, const GridParams& b) {
  if (!(a == b)) {
    throw DomainError(Errc::ParamsMismatch,
                      "operands belong to different arithmetic contexts: " +
                          params_str(a) + " vs " + params_str(b));
  }
}

std::string params_str(const GridParams& params) {
  std::string out = "k=" + std::to_string(params.base) +
                    ",n=" + std::to_string(params.half_digits) + ",grid=";
  out += params.grid == GridMode::SymmetricRegion ? "sym" : "free";
  out += ",round=";
  switch (params.round) {
    case RoundMode::TruncateTowardZero: out += "trunc"; break;
    case RoundMode::RoundHalfUp: out += "half-up"; break;
    case RoundMode::RoundUpAway: out += "up"; break;
  }
  return out;
}

GridParams parse_params(std::string_view text) {
  GridParams params;
  auto fail = [&](const std::string& why) {
    throw DomainError(Errc::MalformedString,
                      "bad params string '" + std::string(text) + "': " + why);
  };
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view field = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) fail("expected key=value");
    const std::string_view key = field.substr(0, eq);
    const std::string_view value = field.substr(eq + 1);
    if (key == "k" || key == "n") {
      int parsed = 0;
      auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        fail("integer expected for " + std::string(key));
      }
      (key == "k" ? params.base : params.half_digits) = parsed;
    } else if (key == "grid") {
      if (value == "sym") params.grid = GridMode::SymmetricRegion;
      else if (value == "free") params.grid = GridMode::FreeExponent;
      else fail("grid must be sym or free");
    } else if (key == "round") {
      if (value == "trunc") params.round = RoundMode::TruncateTowardZero;
      else if (value == "half-up") params.round = RoundMode::RoundHalfUp;
      else if (value == "up") params.round = RoundMode::RoundUpAway;
      else fail("round must be trunc, half-up or up");
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  params.validate();
  return params;
}

int digit_value(char c, int base) {
  if (base > 36) {
    throw DomainError(Errc::TextBaseUnsupported,
                      "text forms support bases up to 36");
  }
  int v = -1;
  if (c >= '0' && c <= '9') v = c - '0';
  else if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
  else if (c >= 'A' && c <= 'Z') v = c - 'A' + 10;
  if (v < 0 || v >= base) {
    throw DomainError(Errc::DigitOutOfRange,
                      std::string("digit '") + c + "' out of range for base " +
                          std::to_string(base));
  }
  return v;
}

char digit_char(int value) {
  return value < 10 ? static_cast<char>('0' + value)
                    : static_cast<char>('a' + value - 10);
}

BigInt digits_to_int(std::string_view digits, int base) {
  BigInt acc = 0;
  for (char c : digits) {
    acc = acc * base + digit_value(c, base);
  }
  return acc;
}

std::string int_to_digits(const BigInt& value, int base, int width) {
  if (base > 36) {
    throw DomainError(Errc::TextBaseUnsupported,
                      "text forms support bases up to 36");
  }
  std::string out(static_cast<std::size_t>(width), '0');
  BigInt rest = value;
  for (int i = width - 1; i >= 0 && rest != 0; --i) {
    out[static_cast<std::size_t>(i)] =
        digit_char(static_cast<int>(rest % base));
    rest /= base;
  }
  if (rest != 0) {
    throw DomainError(Errc::DigitOutOfRange,
                      "value does not fit in " + std::to_string(width) +
                          " base-" + std::to_string(base) + " digits");
  }
  return out;
}

}  // namespace rnarith
