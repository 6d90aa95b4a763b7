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

#include <stdexcept>
#include <string>

namespace rnarith {

/// Stable error codes for every failure mode of the library. The CLI maps
/// these to machine-readable error records and exit code 3.
enum class Errc {
  WrongMantissaLength,
  DigitOutOfRange,
  NonCanonicalZero,
  NotNormalized,
  ParamsMismatch,
  UndefinedAtOrigin,
  ArityMismatch,
  WindowTooLarge,
  MalformedString,
  PrecisionExceedsTarget,
  NegativeQuantity,
  DivisionByZero,
  ModeMismatch,
  ExponentOverflow,
  TextBaseUnsupported,
  UsageError,
};

const char* errc_name(Errc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace rnarith
