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

#include "rnarith/grid.hpp"

namespace rnarith::internal {

// Mantissa range of nonzero numbers: [lo, hi].
// SymmetricRegion: [1, k^{2n}-1]; FreeExponent: [k^{2n-1}, k^{2n}-1].
BigInt mantissa_lo(const GridParams& params);
BigInt mantissa_hi(const GridParams& params);

// Power of k applied to the integer mantissa:
// SymmetricRegion 2n*e - n, FreeExponent e - n.
BigInt scale_exponent(const GridParams& params, const BigInt& e);

// Applies a round mode to a positive scaled mantissa.
BigInt round_mantissa(const Rational& raw, RoundMode mode);

}  // namespace rnarith::internal
