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

#include <cstdint>
#include <optional>
#include <vector>

#include "rnarith/number.hpp"

namespace rnarith {

/// A point of d-dimensional grid space (or space-time: a time axis is just
/// one more coordinate). All coordinates share one arithmetic context.
struct LatticePoint {
  GridParams params;
  std::vector<RnNumber> coords;

  LatticePoint(GridParams params, std::vector<RnNumber> coords);
  std::size_t dims() const { return coords.size(); }
};

/// Which coordinates are zero. A point with a zero coordinate is an
/// accumulation point of the lattice and has no nearest neighbor in that
/// dimension; the origin has none in any dimension.
struct SingularityClass {
  std::vector<std::size_t> zero_dims;  // ascending
  std::size_t degree() const { return zero_dims.size(); }
};

SingularityClass classify(const LatticePoint& p);

struct NeighborPair {
  LatticePoint lower;
  LatticePoint upper;
};

/// Value-order nearest neighbors along one dimension, or nullopt when the
/// coordinate is zero (points crowd toward every axis, so no nearest element
/// exists on either side of a zero coordinate).
std::optional<NeighborPair> neighbors(const LatticePoint& p, std::size_t dim);

/// Scale transformation: e -> e + j on every nonzero coordinate, multiplying
/// each nonzero coordinate value by exactly k^(2n*j). Zero coordinates (and
/// hence the origin) are fixed.
LatticePoint scale(const LatticePoint& p, const BigInt& j);

/// Per-dimension exponent translation; changes shape when entries differ.
/// Throws ArityMismatch unless j.size() == dims.
LatticePoint scale_aniso(const LatticePoint& p, const std::vector<BigInt>& j);

struct Window {
  BigInt e_lo;
  BigInt e_hi;
  bool positive = true;
  bool negative = true;
  bool include_zero = false;  // singular coordinates excluded by default
};

/// Axis values allowed by a window, ascending.
std::vector<RnNumber> axis_values(const GridParams& params, const Window& window);

/// Every point whose coordinates are all drawn from the window's axis set,
/// in lexicographic order (dimension 0 outermost, each axis ascending).
/// Throws WindowTooLarge when the point count exceeds `cap`.
std::vector<LatticePoint> window_enum(const GridParams& params, std::size_t dims,
                                      const Window& window, std::uint64_t cap);

}  // namespace rnarith
