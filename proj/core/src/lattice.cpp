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

#include "rnarith/lattice.hpp"

#include "rnarith/ordering.hpp"

namespace rnarith {

LatticePoint::LatticePoint(GridParams params_in, std::vector<RnNumber> coords_in)
    : params(std::move(params_in)), coords(std::move(coords_in)) {
  params.validate();
  if (coords.empty()) {
    throw DomainError(Errc::ArityMismatch, "a lattice point needs d >= 1");
  }
  for (const RnNumber& c : coords) {
    require_same_params(params, c.params());
  }
}

SingularityClass classify(const LatticePoint& p) {
  SingularityClass out;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (p.coords[i].is_zero()) out.zero_dims.push_back(i);
  }
  return out;
}

std::optional<NeighborPair> neighbors(const LatticePoint& p, std::size_t dim) {
  if (dim >= p.dims()) {
    throw DomainError(Errc::ArityMismatch, "dimension index out of range");
  }
  const RnNumber& coord = p.coords[dim];
  if (coord.is_zero()) {
    return std::nullopt;  // accumulation point: no nearest neighbor
  }
  LatticePoint lower = p;
  LatticePoint upper = p;
  lower.coords[dim] = pred(coord).next;
  upper.coords[dim] = succ(coord).next;
  return NeighborPair{std::move(lower), std::move(upper)};
}

LatticePoint scale(const LatticePoint& p, const BigInt& j) {
  LatticePoint out = p;
  for (RnNumber& c : out.coords) {
    if (!c.is_zero()) {
      c = RnNumber::from_parts(c.params(), c.sign(), c.mantissa_int(),
                               c.exponent() + j);
    }
  }
  return out;
}

LatticePoint scale_aniso(const LatticePoint& p, const std::vector<BigInt>& j) {
  if (j.size() != p.dims()) {
    throw DomainError(Errc::ArityMismatch,
                      "need one exponent shift per dimension");
  }
  LatticePoint out = p;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    RnNumber& c = out.coords[i];
    if (!c.is_zero()) {
      c = RnNumber::from_parts(c.params(), c.sign(), c.mantissa_int(),
                               c.exponent() + j[i]);
    }
  }
  return out;
}

std::vector<RnNumber> axis_values(const GridParams& params, const Window& window) {
  params.validate();
  if (window.e_lo > window.e_hi) {
    throw DomainError(Errc::UsageError, "window has e_lo > e_hi");
  }
  std::vector<RnNumber> axis;
  if (window.negative) {
    for (BigInt e = window.e_hi; e >= window.e_lo; --e) {
      for (RnNumber& x : enumerate_region(params, e, -1)) {
        axis.push_back(std::move(x));
      }
    }
  }
  if (window.include_zero) {
    axis.push_back(RnNumber::zero(params));
  }
  if (window.positive) {
    for (BigInt e = window.e_lo; e <= window.e_hi; ++e) {
      for (RnNumber& x : enumerate_region(params, e, 1)) {
        axis.push_back(std::move(x));
      }
    }
  }
  return axis;
}

std::vector<LatticePoint> window_enum(const GridParams& params, std::size_t dims,
                                      const Window& window, std::uint64_t cap) {
  if (dims < 1) {
    throw DomainError(Errc::ArityMismatch, "need d >= 1");
  }
  const std::vector<RnNumber> axis = axis_values(params, window);

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    if (axis.size() != 0 && total > cap / axis.size()) {
      throw DomainError(Errc::WindowTooLarge,
                        "window would enumerate more than " +
                            std::to_string(cap) + " points");
    }
    total *= axis.size();
  }

  std::vector<LatticePoint> out;
  out.reserve(total);
  std::vector<std::size_t> idx(dims, 0);
  if (axis.empty()) return out;
  while (true) {
    std::vector<RnNumber> coords;
    coords.reserve(dims);
    for (std::size_t i = 0; i < dims; ++i) coords.push_back(axis[idx[i]]);
    out.emplace_back(params, std::move(coords));
    // odometer increment, last dimension fastest
    std::size_t d = dims;
    while (d > 0) {
      --d;
      if (++idx[d] < axis.size()) break;
      idx[d] = 0;
      if (d == 0) return out;
    }
  }
}

}  // namespace rnarith
