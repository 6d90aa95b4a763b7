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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rnarith/arithmetic.hpp"

namespace rnarith {

/// Basis label: an abstract name or a 1-D position (a grid point).
using Label = std::variant<std::string, RnNumber>;

bool label_equal(const Label& a, const Label& b);

/// Strict weak order over labels (names first, then positions by sign,
/// exponent, mantissa) so labels can key ordered containers.
struct LabelLess {
  bool operator()(const Label& a, const Label& b) const;
};

/// A finite state: distinct basis labels with one complex amplitude each.
/// The state space is an inner-product space over the complex grid numbers;
/// it is not norm complete, and nothing here assumes completeness.
class QState {
 public:
  QState(GridParams params, std::vector<Label> basis, std::vector<CnNumber> amps);

  const GridParams& params() const { return params_; }
  const std::vector<Label>& basis() const { return basis_; }
  const std::vector<CnNumber>& amps() const { return amps_; }

  std::optional<CnNumber> amplitude(const Label& label) const;

 private:
  GridParams params_;
  std::vector<Label> basis_;
  std::vector<CnNumber> amps_;
};

/// Scalar product (psi, phi): sum over basis labels of
/// cmul(conj(psi_amp), phi_amp), accumulated strictly left to right in psi's
/// basis order. The order is part of the contract — addition on the grid is
/// not associative, so reordering is a different operation, not an
/// optimization. Labels missing from either state contribute exact zeros and
/// do not perturb the chain.
CnNumber inner(const QState& psi, const QState& phi);

/// (one, zero) iff the labels are identical, else (zero, zero).
CnNumber delta_2n(const Label& a, const Label& b, const GridParams& params);

struct NormReport {
  /// inner(psi, psi).re — the fully rounded accumulation chain.
  RnNumber norm2;
  /// Exact (unrounded) sum of the grid squared moduli value_of(|c|^2_n);
  /// per-term rounding can push this off 1 even when norm2 rounds back to 1.
  Rational exact_norm2;
  /// exact_norm2 - 1; zero iff exactly normalized.
  Rational residual;
};

NormReport norm_check(const QState& psi);

struct ExpansionTerm {
  RnNumber position;
  CnNumber coefficient;
};

/// Position-basis expansion over a finite exponent window: emits <x|psi> for
/// every nonsingular position x (both signs, mantissa ascending, exponents
/// ascending; the zero position is never emitted). Positions outside psi's
/// support carry zero coefficients.
std::vector<ExpansionTerm> position_expand(const QState& psi, const BigInt& e_lo,
                                           const BigInt& e_hi);

/// JSON state files:
/// {"params":{"k":..,"n":..,"grid":"sym|free","round":"trunc|half-up|up"},
///  "basis":[{"label":"a"}|{"x":"<literal>"},...],
///  "amps":[{"re":"<literal>","im":"<literal>"},...]}
QState parse_state_json(std::string_view text);
std::string state_to_json(const QState& state);

}  // namespace rnarith
