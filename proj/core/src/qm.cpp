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

#include "rnarith/qm.hpp"

#include <nlohmann/json.hpp>

#include "rnarith/internal/grid_math.hpp"

namespace rnarith {

bool label_equal(const Label& a, const Label& b) {
  return a == b;
}

bool LabelLess::operator()(const Label& a, const Label& b) const {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<std::string>(a)) {
    return std::get<std::string>(a) < std::get<std::string>(b);
  }
  const RnNumber& x = std::get<RnNumber>(a);
  const RnNumber& y = std::get<RnNumber>(b);
  auto tuple_of = [](const RnNumber& v) {
    return std::make_tuple(v.is_zero() ? 0 : v.sign(), v.exponent(),
                           v.mantissa_int());
  };
  return tuple_of(x) < tuple_of(y);
}

QState::QState(GridParams params, std::vector<Label> basis,
               std::vector<CnNumber> amps)
    : params_(std::move(params)), basis_(std::move(basis)), amps_(std::move(amps)) {
  params_.validate();
  if (basis_.size() != amps_.size()) {
    throw DomainError(Errc::ArityMismatch,
                      "basis and amplitude lists differ in length");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    require_same_params(params_, amps_[i].params());
    if (const RnNumber* x = std::get_if<RnNumber>(&basis_[i])) {
      require_same_params(params_, x->params());
      if (x->is_zero()) {
        throw DomainError(Errc::UsageError,
                          "no amplitude may sit on the singular zero position");
      }
    }
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (label_equal(basis_[i], basis_[j])) {
        throw DomainError(Errc::UsageError, "basis labels must be distinct");
      }
    }
  }
}

std::optional<CnNumber> QState::amplitude(const Label& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (label_equal(basis_[i], label)) return amps_[i];
  }
  return std::nullopt;
}

CnNumber inner(const QState& psi, const QState& phi) {
  require_same_params(psi.params(), phi.params());
  CnNumber acc = CnNumber::zero(psi.params());
  for (std::size_t i = 0; i < psi.basis().size(); ++i) {
    const std::optional<CnNumber> other = phi.amplitude(psi.basis()[i]);
    if (!other) continue;  // exact zero term, chain unchanged
    acc = cadd(acc, cmul(conj(psi.amps()[i]), *other));
  }
  return acc;
}

CnNumber delta_2n(const Label& a, const Label& b, const GridParams& params) {
  return label_equal(a, b) ? CnNumber::one(params) : CnNumber::zero(params);
}

NormReport norm_check(const QState& psi) {
  RnNumber norm2 = inner(psi, psi).re();
  Rational exact_norm2 = 0;
  for (const CnNumber& c : psi.amps()) {
    exact_norm2 += value_of(cmul(c, conj(c)).re());
  }
  Rational residual = exact_norm2 - 1;
  return NormReport{std::move(norm2), std::move(exact_norm2), std::move(residual)};
}

std::vector<ExpansionTerm> position_expand(const QState& psi, const BigInt& e_lo,
                                           const BigInt& e_hi) {
  if (e_lo > e_hi) {
    throw DomainError(Errc::UsageError, "expansion window has e_lo > e_hi");
  }
  const GridParams& params = psi.params();
  const BigInt lo = internal::mantissa_lo(params);
  const BigInt hi = internal::mantissa_hi(params);
  std::vector<ExpansionTerm> out;
  for (BigInt e = e_lo; e <= e_hi; ++e) {
    for (BigInt m = lo; m <= hi; ++m) {
      for (int sign : {1, -1}) {
        RnNumber x = RnNumber::from_parts(params, sign, m, e);
        std::optional<CnNumber> amp = psi.amplitude(Label(x));
        out.push_back(ExpansionTerm{
            std::move(x), amp ? *amp : CnNumber::zero(params)});
      }
    }
  }
  return out;
}

namespace {

RoundMode parse_round_name(const std::string& name) {
  if (name == "trunc") return RoundMode::TruncateTowardZero;
  if (name == "half-up") return RoundMode::RoundHalfUp;
  if (name == "up") return RoundMode::RoundUpAway;
  throw DomainError(Errc::MalformedString, "unknown round mode '" + name + "'");
}

}  // namespace

QState parse_state_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& err) {
    throw DomainError(Errc::MalformedString,
                      std::string("bad state JSON: ") + err.what());
  }
  try {
    const auto& p = doc.at("params");
    GridParams params;
    params.base = p.at("k").get<int>();
    params.half_digits = p.at("n").get<int>();
    if (p.contains("grid")) {
      const std::string grid = p.at("grid").get<std::string>();
      if (grid == "sym") params.grid = GridMode::SymmetricRegion;
      else if (grid == "free") params.grid = GridMode::FreeExponent;
      else throw DomainError(Errc::MalformedString, "grid must be sym or free");
    }
    if (p.contains("round")) {
      params.round = parse_round_name(p.at("round").get<std::string>());
    }
    params.validate();

    std::vector<Label> basis;
    for (const auto& entry : doc.at("basis")) {
      if (entry.contains("label")) {
        basis.emplace_back(entry.at("label").get<std::string>());
      } else if (entry.contains("x")) {
        basis.emplace_back(parse_literal(entry.at("x").get<std::string>(), params));
      } else {
        throw DomainError(Errc::MalformedString,
                          "basis entry needs 'label' or 'x'");
      }
    }
    std::vector<CnNumber> amps;
    for (const auto& entry : doc.at("amps")) {
      RnNumber re = parse_literal(entry.at("re").get<std::string>(), params);
      RnNumber im = entry.contains("im")
                        ? parse_literal(entry.at("im").get<std::string>(), params)
                        : RnNumber::zero(params);
      amps.emplace_back(std::move(re), std::move(im));
    }
    return QState(params, std::move(basis), std::move(amps));
  } catch (const nlohmann::json::exception& err) {
    throw DomainError(Errc::MalformedString,
                      std::string("bad state JSON: ") + err.what());
  }
}

std::string state_to_json(const QState& state) {
  nlohmann::ordered_json doc;
  const GridParams& params = state.params();
  doc["params"] = {
      {"k", params.base},
      {"n", params.half_digits},
      {"grid", params.grid == GridMode::SymmetricRegion ? "sym" : "free"},
      {"round", params.round == RoundMode::TruncateTowardZero ? "trunc"
                : params.round == RoundMode::RoundHalfUp      ? "half-up"
                                                              : "up"}};
  doc["basis"] = nlohmann::ordered_json::array();
  for (const Label& label : state.basis()) {
    if (const std::string* name = std::get_if<std::string>(&label)) {
      doc["basis"].push_back({{"label", *name}});
    } else {
      doc["basis"].push_back({{"x", to_literal(std::get<RnNumber>(label))}});
    }
  }
  doc["amps"] = nlohmann::ordered_json::array();
  for (const CnNumber& amp : state.amps()) {
    doc["amps"].push_back(
        {{"re", to_literal(amp.re())}, {"im", to_literal(amp.im())}});
  }
  return doc.dump();
}

}  // namespace rnarith
