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

#include "rnarith/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "rnarith/arithmetic.hpp"

namespace rnarith {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

RnNumber parse_operand(const std::string& token, const GridParams& params) {
  if (token == "0") return RnNumber::zero(params);
  return parse_literal(token, params);
}

}  // namespace

RnNumber eval_expression(std::string_view text, const GridParams& params) {
  params.validate();
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) {
    throw DomainError(Errc::MalformedString, "empty expression");
  }
  if (tokens.size() % 2 == 0) {
    throw DomainError(Errc::MalformedString,
                      "expression must alternate literals and operators");
  }
  RnNumber acc = parse_operand(tokens[0], params);
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    const std::string& op = tokens[i];
    const RnNumber rhs = parse_operand(tokens[i + 1], params);
    if (op == "+") acc = add(acc, rhs);
    else if (op == "-") acc = subtract(acc, rhs);
    else if (op == "*") acc = mul(acc, rhs);
    else if (op == "/") acc = divide(acc, rhs);
    else {
      throw DomainError(Errc::MalformedString, "unknown operator '" + op + "'");
    }
  }
  return acc;
}

}  // namespace rnarith
