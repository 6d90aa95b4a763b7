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

#include <string_view>

#include "rnarith/number.hpp"

namespace rnarith {

/// Evaluates a whitespace-separated infix expression of number literals and
/// + - * /, strictly left to right with no precedence: "a + b * c" means
/// (a + b) * c. Every intermediate result is one grid operation, so the
/// evaluation order is part of the contract. The bare token "0" denotes the
/// canonical zero.
RnNumber eval_expression(std::string_view text, const GridParams& params);

}  // namespace rnarith
