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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rnarith/arithmetic.hpp"
#include "rnarith/lattice.hpp"
#include "rnarith/ordering.hpp"

namespace {

using namespace rnarith;

GridParams params_for(int n) {
  return GridParams{2, n, GridMode::SymmetricRegion,
                    RoundMode::TruncateTowardZero};
}

std::vector<Rational> random_rationals(std::size_t count) {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 4096);
  std::vector<Rational> out;
  out.reserve(count);
  while (out.size() < count) {
    const long p = num(rng);
    if (p == 0) continue;
    out.emplace_back(p, den(rng));
  }
  return out;
}

std::vector<RnNumber> random_numbers(const GridParams& params, std::size_t count) {
  std::vector<RnNumber> out;
  out.reserve(count);
  for (const Rational& q : random_rationals(count)) {
    out.push_back(round_to_grid(q, params));
  }
  return out;
}

void BM_RoundToGrid(benchmark::State& state) {
  const GridParams params = params_for(static_cast<int>(state.range(0)));
  const auto inputs = random_rationals(512);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(round_to_grid(inputs[i++ & 511], params));
  }
}
BENCHMARK(BM_RoundToGrid)->Arg(2)->Arg(8)->Arg(16);

void BM_Add(benchmark::State& state) {
  const GridParams params = params_for(static_cast<int>(state.range(0)));
  const auto xs = random_numbers(params, 512);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(add(xs[i & 511], xs[(i + 97) & 511]));
    ++i;
  }
}
BENCHMARK(BM_Add)->Arg(2)->Arg(8)->Arg(16);

void BM_Mul(benchmark::State& state) {
  const GridParams params = params_for(static_cast<int>(state.range(0)));
  const auto xs = random_numbers(params, 512);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(xs[i & 511], xs[(i + 97) & 511]));
    ++i;
  }
}
BENCHMARK(BM_Mul)->Arg(2)->Arg(8)->Arg(16);

void BM_SuccChain(benchmark::State& state) {
  const GridParams params = params_for(2);
  RnNumber x = RnNumber::one(params);
  for (auto _ : state) {
    x = succ(x).next;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_SuccChain);

void BM_Iterate(benchmark::State& state) {
  const GridParams params = params_for(2);
  const RnNumber x = RnNumber::one(params);
  const BigInt steps = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate(x, steps));
  }
}
BENCHMARK(BM_Iterate)->Arg(1000)->Arg(1000000);

void BM_WindowEnum(benchmark::State& state) {
  const GridParams params = params_for(2);
  Window window{-2, 2, true, true, true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        window_enum(params, static_cast<std::size_t>(state.range(0)), window,
                    1u << 24));
  }
}
BENCHMARK(BM_WindowEnum)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
