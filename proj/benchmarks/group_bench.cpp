// Copyright 2026 The nilentropy Authors.
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

#include "nilentropy/ball.hpp"
#include "nilentropy/group.hpp"
#include "nilentropy/hall.hpp"

namespace {

using nilentropy::GroupSpec;
using nilentropy::MalcevVector;

MalcevVector sample(const GroupSpec& spec, long seed) {
  MalcevVector g(spec.dimension());
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = (seed * 7919 + static_cast<long>(k) * 104729) % 201 - 100;
  return g;
}

void BM_HallBasis(benchmark::State& state) {
  const int cls = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nilentropy::generate_hall_basis(3, cls).size());
  }
}
BENCHMARK(BM_HallBasis)->Arg(4)->Arg(6);

void BM_Multiply(benchmark::State& state) {
  const GroupSpec spec(2, static_cast<int>(state.range(0)));
  const MalcevVector a = sample(spec, 1), b = sample(spec, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nilentropy::multiply(a, b, spec));
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(6);

void BM_Power(benchmark::State& state) {
  const GroupSpec spec(2, 4);
  const MalcevVector a = sample(spec, 3);
  const nilentropy::Integer e("123456789012345678901234567890");
  for (auto _ : state) benchmark::DoNotOptimize(nilentropy::power(a, e, spec));
}
BENCHMARK(BM_Power);

void BM_CayleyBall(benchmark::State& state) {
  const GroupSpec spec(2, static_cast<int>(state.range(0)));
  const int radius = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const nilentropy::CayleyBall ball(spec, {radius, 10'000'000});
    state.counters["elements"] = static_cast<double>(ball.size());
  }
}
BENCHMARK(BM_CayleyBall)->Args({2, 16})->Args({3, 10})->Unit(benchmark::kMillisecond);

}  // namespace
