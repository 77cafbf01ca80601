// Copyright 2026 The relent Authors
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

#include "relent/distill.hpp"
#include "relent/states.hpp"
#include "relent/wigner_map.hpp"

namespace {

using namespace relent;

static void BM_EigenvaluesHermitian(benchmark::State& state) {
  const Mat4 m = random_density(7).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenvalues_hermitian(m));
  }
}
BENCHMARK(BM_EigenvaluesHermitian);

static void BM_ApplyBoost(benchmark::State& state) {
  const Mat4 m = random_density(7).matrix();
  const WignerCoefficient n(0.99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_boost(m, n));
  }
}
BENCHMARK(BM_ApplyBoost);

static void BM_PptVerdict(benchmark::State& state) {
  const DensityMatrix4 rho = random_density(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt_verdict(rho));
  }
}
BENCHMARK(BM_PptVerdict);

static void BM_ClassifyFrames(benchmark::State& state) {
  const FrameSet frames =
      FrameSet::uniform(GaussianWavepacket(0.2, 1.0), 0.0, 10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_frames(WernerParam(0.7), frames));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassifyFrames)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_GaussianNormalization(benchmark::State& state) {
  const GaussianWavepacket packet(0.1, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian_normalization(packet));
  }
}
BENCHMARK(BM_GaussianNormalization);

}  // namespace

BENCHMARK_MAIN();
