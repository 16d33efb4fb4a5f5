// Copyright 2026 The tricorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>

#include <benchmark/benchmark.h>

#include "tricorr/canonical.hpp"
#include "tricorr/classify.hpp"
#include "tricorr/correlations.hpp"
#include "tricorr/linalg.hpp"
#include "tricorr/noise.hpp"
#include "tricorr/states.hpp"

namespace {

using namespace tricorr;

void BM_SingularValues3x9(benchmark::State &state) {
    const auto m = matricize(complete_tensor(measure13(standard_state(StateClass::W))));
    const ComplexMatrix a = m.m[0].to_complex();
    for (auto _ : state) {
        benchmark::DoNotOptimize(singular_values(a));
    }
}
BENCHMARK(BM_SingularValues3x9);

void BM_Canonicalize(benchmark::State &state) {
    const PureState psi = random_state(StateClass::Haar, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonicalize(psi));
    }
}
BENCHMARK(BM_Canonicalize);

void BM_Measure13(benchmark::State &state) {
    const auto rho = DensityOperator::from_pure(random_state(StateClass::Haar, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure13(rho.matrix()));
    }
}
BENCHMARK(BM_Measure13);

void BM_ClassifyPure(benchmark::State &state) {
    const PureState psi = random_state(StateClass::Haar, 3);
    const ToleranceConfig tol = ToleranceConfig::exact();
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_state(psi, tol));
    }
}
BENCHMARK(BM_ClassifyPure);

void BM_ClassifyPseudoPure(benchmark::State &state) {
    const auto rho = pseudo_pure(random_state(StateClass::W, 5), 1e-4);
    const ToleranceConfig tol = ToleranceConfig::exact();
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_state(rho, tol, StateModel::PseudoPure));
    }
}
BENCHMARK(BM_ClassifyPseudoPure);

} // namespace

BENCHMARK_MAIN();
