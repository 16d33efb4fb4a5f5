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

#pragma once

#include <cstdint>

#include "tricorr/correlations.hpp"
#include "tricorr/states.hpp"

namespace tricorr {

struct NoiseConfig {
    /// Polarization of the pseudo-pure ensemble; 1 is a pure state.
    double epsilon_pps = 1.0;
    /// Depolarizing weight m in (1 - m)|psi><psi| + m I/8.
    double mixing = 0.0;
    /// Standard deviation of the Gaussian added to each observable.
    double sigma_obs = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// (1 - eps)/8 I + eps |psi><psi|.
DensityOperator pseudo_pure(const PureState &psi, double epsilon);

/// (1 - m)|psi><psi| + m I/8.
DensityOperator depolarize(const PureState &psi, double mixing);

/// Fidelity of depolarize(psi, m) against |psi><psi| in closed form.
double depolarized_fidelity(double mixing);

struct MixedState {
    DensityOperator rho;
    double mixing;
};

/// Solves depolarized_fidelity(m) = target by bisection; the result is
/// re-checked against the trace formula. Targets outside
/// [1/sqrt(8), 1] throw InvalidArgument.
MixedState mix_to_fidelity(const PureState &psi, double target_fidelity);

/// Adds independent N(0, sigma) to every value and clamps to [-1, 1].
/// Bit-identical for a given seed.
ObservableSet13 noisy_observables(const ObservableSet13 &obs, double sigma, std::uint64_t seed);

} // namespace tricorr
