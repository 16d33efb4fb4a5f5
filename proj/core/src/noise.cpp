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

#include "tricorr/noise.hpp"

#include <algorithm>
#include <cmath>

#include "tricorr/error.hpp"
#include "tricorr/rng.hpp"

namespace tricorr {
namespace {

void require_unit_interval(double v, const char *name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
    }
}

DensityOperator blend(const PureState &psi, double weight_pure, double weight_identity) {
    ComplexMatrix m = ComplexMatrix::outer(psi.span());
    m *= cplx{weight_pure};
    for (std::size_t i = 0; i < 8; ++i) {
        m(i, i) += weight_identity / 8.0;
    }
    return DensityOperator(m);
}

} // namespace

void NoiseConfig::validate() const {
    require_unit_interval(epsilon_pps, "epsilon_pps");
    require_unit_interval(mixing, "mixing");
    if (!(sigma_obs >= 0.0) || !std::isfinite(sigma_obs)) {
        throw InvalidArgument("sigma_obs must be finite and >= 0");
    }
}

DensityOperator pseudo_pure(const PureState &psi, double epsilon) {
    require_unit_interval(epsilon, "epsilon");
    return blend(psi, epsilon, 1.0 - epsilon);
}

DensityOperator depolarize(const PureState &psi, double mixing) {
    require_unit_interval(mixing, "mixing");
    return blend(psi, 1.0 - mixing, mixing);
}

double depolarized_fidelity(double m) {
    require_unit_interval(m, "mixing");
    const double overlap = (1.0 - m) + m / 8.0;
    const double norm_sq = (1.0 - m) * (1.0 - m) + (1.0 - m) * m / 4.0 + m * m / 8.0;
    return overlap / std::sqrt(norm_sq);
}

MixedState mix_to_fidelity(const PureState &psi, double target) {
    const double floor = 1.0 / std::sqrt(8.0);
    if (!(target >= floor - 1e-12 && target <= 1.0)) {
        throw InvalidArgument("target fidelity " + std::to_string(target) +
                              " outside [1/sqrt(8), 1]");
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (depolarized_fidelity(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double m = target >= 1.0 ? 0.0 : 0.5 * (lo + hi);
    DensityOperator rho = depolarize(psi, m);
    const double achieved = fidelity(rho, DensityOperator::from_pure(psi));
    if (std::abs(achieved - target) > 1e-6) {
        throw ConvergenceError("mix_to_fidelity: achieved " + std::to_string(achieved), 
                               std::abs(achieved - target));
    }
    return {std::move(rho), m};
}

ObservableSet13 noisy_observables(const ObservableSet13 &obs, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw InvalidArgument("sigma must be finite and >= 0");
    }
    if (sigma == 0.0) {
        return obs;
    }
    Rng rng(seed);
    std::array<double, ObservableSet13::kSize> v = obs.values();
    for (double &x : v) {
        x = std::clamp(x + sigma * rng.normal(), -1.0, 1.0);
    }
    return ObservableSet13(v);
}

} // namespace tricorr
