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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "tricorr/matrix.hpp"

namespace tricorr {

/// Basis order |000>..|111>, qubit 1 most significant.
class PureState {
  public:
    using Amplitudes = std::array<cplx, 8>;

    /// |000>.
    PureState();
    /// Throws InvalidArgument if |norm^2 - 1| > tol or an entry is non-finite.
    explicit PureState(const Amplitudes &amps, double tol = 1e-10);
    /// Rescales to unit norm. Throws on a zero vector.
    static PureState normalized(const Amplitudes &amps);
    static PureState basis(std::size_t index);

    const Amplitudes &amplitudes() const noexcept { return amps_; }
    std::span<const cplx> span() const noexcept { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;
    /// <this|other>
    cplx inner(const PureState &other) const;

  private:
    Amplitudes amps_{};
};

/// 8x8 Hermitian, unit-trace, positive semidefinite.
class DensityOperator {
  public:
    /// Validates within `tol` (Hermiticity, trace, smallest eigenvalue >= -tol).
    explicit DensityOperator(ComplexMatrix m, double tol = 1e-10);
    static DensityOperator from_pure(const PureState &psi);

    const ComplexMatrix &matrix() const noexcept { return m_; }

  private:
    struct Unchecked {};
    DensityOperator(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// a0|000> + a1 e^{i theta}|100> + a2|101> + a3|110> + a4|111>.
struct CanonicalForm {
    std::array<double, 5> a{1.0, 0.0, 0.0, 0.0, 0.0};
    double theta = 0.0;

    /// Throws InvalidArgument unless a_i >= 0, sum a_i^2 = 1 within tol and
    /// theta in [0, pi].
    void validate(double tol = 1e-10) const;
};

/// The six families used for state preparation, plus unconstrained Haar.
enum class StateClass { Ghz, W, Bs1, Bs2, Bs3, Sep, Haar };

std::string to_string(StateClass c);
/// Accepts "GHZ", "W", "BS-1".."BS-3", "SEP", "HAAR" in any case; "BS1" also works.
std::optional<StateClass> parse_state_class(std::string_view text);

/// GHZ, W, BS-1, BS-2, BS-3, SEP exactly as listed for the experiments.
/// Throws InvalidArgument for Haar.
PureState standard_state(StateClass c);

PureState from_canonical(const CanonicalForm &c);

/// Seeded sampler.
///   Haar: normalized vector of 8 complex Gaussians.
///   Sep:  product of three Haar qubits.
///   Bs-k: Haar qubit k times a Haar pair (concurrence > 0.1 by rejection).
///   Ghz/W: random invertible local operators (condition number <= 100)
///          applied to the standard state.
/// Throws Error when 1000 rejection attempts are exhausted.
PureState random_state(StateClass c, std::uint64_t seed);

/// Haar-random 2x2 unitary (QR of a complex Gaussian matrix, phase-fixed).
ComplexMatrix random_unitary_2x2(std::uint64_t seed);

/// (U1 (x) U2 (x) U3)|psi>.
PureState apply_local(const std::array<ComplexMatrix, 3> &u, const PureState &psi);

/// |tr(a b^dagger)| / sqrt(tr(a a^dagger) tr(b b^dagger)).
double fidelity(const ComplexMatrix &a, const ComplexMatrix &b);
double fidelity(const DensityOperator &a, const DensityOperator &b);

} // namespace tricorr
