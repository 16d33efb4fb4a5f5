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

#include "tricorr/matrix.hpp"
#include "tricorr/states.hpp"

namespace tricorr {

struct CanonicalizeOptions {
    /// Magnitudes below this are treated as exact zeros when fixing phases.
    double zero_tolerance = 1e-12;
    /// Maximum per-amplitude mismatch between the rotated state and the
    /// canonical vector.
    double residual_tolerance = 1e-9;
};

struct CanonicalResult {
    CanonicalForm form;
    /// (U1 (x) U2 (x) U3)|psi> == from_canonical(form).
    std::array<ComplexMatrix, 3> local_unitaries;
    double residual = 0.0;
};

/// Brings a three-qubit pure state to the five-term form
///   a0|000> + a1 e^{i theta}|100> + a2|101> + a3|110> + a4|111>.
///
/// Procedure: rotate qubit 1 into its Schmidt basis, solve the homogeneous
/// quadratic det(alpha*T0 + beta*T1) = 0 for a qubit-1 rotation that makes the
/// top 2x2 slice rank one, diagonalize that slice with U2 (x) U3 via its SVD,
/// and finally absorb phases into diagonal gates. The two roots give theta of
/// opposite sign; the root with theta in [0, pi] is kept, and among those the
/// one with the larger a0 (then the smaller theta).
///
/// Throws CanonicalizationError with the best residual when no root reaches
/// the pattern.
CanonicalResult canonicalize(const PureState &psi, const CanonicalizeOptions &opt = {});

} // namespace tricorr
