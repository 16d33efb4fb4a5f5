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

// Dense decompositions for the tiny matrices this library works with
// (dimension 2, 4, 8 and the 3x9 correlation unfoldings). Both solvers are
// cyclic Jacobi sweeps: deterministic, no external dependency.

#pragma once

#include <set>
#include <vector>

#include "tricorr/matrix.hpp"

namespace tricorr {

struct JacobiOptions {
    /// Relative off-diagonal (or column-coupling) threshold for convergence.
    double tolerance = 1e-15;
    int max_sweeps = 100;
};

/// Non-increasing, non-negative.
struct SingularValues {
    std::vector<double> values;
};

/// Thin SVD a = U * diag(S) * V^dagger with k = min(rows, cols).
/// U is rows x k and V is cols x k; columns belonging to zero singular values
/// are completed to an orthonormal set.
struct Svd {
    ComplexMatrix u;
    std::vector<double> s;
    ComplexMatrix v;
};

struct Eigensystem {
    /// Ascending.
    std::vector<double> values;
    /// Column i is the eigenvector of values[i].
    ComplexMatrix vectors;
};

/// One-sided (Hestenes) Jacobi SVD. Throws ConvergenceError if the sweep
/// budget runs out.
Svd svd(const ComplexMatrix &m, const JacobiOptions &opt = {});

SingularValues singular_values(const ComplexMatrix &m, const JacobiOptions &opt = {});

/// Cyclic complex Jacobi. Throws InvalidArgument for non-square input or a
/// Hermiticity defect above hermitian_tol * max(1, max|m|).
Eigensystem hermitian_eigensystem(const ComplexMatrix &m, double hermitian_tol = 1e-10,
                                  const JacobiOptions &opt = {});

/// Qubit indices are 1-based; qubit 1 is the most significant bit of the
/// basis index (index = 4*q1 + 2*q2 + q3).
using QubitSet = std::set<int>;

/// Reduced density operator on `keep` (kept qubits stay in ascending order).
/// rho must be 8x8 and keep a nonempty subset of {1,2,3}.
ComplexMatrix partial_trace(const ComplexMatrix &rho, const QubitSet &keep);

/// tr(rho^2), real part.
double purity(const ComplexMatrix &rho);

/// Rank from singular values strictly greater than `threshold`.
int rank_from_singular_values(const SingularValues &sv, double threshold);

} // namespace tricorr
