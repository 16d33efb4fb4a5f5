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

// Seeded generators and independent reference computations shared by the
// unit tests. Nothing here goes through ComplexMatrix::kron or the Jacobi
// routines, so the oracles are independent of the code under test.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "tricorr/matrix.hpp"
#include "tricorr/rng.hpp"
#include "tricorr/states.hpp"

namespace tricorr::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rng.complex_normal();
        }
    }
    return m;
}

inline PureState random_pure(std::uint64_t seed) { return random_state(StateClass::Haar, seed); }

inline CanonicalForm random_canonical(std::uint64_t seed) {
    Rng rng(seed);
    CanonicalForm f;
    double s = 0.0;
    for (double &a : f.a) {
        a = rng.uniform();
        s += a * a;
    }
    for (double &a : f.a) {
        a /= std::sqrt(s);
    }
    f.theta = rng.uniform(0.0, 3.141592653589793);
    return f;
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return e;
}

/// Singular values from Eigen, descending.
inline std::vector<double> reference_singular_values(const ComplexMatrix &m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto &s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

/// <psi| s1 (x) s2 (x) s3 |psi> from the action of Paulis on basis states.
/// Letters: 0 = I, 1 = X, 2 = Y, 3 = Z. Qubit 1 is the most significant bit.
inline std::complex<double> reference_expectation(const PureState &psi, std::array<int, 3> letters) {
    using C = std::complex<double>;
    C total = 0.0;
    for (int x = 0; x < 8; ++x) {
        int y = x;
        C phase = 1.0;
        for (int q = 0; q < 3; ++q) {
            const int bit = (x >> (2 - q)) & 1;
            switch (letters[static_cast<std::size_t>(q)]) {
            case 1:
                y ^= 1 << (2 - q);
                break;
            case 2:
                y ^= 1 << (2 - q);
                phase *= bit ? C(0, -1) : C(0, 1);
                break;
            case 3:
                phase *= bit ? -1.0 : 1.0;
                break;
            default:
                break;
            }
        }
        // P|x> = phase |y>, so <psi|P|psi> gains conj(psi_y) phase psi_x.
        total += std::conj(psi[static_cast<std::size_t>(y)]) * phase * psi[static_cast<std::size_t>(x)];
    }
    return total;
}

/// Single-qubit reduced density matrix by explicit index sums.
inline std::array<std::array<std::complex<double>, 2>, 2> reference_marginal(const PureState &psi, int qubit) {
    std::array<std::array<std::complex<double>, 2>, 2> rho{};
    const int shift = 3 - qubit;
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            if ((x & ~(1 << shift)) != (y & ~(1 << shift))) {
                continue;
            }
            rho[static_cast<std::size_t>((x >> shift) & 1)][static_cast<std::size_t>((y >> shift) & 1)] +=
                psi[static_cast<std::size_t>(x)] * std::conj(psi[static_cast<std::size_t>(y)]);
        }
    }
    return rho;
}

inline double reference_marginal_purity(const PureState &psi, int qubit) {
    const auto r = reference_marginal(psi, qubit);
    double p = 0.0;
    for (const auto &row : r) {
        for (auto z : row) {
            p += std::norm(z);
        }
    }
    return p;
}

} // namespace tricorr::testing
