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
#include <optional>
#include <string>
#include <string_view>

#include "tricorr/matrix.hpp"
#include "tricorr/states.hpp"

namespace tricorr {

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

/// Three letters over {I, X, Y, Z}; letter k acts on qubit k+1.
struct PauliString {
    std::array<Pauli, 3> letters{Pauli::I, Pauli::I, Pauli::I};

    /// "XZX", "IZZ", ... Returns nullopt for anything else.
    static std::optional<PauliString> parse(std::string_view text);
    std::string str() const;
    ComplexMatrix matrix() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;
};

/// 3x3x3 three-body correlations t_ijk, axes ordered x, y, z (0-based).
class CorrelationTensor {
  public:
    double &operator()(int i, int j, int k) { return t_[9 * i + 3 * j + k]; }
    double operator()(int i, int j, int k) const { return t_[9 * i + 3 * j + k]; }
    /// Entry for a string of three non-identity letters.
    double at(std::string_view letters) const;
    double &at(std::string_view letters);
    const std::array<double, 27> &data() const noexcept { return t_; }
    double max_abs_diff(const CorrelationTensor &o) const;

  private:
    std::array<double, 27> t_{};
};

/// Every nontrivial Pauli coefficient of a three-qubit operator.
/// one_body[q][i] = tr(rho sigma_i on qubit q+1); two_body[p] for the pairs
/// (1,2), (1,3), (2,3) in that order, indexed [i][j] by the two axes.
struct PauliDecomposition {
    std::array<std::array<double, 3>, 3> one_body{};
    std::array<std::array<std::array<double, 3>, 3>, 3> two_body{};
    CorrelationTensor three_body;

    /// rho = (1/8) sum over all 64 strings of coefficient * string.
    ComplexMatrix reconstruct() const;
    /// max |coefficient| over all 63.
    double max_abs() const;
};

/// The thirteen observables that remain after the canonical-basis zeros and
/// sign relations are used.
class ObservableSet13 {
  public:
    static constexpr std::size_t kSize = 13;
    /// XXX XXZ XZX ZXY XZZ YZZ ZXX ZXZ ZYY ZYZ ZZX ZZY ZZZ
    static const std::array<std::string_view, kSize> &keys();
    /// Index of a key, or nullopt if it is not one of the thirteen.
    static std::optional<std::size_t> index_of(std::string_view key);

    ObservableSet13() = default;
    /// Throws InvalidArgument if any value is outside [-1, 1] + 1e-9.
    explicit ObservableSet13(const std::array<double, kSize> &values);

    double operator[](std::string_view key) const;
    double value(std::size_t i) const { return v_[i]; }
    const std::array<double, kSize> &values() const noexcept { return v_; }

  private:
    std::array<double, kSize> v_{};
};

/// Slack allowed above |t| = 1 for a correlation value.
inline constexpr double kCorrelationSlack = 1e-9;

/// tr(rho P). Throws InconsistentData if the imaginary residue exceeds 1e-8.
double expectation(const ComplexMatrix &rho, const PauliString &p);
double expectation(const DensityOperator &rho, const PauliString &p);

PauliDecomposition full_decomposition(const DensityOperator &rho);
PauliDecomposition full_decomposition(const ComplexMatrix &rho);
/// Three-body block only (27 traces).
CorrelationTensor three_body_tensor(const ComplexMatrix &rho);

ObservableSet13 measure13(const ComplexMatrix &rho);
ObservableSet13 measure13(const DensityOperator &rho);
ObservableSet13 measure13(const PureState &psi);

/// Builds all 27 entries from the thirteen: the eight canonical-basis zeros
/// (XXY XYX XYZ XZY YXX YXZ YYY YZX), the six relations
/// XYY = YXY = YYX = -XXX, YYZ = -XXZ, YZY = -XZX, ZYX = ZXY, and the
/// thirteen measured values copied.
CorrelationTensor complete_tensor(const ObservableSet13 &obs);

struct CanonicalBasisReport {
    double max_zero_violation = 0.0;
    double max_relation_violation = 0.0;
    double max_violation = 0.0;
    bool pass = true;
};

/// How far rho is from satisfying the canonical-basis zeros and relations.
CanonicalBasisReport canonical_basis_check(const ComplexMatrix &rho, double tol);
CanonicalBasisReport canonical_basis_check(const CorrelationTensor &t, double tol);

/// Real 3x9, row-major.
struct Unfolding {
    std::array<double, 27> entries{};
    double operator()(int r, int c) const { return entries[9 * r + c]; }
    double &operator()(int r, int c) { return entries[9 * r + c]; }
    ComplexMatrix to_complex() const;
};

/// m[0] = T_1|23, m[1] = T_2|13, m[2] = T_3|12; the singled-out qubit's axis
/// indexes rows:
///   m1[i][3j + k] = m2[j][3i + k] = m3[k][3i + j] = t_ijk.
struct CorrelationMatrices {
    std::array<Unfolding, 3> m;
};

CorrelationMatrices matricize(const CorrelationTensor &t);

} // namespace tricorr
