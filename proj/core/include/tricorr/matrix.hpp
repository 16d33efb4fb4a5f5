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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tricorr {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Sizes in this library never exceed 9, so
/// storage is a plain vector and every algorithm is O(n^3) or cheaper.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    /// Zero matrix. Throws InvalidArgument on a zero dimension.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Rows given as nested lists; all rows must have equal length.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const cplx> diag);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const cplx> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    std::span<const cplx> entries() const noexcept { return data_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// Largest |a_rc|.
    double max_abs() const;
    /// max |a - a^dagger| entry.
    double hermiticity_defect() const;
    bool all_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(cplx s);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
std::vector<cplx> operator*(const ComplexMatrix &a, std::span<const cplx> v);

/// Kronecker product, dimensions (a.rows*b.rows) x (a.cols*b.cols).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// max entrywise |a - b|; shapes must match.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Real 3x9 (or any small) matrix promoted to complex.
ComplexMatrix from_real(std::size_t rows, std::size_t cols, std::span<const double> entries);

namespace pauli {
const ComplexMatrix &I();
const ComplexMatrix &X();
const ComplexMatrix &Y();
const ComplexMatrix &Z();
} // namespace pauli

} // namespace tricorr
