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

#include "tricorr/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "tricorr/error.hpp"

namespace tricorr {
namespace {

constexpr double kImagError = 1e-8;

constexpr std::array<std::string_view, 8> kCanonicalZeros = {"XXY", "XYX", "XYZ", "XZY",
                                                             "YXX", "YXZ", "YYY", "YZX"};

int axis_of(char c) {
    switch (c) {
    case 'X':
        return 0;
    case 'Y':
        return 1;
    case 'Z':
        return 2;
    default:
        throw InvalidArgument(std::string("not a Pauli axis: ") + c);
    }
}

const ComplexMatrix &letter_matrix(Pauli p) {
    switch (p) {
    case Pauli::I:
        return pauli::I();
    case Pauli::X:
        return pauli::X();
    case Pauli::Y:
        return pauli::Y();
    case Pauli::Z:
        return pauli::Z();
    }
    return pauli::I();
}

Pauli axis_letter(int axis) { return static_cast<Pauli>(axis + 1); }

} // namespace

std::optional<PauliString> PauliString::parse(std::string_view text) {
    if (text.size() != 3) {
        return std::nullopt;
    }
    PauliString p;
    for (std::size_t i = 0; i < 3; ++i) {
        switch (text[i]) {
        case 'I':
            p.letters[i] = Pauli::I;
            break;
        case 'X':
            p.letters[i] = Pauli::X;
            break;
        case 'Y':
            p.letters[i] = Pauli::Y;
            break;
        case 'Z':
            p.letters[i] = Pauli::Z;
            break;
        default:
            return std::nullopt;
        }
    }
    return p;
}

std::string PauliString::str() const {
    std::string s;
    for (Pauli l : letters) {
        s.push_back("IXYZ"[static_cast<int>(l)]);
    }
    return s;
}

ComplexMatrix PauliString::matrix() const {
    return kron(kron(letter_matrix(letters[0]), letter_matrix(letters[1])),
                letter_matrix(letters[2]));
}

double CorrelationTensor::at(std::string_view letters) const {
    if (letters.size() != 3) {
        throw InvalidArgument("CorrelationTensor: expected three letters");
    }
    return (*this)(axis_of(letters[0]), axis_of(letters[1]), axis_of(letters[2]));
}

double &CorrelationTensor::at(std::string_view letters) {
    if (letters.size() != 3) {
        throw InvalidArgument("CorrelationTensor: expected three letters");
    }
    return (*this)(axis_of(letters[0]), axis_of(letters[1]), axis_of(letters[2]));
}

double CorrelationTensor::max_abs_diff(const CorrelationTensor &o) const {
    double m = 0.0;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        m = std::max(m, std::abs(t_[i] - o.t_[i]));
    }
    return m;
}

ComplexMatrix PauliDecomposition::reconstruct() const {
    ComplexMatrix rho = ComplexMatrix::identity(8);
    auto add = [&](Pauli a, Pauli b, Pauli c, double coeff) {
        if (coeff != 0.0) {
            rho += coeff * PauliString{{a, b, c}}.matrix();
        }
    };
    for (int i = 0; i < 3; ++i) {
        add(axis_letter(i), Pauli::I, Pauli::I, one_body[0][i]);
        add(Pauli::I, axis_letter(i), Pauli::I, one_body[1][i]);
        add(Pauli::I, Pauli::I, axis_letter(i), one_body[2][i]);
        for (int j = 0; j < 3; ++j) {
            add(axis_letter(i), axis_letter(j), Pauli::I, two_body[0][i][j]);
            add(axis_letter(i), Pauli::I, axis_letter(j), two_body[1][i][j]);
            add(Pauli::I, axis_letter(i), axis_letter(j), two_body[2][i][j]);
            for (int k = 0; k < 3; ++k) {
                add(axis_letter(i), axis_letter(j), axis_letter(k), three_body(i, j, k));
            }
        }
    }
    return rho * cplx{1.0 / 8.0};
}

double PauliDecomposition::max_abs() const {
    double m = 0.0;
    for (const auto &q : one_body) {
        for (double v : q) {
            m = std::max(m, std::abs(v));
        }
    }
    for (const auto &p : two_body) {
        for (const auto &row : p) {
            for (double v : row) {
                m = std::max(m, std::abs(v));
            }
        }
    }
    for (double v : three_body.data()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

const std::array<std::string_view, ObservableSet13::kSize> &ObservableSet13::keys() {
    static constexpr std::array<std::string_view, kSize> k = {
        "XXX", "XXZ", "XZX", "ZXY", "XZZ", "YZZ", "ZXX",
        "ZXZ", "ZYY", "ZYZ", "ZZX", "ZZY", "ZZZ"};
    return k;
}

std::optional<std::size_t> ObservableSet13::index_of(std::string_view key) {
    const auto &k = keys();
    const auto it = std::find(k.begin(), k.end(), key);
    if (it == k.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - k.begin());
}

ObservableSet13::ObservableSet13(const std::array<double, kSize> &values) : v_(values) {
    for (std::size_t i = 0; i < kSize; ++i) {
        if (!std::isfinite(v_[i]) || std::abs(v_[i]) > 1.0 + kCorrelationSlack) {
            throw InvalidArgument("ObservableSet13: " + std::string(keys()[i]) +
                                  " outside [-1, 1]");
        }
    }
}

double ObservableSet13::operator[](std::string_view key) const {
    const auto i = index_of(key);
    if (!i) {
        throw InvalidArgument("ObservableSet13: unknown key " + std::string(key));
    }
    return v_[*i];
}

double expectation(const ComplexMatrix &rho, const PauliString &p) {
    if (rho.rows() != 8 || rho.cols() != 8) {
        throw InvalidArgument("expectation: expected an 8x8 operator");
    }
    const ComplexMatrix pm = p.matrix();
    cplx s = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (pm(c, r) != cplx{}) {
                s += rho(r, c) * pm(c, r);
            }
        }
    }
    if (std::abs(s.imag()) > kImagError) {
        throw InconsistentData("expectation: imaginary residue " + std::to_string(s.imag()) +
                               " for " + p.str() + " (operator not Hermitian?)");
    }
    return s.real();
}

double expectation(const DensityOperator &rho, const PauliString &p) {
    return expectation(rho.matrix(), p);
}

PauliDecomposition full_decomposition(const ComplexMatrix &rho) {
    PauliDecomposition d;
    for (int i = 0; i < 3; ++i) {
        const Pauli a = axis_letter(i);
        d.one_body[0][i] = expectation(rho, {{a, Pauli::I, Pauli::I}});
        d.one_body[1][i] = expectation(rho, {{Pauli::I, a, Pauli::I}});
        d.one_body[2][i] = expectation(rho, {{Pauli::I, Pauli::I, a}});
        for (int j = 0; j < 3; ++j) {
            const Pauli b = axis_letter(j);
            d.two_body[0][i][j] = expectation(rho, {{a, b, Pauli::I}});
            d.two_body[1][i][j] = expectation(rho, {{a, Pauli::I, b}});
            d.two_body[2][i][j] = expectation(rho, {{Pauli::I, a, b}});
        }
    }
    d.three_body = three_body_tensor(rho);
    return d;
}

PauliDecomposition full_decomposition(const DensityOperator &rho) {
    return full_decomposition(rho.matrix());
}

CorrelationTensor three_body_tensor(const ComplexMatrix &rho) {
    CorrelationTensor t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                t(i, j, k) =
                    expectation(rho, {{axis_letter(i), axis_letter(j), axis_letter(k)}});
            }
        }
    }
    return t;
}

ObservableSet13 measure13(const ComplexMatrix &rho) {
    std::array<double, ObservableSet13::kSize> v{};
    const auto &k = ObservableSet13::keys();
    for (std::size_t i = 0; i < k.size(); ++i) {
        v[i] = expectation(rho, *PauliString::parse(k[i]));
    }
    return ObservableSet13(v);
}

ObservableSet13 measure13(const DensityOperator &rho) { return measure13(rho.matrix()); }

ObservableSet13 measure13(const PureState &psi) {
    return measure13(ComplexMatrix::outer(psi.span()));
}

CorrelationTensor complete_tensor(const ObservableSet13 &obs) {
    CorrelationTensor t;
    const auto &k = ObservableSet13::keys();
    for (std::size_t i = 0; i < k.size(); ++i) {
        t.at(k[i]) = obs.value(i);
    }
    for (auto z : kCanonicalZeros) {
        t.at(z) = 0.0;
    }
    t.at("XYY") = -obs["XXX"];
    t.at("YXY") = -obs["XXX"];
    t.at("YYX") = -obs["XXX"];
    t.at("YYZ") = -obs["XXZ"];
    t.at("YZY") = -obs["XZX"];
    t.at("ZYX") = obs["ZXY"];
    return t;
}

CanonicalBasisReport canonical_basis_check(const CorrelationTensor &t, double tol) {
    CanonicalBasisReport r;
    for (auto z : kCanonicalZeros) {
        r.max_zero_violation = std::max(r.max_zero_violation, std::abs(t.at(z)));
    }
    const double xxx = t.at("XXX");
    for (double v : {xxx + t.at("XYY"), xxx + t.at("YXY"), xxx + t.at("YYX"),
                     t.at("XXZ") + t.at("YYZ"), t.at("XZX") + t.at("YZY"),
                     t.at("ZXY") - t.at("ZYX")}) {
        r.max_relation_violation = std::max(r.max_relation_violation, std::abs(v));
    }
    r.max_violation = std::max(r.max_zero_violation, r.max_relation_violation);
    r.pass = r.max_violation < tol;
    return r;
}

CanonicalBasisReport canonical_basis_check(const ComplexMatrix &rho, double tol) {
    return canonical_basis_check(three_body_tensor(rho), tol);
}

ComplexMatrix Unfolding::to_complex() const { return from_real(3, 9, entries); }

CorrelationMatrices matricize(const CorrelationTensor &t) {
    CorrelationMatrices out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                out.m[0](i, 3 * j + k) = t(i, j, k);
                out.m[1](j, 3 * i + k) = t(i, j, k);
                out.m[2](k, 3 * i + j) = t(i, j, k);
            }
        }
    }
    return out;
}

} // namespace tricorr
