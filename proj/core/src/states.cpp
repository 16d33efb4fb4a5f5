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

#include "tricorr/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "tricorr/error.hpp"
#include "tricorr/linalg.hpp"
#include "tricorr/rng.hpp"

namespace tricorr {
namespace {

constexpr int kRejectionBudget = 1000;
constexpr double kMinPairConcurrence = 0.1;
constexpr double kMaxConditionNumber = 100.0;

std::array<cplx, 2> haar_qubit(Rng &rng) {
    std::array<cplx, 2> v{rng.complex_normal(), rng.complex_normal()};
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    return {v[0] / n, v[1] / n};
}

ComplexMatrix gaussian_2x2(Rng &rng) {
    ComplexMatrix m(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            m(r, c) = rng.complex_normal();
        }
    }
    return m;
}

int bit(std::size_t index, int qubit) { return static_cast<int>((index >> (3 - qubit)) & 1U); }

} // namespace

PureState::PureState() { amps_[0] = 1.0; }

PureState::PureState(const Amplitudes &amps, double tol) : amps_(amps) {
    for (const auto &z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument("PureState: non-finite amplitude");
        }
    }
    const double n = norm();
    if (std::abs(n * n - 1.0) > tol) {
        throw InvalidArgument("PureState: amplitudes are not normalized (norm^2 = " +
                              std::to_string(n * n) + ")");
    }
}

PureState PureState::normalized(const Amplitudes &amps) {
    double s = 0.0;
    for (const auto &z : amps) {
        s += std::norm(z);
    }
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw InvalidArgument("PureState: cannot normalize a zero or non-finite vector");
    }
    Amplitudes out = amps;
    const double n = std::sqrt(s);
    for (auto &z : out) {
        z /= n;
    }
    return PureState(out);
}

PureState PureState::basis(std::size_t index) {
    if (index >= 8) {
        throw InvalidArgument("PureState::basis: index out of range");
    }
    Amplitudes a{};
    a[index] = 1.0;
    return PureState(a);
}

double PureState::norm() const {
    double s = 0.0;
    for (const auto &z : amps_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

cplx PureState::inner(const PureState &other) const {
    cplx s = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
}

DensityOperator::DensityOperator(ComplexMatrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() != 8 || m_.cols() != 8) {
        throw InvalidArgument("DensityOperator: expected 8x8");
    }
    if (!m_.all_finite()) {
        throw InvalidArgument("DensityOperator: non-finite entry");
    }
    if (m_.hermiticity_defect() > tol) {
        throw InvalidArgument("DensityOperator: not Hermitian");
    }
    if (std::abs(m_.trace() - cplx{1.0}) > tol) {
        throw InvalidArgument("DensityOperator: trace is not 1");
    }
    const auto eig = hermitian_eigensystem(m_, tol);
    if (eig.values.front() < -tol) {
        throw InvalidArgument("DensityOperator: negative eigenvalue " +
                              std::to_string(eig.values.front()));
    }
}

DensityOperator DensityOperator::from_pure(const PureState &psi) {
    return DensityOperator(ComplexMatrix::outer(psi.span()), Unchecked{});
}

void CanonicalForm::validate(double tol) const {
    double s = 0.0;
    for (double x : a) {
        if (!std::isfinite(x) || x < 0.0) {
            throw InvalidArgument("CanonicalForm: coefficients must be non-negative");
        }
        s += x * x;
    }
    if (std::abs(s - 1.0) > tol) {
        throw InvalidArgument("CanonicalForm: sum of squared coefficients is " +
                              std::to_string(s) + ", expected 1");
    }
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
        throw InvalidArgument("CanonicalForm: theta outside [0, pi]");
    }
}

std::string to_string(StateClass c) {
    switch (c) {
    case StateClass::Ghz:
        return "GHZ";
    case StateClass::W:
        return "W";
    case StateClass::Bs1:
        return "BS-1";
    case StateClass::Bs2:
        return "BS-2";
    case StateClass::Bs3:
        return "BS-3";
    case StateClass::Sep:
        return "SEP";
    case StateClass::Haar:
        return "HAAR";
    }
    return "?";
}

std::optional<StateClass> parse_state_class(std::string_view text) {
    std::string t;
    for (char ch : text) {
        if (ch != '-' && ch != '_') {
            t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
        }
    }
    if (t == "GHZ") return StateClass::Ghz;
    if (t == "W") return StateClass::W;
    if (t == "BS1") return StateClass::Bs1;
    if (t == "BS2") return StateClass::Bs2;
    if (t == "BS3") return StateClass::Bs3;
    if (t == "SEP") return StateClass::Sep;
    if (t == "HAAR") return StateClass::Haar;
    return std::nullopt;
}

PureState standard_state(StateClass c) {
    const double h = 1.0 / std::numbers::sqrt2;
    PureState::Amplitudes a{};
    switch (c) {
    case StateClass::Ghz:
        a[0] = h;
        a[7] = h;
        break;
    case StateClass::W:
        a[0] = a[4] = a[5] = a[6] = 0.5;
        break;
    case StateClass::Bs1:
        a[0] = h;
        a[3] = h;
        break;
    case StateClass::Bs2:
        a[0] = h;
        a[5] = h;
        break;
    case StateClass::Bs3:
        a[2] = h;
        a[4] = h;
        break;
    case StateClass::Sep:
        a[7] = 1.0;
        break;
    case StateClass::Haar:
        throw InvalidArgument("standard_state: HAAR has no standard representative");
    }
    return PureState(a);
}

PureState from_canonical(const CanonicalForm &c) {
    c.validate();
    PureState::Amplitudes a{};
    a[0] = c.a[0];
    a[4] = std::polar(c.a[1], c.theta);
    a[5] = c.a[2];
    a[6] = c.a[3];
    a[7] = c.a[4];
    return PureState(a);
}

PureState random_state(StateClass c, std::uint64_t seed) {
    Rng rng(seed);
    PureState::Amplitudes a{};
    switch (c) {
    case StateClass::Haar: {
        for (auto &z : a) {
            z = rng.complex_normal();
        }
        return PureState::normalized(a);
    }
    case StateClass::Sep: {
        const auto q1 = haar_qubit(rng);
        const auto q2 = haar_qubit(rng);
        const auto q3 = haar_qubit(rng);
        for (std::size_t i = 0; i < 8; ++i) {
            a[i] = q1[bit(i, 1)] * q2[bit(i, 2)] * q3[bit(i, 3)];
        }
        return PureState::normalized(a);
    }
    case StateClass::Bs1:
    case StateClass::Bs2:
    case StateClass::Bs3: {
        const int lone = c == StateClass::Bs1 ? 1 : (c == StateClass::Bs2 ? 2 : 3);
        std::array<cplx, 4> pair{};
        int attempt = 0;
        for (;; ++attempt) {
            if (attempt >= kRejectionBudget) {
                throw Error("random_state: rejection budget exhausted for " + to_string(c));
            }
            double s = 0.0;
            for (auto &z : pair) {
                z = rng.complex_normal();
                s += std::norm(z);
            }
            for (auto &z : pair) {
                z /= std::sqrt(s);
            }
            const double conc = 2.0 * std::abs(pair[0] * pair[3] - pair[1] * pair[2]);
            if (conc > kMinPairConcurrence) {
                break;
            }
        }
        const auto single = haar_qubit(rng);
        for (std::size_t i = 0; i < 8; ++i) {
            int pair_index = 0;
            for (int q = 1; q <= 3; ++q) {
                if (q != lone) {
                    pair_index = (pair_index << 1) | bit(i, q);
                }
            }
            a[i] = single[bit(i, lone)] * pair[pair_index];
        }
        return PureState::normalized(a);
    }
    case StateClass::Ghz:
    case StateClass::W: {
        const PureState base = standard_state(c);
        std::array<ComplexMatrix, 3> ops;
        int attempts = 0;
        for (auto &op : ops) {
            for (;;) {
                if (++attempts > kRejectionBudget) {
                    throw Error("random_state: rejection budget exhausted for " +
                                to_string(c));
                }
                op = gaussian_2x2(rng);
                const auto sv = singular_values(op).values;
                if (sv[1] > 0.0 && sv[0] / sv[1] <= kMaxConditionNumber) {
                    break;
                }
            }
        }
        const auto full = kron(kron(ops[0], ops[1]), ops[2]);
        const auto v = full * base.span();
        std::copy(v.begin(), v.end(), a.begin());
        return PureState::normalized(a);
    }
    }
    throw InvalidArgument("random_state: unknown class");
}

ComplexMatrix random_unitary_2x2(std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
        ComplexMatrix g = gaussian_2x2(rng);
        const double n0 = std::sqrt(std::norm(g(0, 0)) + std::norm(g(1, 0)));
        if (n0 < 1e-12) {
            continue;
        }
        const cplx u00 = g(0, 0) / n0;
        const cplx u10 = g(1, 0) / n0;
        const cplx dot = std::conj(u00) * g(0, 1) + std::conj(u10) * g(1, 1);
        const cplx w0 = g(0, 1) - dot * u00;
        const cplx w1 = g(1, 1) - dot * u10;
        const double n1 = std::sqrt(std::norm(w0) + std::norm(w1));
        if (n1 < 1e-12) {
            continue;
        }
        return ComplexMatrix{{u00, w0 / n1}, {u10, w1 / n1}};
    }
    throw Error("random_unitary_2x2: degenerate samples");
}

PureState apply_local(const std::array<ComplexMatrix, 3> &u, const PureState &psi) {
    for (const auto &m : u) {
        if (m.rows() != 2 || m.cols() != 2) {
            throw InvalidArgument("apply_local: expected three 2x2 operators");
        }
    }
    const auto full = kron(kron(u[0], u[1]), u[2]);
    const auto v = full * psi.span();
    PureState::Amplitudes a{};
    std::copy(v.begin(), v.end(), a.begin());
    return PureState::normalized(a);
}

double fidelity(const ComplexMatrix &a, const ComplexMatrix &b) {
    const double na = (a * a.adjoint()).trace().real();
    const double nb = (b * b.adjoint()).trace().real();
    if (!(na > 0.0) || !(nb > 0.0)) {
        throw InvalidArgument("fidelity: zero-norm operand");
    }
    return std::abs((a * b.adjoint()).trace()) / std::sqrt(na * nb);
}

double fidelity(const DensityOperator &a, const DensityOperator &b) {
    return fidelity(a.matrix(), b.matrix());
}

} // namespace tricorr
