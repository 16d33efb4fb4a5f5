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

#include "tricorr/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "tricorr/error.hpp"
#include "tricorr/linalg.hpp"

namespace tricorr {
namespace {

using Tensor = std::array<cplx, 8>; // index 4i + 2j + k

struct Direction {
    cplx alpha;
    cplx beta;
};

// Roots of c*alpha^2 + b*alpha*beta + a*beta^2 = 0 on the projective line.
std::vector<Direction> projective_roots(cplx a, cplx b, cplx c) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    constexpr double rel = 1e-13;
    if (scale < 1e-14) {
        return {{1.0, 0.0}};
    }
    if (std::abs(a) > rel * scale) {
        // a x^2 + b x + c = 0 with x = beta/alpha.
        const cplx disc = std::sqrt(b * b - 4.0 * a * c);
        const cplx q = -0.5 * (std::real(std::conj(b) * disc) >= 0.0 ? b + disc : b - disc);
        if (std::abs(q) == 0.0) {
            return {{1.0, 0.0}, {1.0, 0.0}};
        }
        return {{1.0, q / a}, {1.0, c / q}};
    }
    std::vector<Direction> out{{0.0, 1.0}};
    if (std::abs(b) > rel * scale) {
        out.push_back({1.0, -c / b});
    }
    return out;
}

ComplexMatrix slice(const Tensor &t, std::size_t i) {
    return ComplexMatrix{{t[4 * i], t[4 * i + 1]}, {t[4 * i + 2], t[4 * i + 3]}};
}

cplx det2(const ComplexMatrix &m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

ComplexMatrix phase_gate(double phi) {
    return ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, phi)}};
}

Tensor apply_locals(const std::array<ComplexMatrix, 3> &u, const Tensor &t) {
    const auto full = kron(kron(u[0], u[1]), u[2]);
    const auto v = full * std::span<const cplx>(t);
    Tensor out{};
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

struct Candidate {
    CanonicalForm form;
    std::array<ComplexMatrix, 3> u;
    double residual;
    double raw_theta;
};

Candidate build_candidate(const Tensor &t, const ComplexMatrix &schmidt, Direction d,
                          const CanonicalizeOptions &opt) {
    const double n = std::sqrt(std::norm(d.alpha) + std::norm(d.beta));
    const cplx alpha = d.alpha / n;
    const cplx beta = d.beta / n;
    const ComplexMatrix rot{{alpha, beta}, {-std::conj(beta), std::conj(alpha)}};
    const ComplexMatrix id = ComplexMatrix::identity(2);

    ComplexMatrix u1 = rot * schmidt;
    Tensor tp = apply_locals({u1, id, id}, t);

    // Diagonalize the rank-one top slice; when it vanishes the state is
    // |1> (x) (two-qubit state) and the bottom slice is diagonalized instead.
    ComplexMatrix top = slice(tp, 0);
    const ComplexMatrix &target = top.frobenius_norm() > opt.zero_tolerance ? top : slice(tp, 1);
    const Svd dec = svd(target);
    ComplexMatrix u2 = dec.u.adjoint();
    ComplexMatrix u3 = dec.v.transpose();
    Tensor tq = apply_locals({ComplexMatrix::identity(2), u2, u3}, tp);

    auto is_zero = [&](cplx z) { return std::abs(z) <= opt.zero_tolerance; };
    const double global = is_zero(tq[0]) ? 0.0 : -std::arg(tq[0]);
    for (auto &z : tq) {
        z *= std::polar(1.0, global);
    }
    const cplx b00 = tq[4];
    const cplx b01 = tq[5];
    const cplx b10 = tq[6];
    const cplx b11 = tq[7];
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    if (!is_zero(b01) && !is_zero(b10) && !is_zero(b11)) {
        p1 = -std::arg(b01) - std::arg(b10) + std::arg(b11);
        p3 = -std::arg(b01) - p1;
        p2 = -std::arg(b10) - p1;
    } else {
        // A vanishing amplitude frees one phase, which is spent on theta.
        p1 = is_zero(b00) ? 0.0 : -std::arg(b00);
        if (!is_zero(b01)) {
            p3 = -std::arg(b01) - p1;
        }
        if (!is_zero(b10)) {
            p2 = -std::arg(b10) - p1;
        }
        if (!is_zero(b11)) {
            if (is_zero(b01)) {
                p3 = -std::arg(b11) - p1 - p2;
            } else {
                p2 = -std::arg(b11) - p1 - p3;
            }
        }
    }
    u1 = std::polar(1.0, global) * (phase_gate(p1) * u1);
    u2 = phase_gate(p2) * u2;
    u3 = phase_gate(p3) * u3;

    Candidate cand{{}, {u1, u2, u3}, 0.0, 0.0};
    const Tensor out = apply_locals(cand.u, t);
    cand.form.a = {std::abs(out[0]), std::abs(out[4]), std::abs(out[5]), std::abs(out[6]),
                   std::abs(out[7])};
    cand.raw_theta = is_zero(out[4]) ? 0.0 : std::arg(out[4]);

    double theta = cand.raw_theta;
    constexpr double angle_slack = 1e-10;
    if (theta < 0.0 && theta > -angle_slack) {
        theta = 0.0;
    } else if (theta < -std::numbers::pi + angle_slack) {
        theta = std::numbers::pi;
    }
    cand.form.theta = theta;

    double s = 0.0;
    for (double x : cand.form.a) {
        s += x * x;
    }
    for (double &x : cand.form.a) {
        x /= std::sqrt(s);
    }

    Tensor expect{};
    expect[0] = cand.form.a[0];
    expect[4] = std::polar(cand.form.a[1], cand.form.theta);
    expect[5] = cand.form.a[2];
    expect[6] = cand.form.a[3];
    expect[7] = cand.form.a[4];
    for (std::size_t i = 0; i < 8; ++i) {
        cand.residual = std::max(cand.residual, std::abs(out[i] - expect[i]));
    }
    return cand;
}

} // namespace

CanonicalResult canonicalize(const PureState &psi, const CanonicalizeOptions &opt) {
    Tensor t = psi.amplitudes();

    // Schmidt basis of qubit 1 versus the pair; makes a product structure on
    // qubit 1 show up as an exactly vanishing second slice.
    ComplexMatrix m(2, 4, std::vector<cplx>(t.begin(), t.end()));
    const Svd schmidt_dec = svd(m);
    const ComplexMatrix schmidt = schmidt_dec.u.adjoint();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const Tensor ts = apply_locals({schmidt, id, id}, t);

    const ComplexMatrix t0 = slice(ts, 0);
    const ComplexMatrix t1 = slice(ts, 1);
    const cplx quad_a = det2(t1);
    const cplx quad_c = det2(t0);
    const cplx quad_b =
        t0(0, 0) * t1(1, 1) + t1(0, 0) * t0(1, 1) - t0(0, 1) * t1(1, 0) - t1(0, 1) * t0(1, 0);

    std::optional<Candidate> best;
    double best_residual = std::numeric_limits<double>::infinity();
    for (const auto &root : projective_roots(quad_a, quad_b, quad_c)) {
        Candidate cand = build_candidate(t, schmidt, root, opt);
        best_residual = std::min(best_residual, cand.residual);
        const bool negative_theta =
            cand.raw_theta < -1e-10 && cand.form.theta != std::numbers::pi;
        if (cand.residual > opt.residual_tolerance || negative_theta) {
            continue;
        }
        if (!best) {
            best = std::move(cand);
            continue;
        }
        const double da = cand.form.a[0] - best->form.a[0];
        if (da > 1e-12 || (std::abs(da) <= 1e-12 && cand.form.theta < best->form.theta)) {
            best = std::move(cand);
        }
    }
    if (!best) {
        throw CanonicalizationError("canonicalize: no root reached the canonical pattern",
                                    best_residual);
    }
    return CanonicalResult{best->form, best->u, best->residual};
}

} // namespace tricorr
