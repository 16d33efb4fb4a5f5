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

#include "tricorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tricorr/error.hpp"

namespace tricorr {
namespace {

// Relative size below which a singular value is treated as null when
// building the left singular basis.
constexpr double kNullSingular = 1e-13;

double column_norm2(const ComplexMatrix &w, std::size_t c) {
    double s = 0.0;
    for (std::size_t r = 0; r < w.rows(); ++r) {
        s += std::norm(w(r, c));
    }
    return s;
}

// Fill columns of `u` flagged in `missing` so that all columns are orthonormal.
void complete_orthonormal(ComplexMatrix &u, const std::vector<bool> &missing) {
    const std::size_t n = u.rows();
    std::size_t candidate = 0;
    for (std::size_t c = 0; c < u.cols(); ++c) {
        if (!missing[c]) {
            continue;
        }
        for (; candidate < n; ++candidate) {
            std::vector<cplx> v(n);
            v[candidate] = 1.0;
            for (std::size_t o = 0; o < u.cols(); ++o) {
                if (o == c || (missing[o] && o > c)) {
                    continue;
                }
                cplx dot = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    dot += std::conj(u(r, o)) * v[r];
                }
                for (std::size_t r = 0; r < n; ++r) {
                    v[r] -= dot * u(r, o);
                }
            }
            double norm = 0.0;
            for (const auto &z : v) {
                norm += std::norm(z);
            }
            norm = std::sqrt(norm);
            if (norm > 0.5) {
                for (std::size_t r = 0; r < n; ++r) {
                    u(r, c) = v[r] / norm;
                }
                ++candidate;
                break;
            }
        }
    }
}

Svd svd_tall(const ComplexMatrix &a, const JacobiOptions &opt) {
    const std::size_t n = a.cols();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    // Columns below this squared norm are numerically null; rotating them
    // against each other only shuffles rounding noise.
    const double null2 = std::pow(std::numeric_limits<double>::epsilon() * a.frobenius_norm(), 2);

    bool converged = false;
    double worst = 0.0;
    for (int sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
        converged = true;
        worst = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = column_norm2(w, p);
                const double beta = column_norm2(w, q);
                cplx gamma = 0.0;
                for (std::size_t r = 0; r < w.rows(); ++r) {
                    gamma += std::conj(w(r, p)) * w(r, q);
                }
                const double g = std::abs(gamma);
                const double scale = std::sqrt(alpha * beta);
                if (g == 0.0 || g <= opt.tolerance * scale || std::min(alpha, beta) <= null2) {
                    continue;
                }
                worst = std::max(worst, g / scale);
                converged = false;
                const cplx phase = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                // Rotate (w_p, e^{-i phi} w_q) as a real pair, then restore
                // the phase on column q.
                auto rotate = [&](ComplexMatrix &m) {
                    for (std::size_t r = 0; r < m.rows(); ++r) {
                        const cplx xp = m(r, p);
                        const cplx xq = m(r, q) * std::conj(phase);
                        m(r, p) = c * xp - s * xq;
                        m(r, q) = (s * xp + c * xq) * phase;
                    }
                };
                rotate(w);
                rotate(v);
            }
        }
    }
    if (!converged) {
        throw ConvergenceError("svd: Jacobi sweeps exhausted", worst);
    }

    std::vector<double> norms(n);
    for (std::size_t c = 0; c < n; ++c) {
        norms[c] = std::sqrt(column_norm2(w, c));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    Svd out{ComplexMatrix(a.rows(), n), std::vector<double>(n), ComplexMatrix(n, n)};
    const double smax = norms[order[0]];
    std::vector<bool> missing(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t c = order[k];
        out.s[k] = norms[c];
        for (std::size_t r = 0; r < n; ++r) {
            out.v(r, k) = v(r, c);
        }
        if (norms[c] > kNullSingular * smax && norms[c] > 0.0) {
            for (std::size_t r = 0; r < a.rows(); ++r) {
                out.u(r, k) = w(r, c) / norms[c];
            }
        } else {
            missing[k] = true;
        }
    }
    complete_orthonormal(out.u, missing);
    return out;
}

} // namespace

Svd svd(const ComplexMatrix &m, const JacobiOptions &opt) {
    if (!m.all_finite()) {
        throw InvalidArgument("svd: non-finite entry");
    }
    if (m.rows() >= m.cols()) {
        return svd_tall(m, opt);
    }
    // a^dagger = U' S V'^dagger  =>  a = V' S U'^dagger
    Svd t = svd_tall(m.adjoint(), opt);
    return Svd{std::move(t.v), std::move(t.s), std::move(t.u)};
}

SingularValues singular_values(const ComplexMatrix &m, const JacobiOptions &opt) {
    return SingularValues{svd(m, opt).s};
}

Eigensystem hermitian_eigensystem(const ComplexMatrix &m, double hermitian_tol,
                                  const JacobiOptions &opt) {
    if (!m.square()) {
        throw InvalidArgument("hermitian_eigensystem: matrix is not square");
    }
    if (!m.all_finite()) {
        throw InvalidArgument("hermitian_eigensystem: non-finite entry");
    }
    if (m.hermiticity_defect() > hermitian_tol * std::max(1.0, m.max_abs())) {
        throw InvalidArgument("hermitian_eigensystem: matrix is not Hermitian");
    }
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double total = std::max(a.frobenius_norm(), 1e-300);

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(s);
    };

    int sweep = 0;
    for (; sweep < opt.max_sweeps && off_norm() > opt.tolerance * total; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) {
                    continue;
                }
                const cplx phase = a(p, q) / g;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx e = std::conj(phase);
                // A <- A G
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx ap = a(r, p);
                    const cplx aq = a(r, q);
                    a(r, p) = c * ap - s * e * aq;
                    a(r, q) = s * ap + c * e * aq;
                }
                // A <- G^dagger A
                for (std::size_t col = 0; col < n; ++col) {
                    const cplx ap = a(p, col);
                    const cplx aq = a(q, col);
                    a(p, col) = c * ap - s * phase * aq;
                    a(q, col) = s * ap + c * phase * aq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx vp = v(r, p);
                    const cplx vq = v(r, q);
                    v(r, p) = c * vp - s * e * vq;
                    v(r, q) = s * vp + c * e * vq;
                }
            }
        }
    }
    if (off_norm() > opt.tolerance * total) {
        throw ConvergenceError("hermitian_eigensystem: Jacobi sweeps exhausted",
                               off_norm() / total);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    Eigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, const QubitSet &keep) {
    if (rho.rows() != 8 || rho.cols() != 8) {
        throw InvalidArgument("partial_trace: expected an 8x8 operator");
    }
    if (keep.empty()) {
        throw InvalidArgument("partial_trace: keep set is empty");
    }
    for (int q : keep) {
        if (q < 1 || q > 3) {
            throw InvalidArgument("partial_trace: qubit index out of range");
        }
    }
    auto bit = [](std::size_t index, int qubit) { return (index >> (3 - qubit)) & 1U; };
    auto reduced_index = [&](std::size_t index) {
        std::size_t r = 0;
        for (int q : keep) {
            r = (r << 1) | bit(index, q);
        }
        return r;
    };
    auto traced_match = [&](std::size_t i, std::size_t j) {
        for (int q = 1; q <= 3; ++q) {
            if (!keep.contains(q) && bit(i, q) != bit(j, q)) {
                return false;
            }
        }
        return true;
    };
    const std::size_t dim = std::size_t{1} << keep.size();
    ComplexMatrix out(dim, dim);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            if (traced_match(i, j)) {
                out(reduced_index(i), reduced_index(j)) += rho(i, j);
            }
        }
    }
    return out;
}

double purity(const ComplexMatrix &rho) { return (rho * rho).trace().real(); }

int rank_from_singular_values(const SingularValues &sv, double threshold) {
    if (!(threshold > 0.0)) {
        throw InvalidArgument("rank threshold must be positive");
    }
    return static_cast<int>(std::count_if(sv.values.begin(), sv.values.end(),
                                          [&](double s) { return s > threshold; }));
}

} // namespace tricorr
