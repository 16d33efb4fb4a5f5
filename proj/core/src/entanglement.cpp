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

#include "tricorr/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tricorr/error.hpp"
#include "tricorr/linalg.hpp"

namespace tricorr {
namespace {

constexpr double kLowClamp = -0.05;
constexpr double kHighClamp = 3.15;

} // namespace

EntanglementReport concurrence_oracle(const PureState &psi) {
    const ComplexMatrix rho = ComplexMatrix::outer(psi.span());
    std::array<double, 3> c{};
    for (int j = 0; j < 3; ++j) {
        c[static_cast<std::size_t>(j)] = std::max(0.0, 2.0 * (1.0 - purity(partial_trace(rho, {j + 1}))));
    }
    EntanglementReport r;
    r.c_sq = c;
    r.c_total_sq = c[0] + c[1] + c[2];
    r.q_global = r.c_total_sq / 3.0;
    return r;
}

double total_concurrence_sq(const ObservableSet13 &obs) {
    auto sq = [&](std::string_view k) {
        const double v = obs[k];
        return v * v;
    };
    double s = 4.0 * sq("XXX") + 2.0 * sq("XXZ") + 2.0 * sq("XZX") + 2.0 * sq("ZXY");
    for (std::string_view k : {"XZZ", "YZZ", "ZXX", "ZXZ", "ZYY", "ZYZ", "ZZX", "ZZY", "ZZZ"}) {
        s += sq(k);
    }
    return s - 1.0;
}

EntanglementReport concurrence_from_observables(const ObservableSet13 &obs) {
    double c2 = total_concurrence_sq(obs);
    if (c2 < kLowClamp || c2 > kHighClamp) {
        throw InconsistentData("squared total concurrence " + std::to_string(c2) +
                               " outside [-0.05, 3.15]; observables are inconsistent");
    }
    EntanglementReport r;
    if (c2 < 0.0 || c2 > 3.0) {
        r.clamped = true;
        c2 = std::clamp(c2, 0.0, 3.0);
    }
    r.c_total_sq = c2;
    r.q_global = c2 / 3.0;
    return r;
}

BoundCheck bound_check(const EntanglementReport &report, ClassLabel claimed, Mode mode) {
    const double eps = mode == Mode::Exact ? 1e-6 : 0.1;
    const double q = report.q_global;
    BoundCheck out;
    std::ostringstream detail;
    if (claimed == ClassLabel::SEP) {
        out.bound = 0.0;
        out.pass = q < eps;
        detail << "SEP requires q < " << eps;
    } else if (claimed == ClassLabel::BS1 || claimed == ClassLabel::BS2 ||
               claimed == ClassLabel::BS3) {
        out.bound = 2.0 / 3.0;
        out.pass = q <= out.bound + eps;
        detail << to_string(claimed) << " requires q <= 2/3 + " << eps;
    } else {
        out.bound = 1.0;
        out.pass = q <= 1.0 + eps;
        detail << "q <= 1 + " << eps;
    }
    detail << "; q = " << q << (out.pass ? " (pass)" : " (fail)");
    out.detail = detail.str();
    return out;
}

} // namespace tricorr
