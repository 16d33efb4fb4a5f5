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

#include "tricorr/classify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "tricorr/entanglement.hpp"
#include "tricorr/error.hpp"
#include "tricorr/linalg.hpp"

namespace tricorr {
namespace {

Classification classify_completed(const ObservableSet13 &obs, const ToleranceConfig &tol) {
    Classification out;
    out.observables = obs;
    out.matrices = matricize(complete_tensor(obs));
    std::array<int, 3> r{};
    for (std::size_t i = 0; i < 3; ++i) {
        out.singular_values[i] = singular_values(out.matrices.m[i].to_complex()).values;
        r[i] = rank_from_singular_values(SingularValues{out.singular_values[i]},
                                         tol.rank_threshold);
    }
    out.ranks = {r[0], r[1], r[2]};
    out.label = classify_ranks(out.ranks);
    return out;
}

} // namespace

ToleranceConfig ToleranceConfig::exact() { return {}; }

ToleranceConfig ToleranceConfig::noisy() {
    ToleranceConfig t;
    t.rank_threshold = 0.09;
    t.purity_epsilon = 0.02;
    t.mode = Mode::Noisy;
    return t;
}

void ToleranceConfig::validate() const {
    if (!(rank_threshold > 0.0) || !(exact_threshold > 0.0) || !(purity_epsilon > 0.0)) {
        throw InvalidArgument("ToleranceConfig: tolerances must be positive");
    }
    if (rank_threshold < exact_threshold) {
        throw InvalidArgument("ToleranceConfig: rank_threshold below exact_threshold");
    }
}

std::string to_string(ClassLabel l) {
    switch (l) {
    case ClassLabel::GE:
        return "GE";
    case ClassLabel::BS1:
        return "BS-1";
    case ClassLabel::BS2:
        return "BS-2";
    case ClassLabel::BS3:
        return "BS-3";
    case ClassLabel::SEP:
        return "SEP";
    case ClassLabel::Unclassified:
        return "UNCLASSIFIED";
    }
    return "?";
}

std::optional<ClassLabel> parse_class_label(std::string_view text) {
    std::string t;
    for (char ch : text) {
        if (ch != '-' && ch != '_') {
            t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
        }
    }
    if (t == "GE") return ClassLabel::GE;
    if (t == "BS1") return ClassLabel::BS1;
    if (t == "BS2") return ClassLabel::BS2;
    if (t == "BS3") return ClassLabel::BS3;
    if (t == "SEP") return ClassLabel::SEP;
    if (t == "UNCLASSIFIED") return ClassLabel::Unclassified;
    return std::nullopt;
}

ClassLabel expected_label(StateClass c) {
    switch (c) {
    case StateClass::Bs1:
        return ClassLabel::BS1;
    case StateClass::Bs2:
        return ClassLabel::BS2;
    case StateClass::Bs3:
        return ClassLabel::BS3;
    case StateClass::Sep:
        return ClassLabel::SEP;
    case StateClass::Ghz:
    case StateClass::W:
    case StateClass::Haar:
        return ClassLabel::GE;
    }
    return ClassLabel::Unclassified;
}

int numerical_rank(const Unfolding &m, double threshold) {
    return rank_from_singular_values(singular_values(m.to_complex()), threshold);
}

ClassLabel classify_ranks(const RankTriple &r) {
    if ((r.r1 == 2 && r.r2 == 2 && r.r3 == 2) || (r.r1 == 3 && r.r2 == 3 && r.r3 == 3)) {
        return ClassLabel::GE;
    }
    if (r.r1 == 1 && r.r2 == 3 && r.r3 == 3) {
        return ClassLabel::BS1;
    }
    if (r.r1 == 3 && r.r2 == 1 && r.r3 == 3) {
        return ClassLabel::BS2;
    }
    if (r.r1 == 3 && r.r2 == 3 && r.r3 == 1) {
        return ClassLabel::BS3;
    }
    if (r.r1 == 1 && r.r2 == 1 && r.r3 == 1) {
        return ClassLabel::SEP;
    }
    return ClassLabel::Unclassified;
}

Classification classify_observables(const ObservableSet13 &obs, const ToleranceConfig &tol) {
    tol.validate();
    const double c2 = total_concurrence_sq(obs);
    const double violation = std::max({0.0, -c2, c2 - 3.0});
    if (violation > 10.0 * tol.rank_threshold) {
        throw InconsistentData("observables imply a squared total concurrence of " +
                               std::to_string(c2) +
                               ", outside [0, 3]; data does not fit a canonical-basis pure state");
    }
    Classification out = classify_completed(obs, tol);
    out.canonical_violation = violation;
    return out;
}

Classification classify_state(const DensityOperator &rho, const ToleranceConfig &tol,
                              StateModel model) {
    tol.validate();
    const Eigensystem eig = hermitian_eigensystem(rho.matrix());
    const double top = eig.values.back();
    if (model == StateModel::Pure) {
        if (!(top > 1.0 - tol.purity_epsilon)) {
            throw InvalidArgument("classify_state: state is not pure (largest eigenvalue " +
                                  std::to_string(top) + ")");
        }
    } else {
        const double lo = eig.values.front();
        const double hi = eig.values[6];
        if (hi - lo > tol.purity_epsilon || !(top - hi > tol.purity_epsilon)) {
            throw InvalidArgument(
                "classify_state: spectrum is not of pseudo-pure form (one raised eigenvalue "
                "over a degenerate background)");
        }
    }
    PureState::Amplitudes a{};
    for (std::size_t r = 0; r < 8; ++r) {
        a[r] = eig.vectors(r, 7);
    }
    const CanonicalResult canon = canonicalize(PureState::normalized(a));
    const auto &u = canon.local_unitaries;
    const ComplexMatrix full = kron(kron(u[0], u[1]), u[2]);
    const ComplexMatrix rotated = full * rho.matrix() * full.adjoint();

    Classification out = classify_completed(measure13(rotated), tol);
    out.canonical_violation = canonical_basis_check(rotated, tol.rank_threshold).max_violation;
    return out;
}

Classification classify_state(const PureState &psi, const ToleranceConfig &tol) {
    return classify_state(DensityOperator::from_pure(psi), tol);
}

std::array<double, 3> marginal_purities(const PureState &psi) {
    const ComplexMatrix rho = ComplexMatrix::outer(psi.span());
    return {purity(partial_trace(rho, {1})), purity(partial_trace(rho, {2})),
            purity(partial_trace(rho, {3}))};
}

ClassLabel oracle_classify(const PureState &psi, const ToleranceConfig &tol) {
    const auto p = marginal_purities(psi);
    std::array<bool, 3> pure{};
    int count = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        pure[k] = p[k] > 1.0 - tol.purity_epsilon;
        count += pure[k] ? 1 : 0;
    }
    switch (count) {
    case 3:
        return ClassLabel::SEP;
    case 1:
        return pure[0] ? ClassLabel::BS1 : (pure[1] ? ClassLabel::BS2 : ClassLabel::BS3);
    case 0:
        return ClassLabel::GE;
    default:
        return ClassLabel::Unclassified;
    }
}

} // namespace tricorr
