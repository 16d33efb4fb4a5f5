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
#include <vector>

#include "tricorr/canonical.hpp"
#include "tricorr/correlations.hpp"
#include "tricorr/states.hpp"

namespace tricorr {

enum class Mode { Exact, Noisy };

struct ToleranceConfig {
    /// Singular values at or below this count as zero.
    double rank_threshold = 1e-10;
    double exact_threshold = 1e-10;
    /// A state is pure when its top eigenvalue exceeds 1 - purity_epsilon;
    /// a marginal is pure when its purity exceeds 1 - purity_epsilon.
    double purity_epsilon = 1e-7;
    Mode mode = Mode::Exact;

    static ToleranceConfig exact();
    /// rank_threshold 0.09, purity_epsilon 0.02.
    static ToleranceConfig noisy();

    /// Throws InvalidArgument unless all positive and rank >= exact.
    void validate() const;
};

struct RankTriple {
    int r1 = 0;
    int r2 = 0;
    int r3 = 0;
    friend bool operator==(const RankTriple &, const RankTriple &) = default;
};

enum class ClassLabel { GE, BS1, BS2, BS3, SEP, Unclassified };

std::string to_string(ClassLabel l);
std::optional<ClassLabel> parse_class_label(std::string_view text);

/// Label the partial-trace oracle is expected to return for a constructed family.
ClassLabel expected_label(StateClass c);

/// Number of singular values strictly greater than `threshold`.
int numerical_rank(const Unfolding &m, double threshold);

/// (2,2,2) and (3,3,3) -> GE; (1,3,3) -> BS-1; (3,1,3) -> BS-2;
/// (3,3,1) -> BS-3; (1,1,1) -> SEP; anything else -> Unclassified.
ClassLabel classify_ranks(const RankTriple &r);

struct Classification {
    ClassLabel label = ClassLabel::Unclassified;
    RankTriple ranks;
    CorrelationMatrices matrices;
    std::array<std::vector<double>, 3> singular_values;
    ObservableSet13 observables;
    /// State path: max violation of the canonical-basis zeros/relations after
    /// canonicalization. Observable path: distance of the implied squared
    /// total concurrence from its physical range [0, 3].
    double canonical_violation = 0.0;
};

/// Shared tail of the pipeline: complete, matricize, rank, look up.
Classification classify_observables(const ObservableSet13 &obs, const ToleranceConfig &tol);

enum class StateModel {
    /// Top eigenvalue must exceed 1 - purity_epsilon.
    Pure,
    /// (1 - eps)/8 * I + eps |psi><psi|: the seven lower eigenvalues must be
    /// degenerate within purity_epsilon. Ranks are taken on the raw
    /// correlations, so the caller scales rank_threshold by eps.
    PseudoPure,
};

/// Canonicalizes the dominant eigenvector, rotates rho into that frame,
/// measures the thirteen observables, and classifies.
/// Throws InvalidArgument when rho does not fit `model`.
Classification classify_state(const DensityOperator &rho, const ToleranceConfig &tol,
                              StateModel model = StateModel::Pure);
Classification classify_state(const PureState &psi, const ToleranceConfig &tol);

/// Purities of the three single-qubit marginals, qubit order 1, 2, 3.
std::array<double, 3> marginal_purities(const PureState &psi);

/// Partial-trace classifier: all marginals pure -> SEP; exactly marginal k
/// pure -> BS-k; none -> GE; exactly two -> Unclassified.
ClassLabel oracle_classify(const PureState &psi, const ToleranceConfig &tol);

} // namespace tricorr
