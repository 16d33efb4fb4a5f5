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

#include "tricorr/classify.hpp"
#include "tricorr/correlations.hpp"
#include "tricorr/states.hpp"

namespace tricorr {

struct EntanglementReport {
    /// Squared concurrence of each qubit against the rest. Only the
    /// partial-trace path fills this.
    std::optional<std::array<double, 3>> c_sq;
    double c_total_sq = 0.0;
    /// c_total_sq / 3.
    double q_global = 0.0;
    /// Set when a slightly negative (or above-range) total from noisy data
    /// was clamped.
    bool clamped = false;
};

/// C_j^2 = 2 (1 - tr rho_j^2) from the marginals.
EntanglementReport concurrence_oracle(const PureState &psi);

/// The nineteen listed correlations squared, minus one; the six entries that
/// are not measured come from the sign relations. Valid in the canonical
/// basis only. Totals in [-0.05, 0) or (3, 3.15] are clamped with
/// `clamped` set; anything further out throws InconsistentData.
EntanglementReport concurrence_from_observables(const ObservableSet13 &obs);

/// Raw squared total concurrence from the nineteen-term sum, no range checks.
double total_concurrence_sq(const ObservableSet13 &obs);

struct BoundCheck {
    bool pass = true;
    double bound = 1.0;
    std::string detail;
};

/// SEP: q < eps; BS-k: q <= 2/3 + eps; any label: q <= 1 + eps.
/// eps = 1e-6 in exact mode and 0.1 in noisy mode.
BoundCheck bound_check(const EntanglementReport &report, ClassLabel claimed, Mode mode);

} // namespace tricorr
