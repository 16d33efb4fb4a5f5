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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tricorr/classify.hpp"
#include "tricorr/noise.hpp"
#include "tricorr/states.hpp"

namespace tricorr {

struct BatchConfig {
    int per_class = 20;
    std::vector<StateClass> classes{StateClass::Sep, StateClass::Bs1, StateClass::Bs2,
                                    StateClass::Bs3, StateClass::Ghz, StateClass::W};
    NoiseConfig noise;
    ToleranceConfig tolerances;
    std::uint64_t seed = 0;

    void validate() const;
};

/// {"schema", "per_class", "classes", "seed", "noise": {...}, "tolerances": {...}}.
/// Missing blocks keep their defaults; "tolerances.mode" picks the preset the
/// other tolerance keys override.
BatchConfig parse_batch_config(std::string_view text);

/// Simulated measurement of one state: canonicalize the ideal state, build
/// eps * ((1 - m)|psi><psi| + m I/8) + (1 - eps) I/8, rotate it into the
/// canonical frame, measure the thirteen observables, divide out eps and add
/// Gaussian noise.
struct Measurement {
    ObservableSet13 observables;
    /// Fidelity of the prepared density operator against |psi><psi|.
    double fidelity = 1.0;
};
Measurement simulate_measurement(const PureState &psi, const NoiseConfig &noise,
                                 std::uint64_t noise_seed);

struct BatchRow {
    std::string id;
    StateClass constructed = StateClass::Haar;
    double fidelity = 1.0;
    RankTriple ranks;
    ClassLabel label = ClassLabel::Unclassified;
    double q_global = 0.0;
    ClassLabel oracle = ClassLabel::Unclassified;
    bool agree = false;
    /// Empty unless the observables were rejected as inconsistent.
    std::string error;
};

struct BatchResult {
    std::vector<BatchRow> rows;
    int agreements = 0;
    double accuracy() const;
};

/// Rows follow (class, index) order whatever the thread count; 0 threads means
/// hardware concurrency.
BatchResult run_batch(const BatchConfig &cfg, unsigned threads = 0);

/// '#' metadata lines, header, one row per state, then '# summary,...'.
std::string batch_csv(const BatchConfig &cfg, const BatchResult &result);

struct ReportInput {
    std::string id;
    PureState state;
};

struct ReportRow {
    std::string id;
    double q_theory = 0.0;
    /// NaN when the noisy observables were rejected.
    double q_noisy = 0.0;
};

std::vector<ReportRow> run_report(const std::vector<ReportInput> &inputs, const NoiseConfig &noise);
std::string report_csv(const NoiseConfig &noise, const std::vector<ReportRow> &rows);

} // namespace tricorr
