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

#include <optional>
#include <string>
#include <string_view>

#include "tricorr/canonical.hpp"
#include "tricorr/circuits.hpp"
#include "tricorr/classify.hpp"
#include "tricorr/correlations.hpp"
#include "tricorr/entanglement.hpp"
#include "tricorr/states.hpp"

// JSON file formats. Every document carries "schema": "tricorr/1"; readers
// throw SchemaError naming the offending key.

namespace tricorr {

inline constexpr std::string_view kSchema = "tricorr/1";

/// Optional provenance block written by circuit-based preparation.
struct CircuitProvenance {
    Circuit circuit;
    double fidelity_to_direct = 1.0;
};

struct StateDocument {
    PureState state;
    std::optional<CircuitProvenance> circuit;
};

/// {"schema", "amplitudes": [[re, im] x 8], "convention": "q1-msb"}.
/// Norms off by more than 1e-6 are rejected unless `renormalize`.
StateDocument parse_state(std::string_view text, bool renormalize = false);
std::string format_state(const PureState &psi,
                         const std::optional<CircuitProvenance> &circuit = std::nullopt);

/// {"schema", "observables": {13 keys}}. Extra or missing keys are rejected,
/// as are values outside [-1.05, 1.05]; values in the slack band are clamped.
ObservableSet13 parse_observables(std::string_view text);
std::string format_observables(const ObservableSet13 &obs);

/// {"schema", "gates": [{"kind", "axis", "angle", "control", "target"}]}.
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit &c);

enum class DocumentKind { State, Observables };

/// Decides from the top-level keys. Throws SchemaError if neither fits.
DocumentKind detect_document(std::string_view text);

std::string format_classification(const Classification &c, const ToleranceConfig &tol,
                                  const EntanglementReport &e);
std::string format_canonical(const CanonicalResult &r);
std::string format_entanglement(const EntanglementReport &e,
                                const std::optional<BoundCheck> &bound = std::nullopt);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view text);

} // namespace tricorr
