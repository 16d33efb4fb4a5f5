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

#include "tricorr/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

#include "tricorr/error.hpp"

namespace tricorr {
namespace {

using nlohmann::json;

constexpr double kNormSlack = 1e-6;
constexpr double kObservableSlack = 1.05;

json parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("top level: expected an object");
    }
    const auto it = doc.find("schema");
    if (it == doc.end()) {
        throw SchemaError("schema: missing");
    }
    if (!it->is_string() || it->get<std::string>() != kSchema) {
        throw SchemaError("schema: expected \"" + std::string(kSchema) + "\"");
    }
    return doc;
}

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    for (const auto &[key, value] : obj.items()) {
        if (!allowed.count(key)) {
            throw SchemaError(where + key + ": unexpected key");
        }
    }
}

const json &require(const json &obj, const std::string &key, const std::string &where = "") {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(where + key + ": missing");
    }
    return *it;
}

double number(const json &v, const std::string &name) {
    if (!v.is_number()) {
        throw SchemaError(name + ": expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw SchemaError(name + ": not finite");
    }
    return x;
}

int integer(const json &v, const std::string &name) {
    if (!v.is_number_integer()) {
        throw SchemaError(name + ": expected an integer");
    }
    return v.get<int>();
}

std::string text(const json &v, const std::string &name) {
    if (!v.is_string()) {
        throw SchemaError(name + ": expected a string");
    }
    return v.get<std::string>();
}

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(complex_pair(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

json gate_json(const Gate &g) {
    json out{{"kind", to_string(g.kind)}, {"target", g.target}};
    if (g.kind == GateKind::Rotation || g.kind == GateKind::ControlledRotation) {
        out["axis"] = to_string(g.axis);
        out["angle"] = g.angle;
    }
    if (g.kind == GateKind::Cnot || g.kind == GateKind::ControlledRotation) {
        out["control"] = g.control;
    }
    return out;
}

Gate gate_from_json(const json &g, const std::string &where) {
    if (!g.is_object()) {
        throw SchemaError(where + ": expected an object");
    }
    reject_unknown(g, {"kind", "axis", "angle", "control", "target"}, where + ".");
    const std::string kind = text(require(g, "kind", where + "."), where + ".kind");
    const int target = integer(require(g, "target", where + "."), where + ".target");
    auto axis = [&] {
        const std::string a = text(require(g, "axis", where + "."), where + ".axis");
        if (a == "x" || a == "X") return Axis::X;
        if (a == "y" || a == "Y") return Axis::Y;
        if (a == "z" || a == "Z") return Axis::Z;
        throw SchemaError(where + ".axis: expected x, y or z");
    };
    auto angle = [&] { return number(require(g, "angle", where + "."), where + ".angle"); };
    auto control = [&] { return integer(require(g, "control", where + "."), where + ".control"); };
    Gate out;
    try {
        if (kind == to_string(GateKind::Rotation)) {
            out = Gate::rotation(axis(), angle(), target);
        } else if (kind == to_string(GateKind::Hadamard)) {
            out = Gate::hadamard(target);
        } else if (kind == to_string(GateKind::Cnot)) {
            out = Gate::cnot(control(), target);
        } else if (kind == to_string(GateKind::ControlledRotation)) {
            out = Gate::controlled_rotation(axis(), angle(), control(), target);
        } else {
            throw SchemaError(where + ".kind: unknown gate kind \"" + kind + "\"");
        }
    } catch (const InvalidArgument &e) {
        throw SchemaError(where + ": " + e.what());
    }
    return out;
}

json circuit_json(const Circuit &c) {
    json gates = json::array();
    for (const auto &g : c.gates) {
        gates.push_back(gate_json(g));
    }
    return gates;
}

Circuit circuit_from_json(const json &gates, const std::string &where) {
    if (!gates.is_array()) {
        throw SchemaError(where + ": expected an array");
    }
    Circuit c;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        c.gates.push_back(gate_from_json(gates[i], where + "[" + std::to_string(i) + "]"));
    }
    return c;
}

json sv_json(const std::vector<double> &v) { return json(v); }

} // namespace

StateDocument parse_state(std::string_view text_in, bool renormalize) {
    const json doc = parse_document(text_in);
    reject_unknown(doc, {"schema", "amplitudes", "convention", "circuit"}, "");
    if (const auto it = doc.find("convention"); it != doc.end()) {
        if (text(*it, "convention") != "q1-msb") {
            throw SchemaError("convention: only \"q1-msb\" is supported");
        }
    }
    const json &amps = require(doc, "amplitudes");
    if (!amps.is_array() || amps.size() != 8) {
        throw SchemaError("amplitudes: expected 8 [re, im] pairs");
    }
    PureState::Amplitudes a{};
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        const std::string name = "amplitudes[" + std::to_string(i) + "]";
        const json &p = amps[i];
        if (!p.is_array() || p.size() != 2) {
            throw SchemaError(name + ": expected [re, im]");
        }
        a[i] = {number(p[0], name), number(p[1], name)};
        norm_sq += std::norm(a[i]);
    }
    if (!(norm_sq > 0.0)) {
        throw SchemaError("amplitudes: zero vector");
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormSlack && !renormalize) {
        throw SchemaError("amplitudes: norm " + std::to_string(std::sqrt(norm_sq)) +
                          " differs from 1 (use --renormalize)");
    }
    // Leave already-normalized input bit-identical.
    StateDocument out{std::abs(norm_sq - 1.0) <= 1e-14 ? PureState(a) : PureState::normalized(a),
                      std::nullopt};
    if (const auto it = doc.find("circuit"); it != doc.end()) {
        if (!it->is_object()) {
            throw SchemaError("circuit: expected an object");
        }
        reject_unknown(*it, {"gates", "fidelity_to_direct"}, "circuit.");
        CircuitProvenance prov;
        prov.circuit = circuit_from_json(require(*it, "gates", "circuit."), "circuit.gates");
        if (const auto f = it->find("fidelity_to_direct"); f != it->end()) {
            prov.fidelity_to_direct = number(*f, "circuit.fidelity_to_direct");
        }
        out.circuit = prov;
    }
    return out;
}

std::string format_state(const PureState &psi, const std::optional<CircuitProvenance> &circuit) {
    json amps = json::array();
    for (cplx z : psi.amplitudes()) {
        amps.push_back(complex_pair(z));
    }
    json doc{{"schema", kSchema}, {"convention", "q1-msb"}, {"amplitudes", amps}};
    if (circuit) {
        doc["circuit"] = {{"gates", circuit_json(circuit->circuit)},
                          {"fidelity_to_direct", circuit->fidelity_to_direct}};
    }
    return doc.dump(2) + "\n";
}

ObservableSet13 parse_observables(std::string_view text_in) {
    const json doc = parse_document(text_in);
    reject_unknown(doc, {"schema", "observables"}, "");
    const json &obs = require(doc, "observables");
    if (!obs.is_object()) {
        throw SchemaError("observables: expected an object");
    }
    const auto &keys = ObservableSet13::keys();
    for (const auto &[key, value] : obs.items()) {
        if (!ObservableSet13::index_of(key)) {
            throw SchemaError("observables." + key + ": unexpected key");
        }
    }
    std::array<double, ObservableSet13::kSize> v{};
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const std::string name = "observables." + std::string(keys[i]);
        const double x = number(require(obs, std::string(keys[i]), "observables."), name);
        if (std::abs(x) > kObservableSlack) {
            throw SchemaError(name + ": value " + std::to_string(x) + " outside [-1.05, 1.05]");
        }
        v[i] = std::clamp(x, -1.0, 1.0);
    }
    return ObservableSet13(v);
}

std::string format_observables(const ObservableSet13 &obs) {
    json o = json::object();
    const auto &keys = ObservableSet13::keys();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        o[std::string(keys[i])] = obs.value(i);
    }
    return json{{"schema", kSchema}, {"observables", o}}.dump(2) + "\n";
}

Circuit parse_circuit(std::string_view text_in) {
    const json doc = parse_document(text_in);
    reject_unknown(doc, {"schema", "gates"}, "");
    return circuit_from_json(require(doc, "gates"), "gates");
}

std::string format_circuit(const Circuit &c) {
    return json{{"schema", kSchema}, {"gates", circuit_json(c)}}.dump(2) + "\n";
}

DocumentKind detect_document(std::string_view text_in) {
    const json doc = parse_document(text_in);
    const bool state = doc.contains("amplitudes");
    const bool obs = doc.contains("observables");
    if (state == obs) {
        throw SchemaError(state ? "amplitudes/observables: both present"
                                : "amplitudes/observables: neither present");
    }
    return state ? DocumentKind::State : DocumentKind::Observables;
}

std::string format_classification(const Classification &c, const ToleranceConfig &tol,
                                  const EntanglementReport &e) {
    json doc{{"schema", kSchema},
             {"label", to_string(c.label)},
             {"ranks", {c.ranks.r1, c.ranks.r2, c.ranks.r3}},
             {"singular_values",
              {sv_json(c.singular_values[0]), sv_json(c.singular_values[1]),
               sv_json(c.singular_values[2])}},
             {"tolerances",
              {{"mode", tol.mode == Mode::Exact ? "exact" : "noisy"},
               {"rank_threshold", tol.rank_threshold},
               {"exact_threshold", tol.exact_threshold},
               {"purity_epsilon", tol.purity_epsilon}}},
             {"canonical_violation", c.canonical_violation},
             {"q_global", e.q_global},
             {"c_total_sq", e.c_total_sq},
             {"c_sq", e.c_sq ? json(*e.c_sq) : json(nullptr)}};
    return doc.dump(2) + "\n";
}

std::string format_canonical(const CanonicalResult &r) {
    json u = json::array();
    for (const auto &m : r.local_unitaries) {
        u.push_back(matrix_json(m));
    }
    json doc{{"schema", kSchema},
             {"canonical", {{"a", r.form.a}, {"theta", r.form.theta}}},
             {"local_unitaries", u},
             {"residual", r.residual}};
    return doc.dump(2) + "\n";
}

std::string format_entanglement(const EntanglementReport &e, const std::optional<BoundCheck> &bound) {
    json doc{{"schema", kSchema},
             {"q_global", e.q_global},
             {"c_total_sq", e.c_total_sq},
             {"c_sq", e.c_sq ? json(*e.c_sq) : json(nullptr)},
             {"clamped", e.clamped}};
    if (bound) {
        doc["bound_check"] = {{"pass", bound->pass}, {"bound", bound->bound}, {"detail", bound->detail}};
    }
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << data;
    if (!out) {
        throw Error("write failed for " + path);
    }
}

} // namespace tricorr
