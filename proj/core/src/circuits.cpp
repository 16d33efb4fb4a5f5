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

#include "tricorr/circuits.hpp"

#include <cmath>
#include <numbers>

#include "tricorr/error.hpp"

namespace tricorr {
namespace {

const ComplexMatrix &pauli_for(Axis a) {
    switch (a) {
    case Axis::X:
        return pauli::X();
    case Axis::Y:
        return pauli::Y();
    case Axis::Z:
        return pauli::Z();
    }
    return pauli::Z();
}

// Embeds a single-qubit operator on `target`.
ComplexMatrix embed(const ComplexMatrix &op, int target) {
    const ComplexMatrix &id = pauli::I();
    switch (target) {
    case 1:
        return kron(kron(op, id), id);
    case 2:
        return kron(kron(id, op), id);
    default:
        return kron(kron(id, id), op);
    }
}

// |0><0|_control (x) I + |1><1|_control (x) op_target
ComplexMatrix controlled(const ComplexMatrix &op, int control, int target) {
    const ComplexMatrix p0{{1.0, 0.0}, {0.0, 0.0}};
    const ComplexMatrix p1{{0.0, 0.0}, {0.0, 1.0}};
    ComplexMatrix out(8, 8);
    auto factor = [&](int qubit, const ComplexMatrix &on_control, const ComplexMatrix &on_target) {
        if (qubit == control) {
            return on_control;
        }
        if (qubit == target) {
            return on_target;
        }
        return pauli::I();
    };
    auto term = [&](const ComplexMatrix &proj, const ComplexMatrix &t) {
        return kron(kron(factor(1, proj, t), factor(2, proj, t)), factor(3, proj, t));
    };
    out += term(p0, pauli::I());
    out += term(p1, op);
    return out;
}

} // namespace

Gate Gate::rotation(Axis axis, double angle, int target) {
    Gate g{GateKind::Rotation, axis, angle, 0, target};
    g.validate();
    return g;
}

Gate Gate::hadamard(int target) {
    Gate g{GateKind::Hadamard, Axis::X, 0.0, 0, target};
    g.validate();
    return g;
}

Gate Gate::cnot(int control, int target) {
    Gate g{GateKind::Cnot, Axis::X, 0.0, control, target};
    g.validate();
    return g;
}

Gate Gate::controlled_rotation(Axis axis, double angle, int control, int target) {
    Gate g{GateKind::ControlledRotation, axis, angle, control, target};
    g.validate();
    return g;
}

void Gate::validate() const {
    if (target < 1 || target > 3) {
        throw InvalidArgument("gate: target qubit must be 1, 2 or 3");
    }
    if (!std::isfinite(angle)) {
        throw InvalidArgument("gate: angle must be finite");
    }
    if (kind == GateKind::Cnot || kind == GateKind::ControlledRotation) {
        if (control < 1 || control > 3) {
            throw InvalidArgument("gate: control qubit must be 1, 2 or 3");
        }
        if (control == target) {
            throw InvalidArgument("gate: control and target coincide");
        }
    }
}

ComplexMatrix rotation_matrix(Axis axis, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    // exp(+i angle sigma / 2) = cos(angle/2) I + i sin(angle/2) sigma
    return c * pauli::I() + cplx{0.0, s} * pauli_for(axis);
}

ComplexMatrix gate_unitary(const Gate &g) {
    g.validate();
    switch (g.kind) {
    case GateKind::Rotation:
        return embed(rotation_matrix(g.axis, g.angle), g.target);
    case GateKind::Hadamard: {
        const double h = 1.0 / std::numbers::sqrt2;
        return embed(ComplexMatrix{{h, h}, {h, -h}}, g.target);
    }
    case GateKind::Cnot:
        return controlled(pauli::X(), g.control, g.target);
    case GateKind::ControlledRotation:
        return controlled(rotation_matrix(g.axis, g.angle), g.control, g.target);
    }
    throw InvalidArgument("gate: unknown kind");
}

PureState apply(const Circuit &circuit, const PureState &input) {
    std::vector<cplx> v(input.span().begin(), input.span().end());
    for (const auto &g : circuit.gates) {
        v = gate_unitary(g) * std::span<const cplx>(v);
    }
    PureState::Amplitudes a{};
    std::copy(v.begin(), v.end(), a.begin());
    return PureState(a);
}

Circuit preparation_circuit(StateClass c) {
    using std::numbers::pi;
    switch (c) {
    case StateClass::Bs1:
        return {{Gate::rotation(Axis::Y, -pi / 2.0, 2), Gate::cnot(2, 3)}};
    case StateClass::Bs2:
        return {{Gate::hadamard(1), Gate::cnot(1, 3)}};
    case StateClass::Bs3:
        return {{Gate::hadamard(1), Gate::cnot(1, 2), Gate::rotation(Axis::X, pi, 1)}};
    case StateClass::Sep:
        return {{Gate::rotation(Axis::Y, pi, 1), Gate::rotation(Axis::Y, pi, 2),
                 Gate::rotation(Axis::Y, pi, 3)}};
    case StateClass::Ghz:
        return {{Gate::hadamard(1), Gate::cnot(1, 2), Gate::cnot(1, 3)}};
    case StateClass::W: {
        const double alpha = pi / 3.0;
        const double beta = std::asin(1.0 / std::sqrt(3.0));
        const double gamma = pi / 4.0;
        return {{Gate::rotation(Axis::Y, -2.0 * alpha, 1),
                 Gate::controlled_rotation(Axis::Y, -2.0 * beta, 1, 2), Gate::cnot(1, 2),
                 Gate::controlled_rotation(Axis::Y, -2.0 * gamma, 2, 3), Gate::cnot(1, 2)}};
    }
    case StateClass::Haar:
        break;
    }
    throw InvalidArgument("preparation_circuit: no preparation circuit for " + to_string(c));
}

std::string to_string(Axis a) {
    switch (a) {
    case Axis::X:
        return "x";
    case Axis::Y:
        return "y";
    case Axis::Z:
        return "z";
    }
    return "?";
}

std::string to_string(GateKind k) {
    switch (k) {
    case GateKind::Rotation:
        return "rotation";
    case GateKind::Hadamard:
        return "hadamard";
    case GateKind::Cnot:
        return "cnot";
    case GateKind::ControlledRotation:
        return "controlled_rotation";
    }
    return "?";
}

} // namespace tricorr
