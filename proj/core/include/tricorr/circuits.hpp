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

#include <string>
#include <vector>

#include "tricorr/matrix.hpp"
#include "tricorr/states.hpp"

namespace tricorr {

enum class GateKind { Rotation, Hadamard, Cnot, ControlledRotation };
enum class Axis { X, Y, Z };

/// Qubits are 1-based. Rotations follow the NMR pulse sense
/// R_axis(angle) = exp(+i * angle * sigma_axis / 2), so a y pulse of -pi/2
/// takes |0> to (|0> + |1>)/sqrt(2).
struct Gate {
    GateKind kind = GateKind::Hadamard;
    Axis axis = Axis::X;
    double angle = 0.0;
    int control = 0;
    int target = 1;

    static Gate rotation(Axis axis, double angle, int target);
    static Gate hadamard(int target);
    static Gate cnot(int control, int target);
    static Gate controlled_rotation(Axis axis, double angle, int control, int target);

    /// Throws InvalidArgument on a bad qubit index, control == target or a
    /// non-finite angle.
    void validate() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

struct Circuit {
    std::vector<Gate> gates;
    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// 2x2 rotation matrix for the convention above.
ComplexMatrix rotation_matrix(Axis axis, double angle);

/// 8x8 unitary of one gate on three qubits.
ComplexMatrix gate_unitary(const Gate &g);

/// Applies the gates in order.
PureState apply(const Circuit &circuit, const PureState &input);

/// Preparation circuits from |000> for each family:
///   BS-1: R_y(-pi/2) on 2, CNOT 2->3
///   BS-2: H on 1, CNOT 1->3
///   BS-3: H on 1, CNOT 1->2, R_x(pi) on 1
///   SEP:  R_y(pi) on 1, 2, 3
///   GHZ:  H on 1, CNOT 1->2, CNOT 1->3
///   W:    R_y(-2a) on 1, C1-R_y(-2b) on 2, CNOT 1->2, C2-R_y(-2c) on 3,
///         CNOT 1->2 with a = pi/3, b = asin(1/sqrt 3), c = pi/4.
/// Throws InvalidArgument for Haar.
Circuit preparation_circuit(StateClass c);

std::string to_string(Axis a);
std::string to_string(GateKind k);

} // namespace tricorr
