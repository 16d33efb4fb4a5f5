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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "tricorr/circuits.hpp"
#include "tricorr/error.hpp"
#include "tricorr/rng.hpp"

namespace tricorr {
namespace {

double state_fidelity(const PureState &a, const PureState &b) { return std::norm(a.inner(b)); }

TEST(Gate, Validation) {
    EXPECT_THROW(Gate::cnot(1, 1).validate(), InvalidArgument);
    EXPECT_THROW(Gate::hadamard(4).validate(), InvalidArgument);
    EXPECT_THROW(Gate::rotation(Axis::X, std::nan(""), 1).validate(), InvalidArgument);
    EXPECT_THROW(Gate::controlled_rotation(Axis::Y, 1.0, 0, 2).validate(), InvalidArgument);
    EXPECT_NO_THROW(Gate::controlled_rotation(Axis::Y, 1.0, 3, 2).validate());
}

TEST(Apply, TruthTables) {
    const PureState psi = PureState::basis(3);
    EXPECT_EQ(apply(Circuit{}, psi).amplitudes(), psi.amplitudes());
    const PureState out = apply(Circuit{{Gate::cnot(1, 2)}}, PureState::basis(4));
    EXPECT_LT(std::abs(out[6] - 1.0), 1e-15);
    const PureState ghz = apply(Circuit{{Gate::hadamard(1), Gate::cnot(1, 2), Gate::cnot(1, 3)}}, PureState{});
    EXPECT_NEAR(state_fidelity(ghz, standard_state(StateClass::Ghz)), 1.0, 1e-12);
    EXPECT_LT(std::abs(ghz[0] - 1.0 / std::sqrt(2.0)), 1e-12);
}

TEST(Rotation, PulseSense) {
    // R_y(-pi/2)|0> = (|0> + |1>)/sqrt 2.
    const auto r = rotation_matrix(Axis::Y, -std::numbers::pi / 2);
    EXPECT_NEAR(r(0, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(r(1, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
    // R_x(pi) = i X.
    const auto x = rotation_matrix(Axis::X, std::numbers::pi);
    EXPECT_LT(std::abs(x(0, 1) - cplx(0.0, 1.0)), 1e-15);
}

TEST(PreparationCircuit, Targets) {
    const double h = 1.0 / std::sqrt(2.0);
    const PureState bs2 = apply(preparation_circuit(StateClass::Bs2), PureState{});
    EXPECT_LT(std::abs(bs2[0] - h) + std::abs(bs2[5] - h), 1e-12);
    const PureState bs1 = apply(preparation_circuit(StateClass::Bs1), PureState{});
    EXPECT_LT(std::abs(bs1[0] - h) + std::abs(bs1[3] - h), 1e-12);
    for (auto c : {StateClass::Ghz, StateClass::W, StateClass::Bs1, StateClass::Bs2, StateClass::Bs3,
                   StateClass::Sep}) {
        EXPECT_NEAR(state_fidelity(apply(preparation_circuit(c), PureState{}), standard_state(c)), 1.0, 1e-9)
            << to_string(c);
    }
    const PureState w = apply(preparation_circuit(StateClass::W), PureState{});
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_LT(std::abs(w[i] - standard_state(StateClass::W)[i]), 1e-9);
    }
    EXPECT_THROW(preparation_circuit(StateClass::Haar), InvalidArgument);
}

Gate random_gate(Rng &rng) {
    const int kind = static_cast<int>(rng.next_u64() % 4);
    const int t = 1 + static_cast<int>(rng.next_u64() % 3);
    const int c = 1 + (t + static_cast<int>(rng.next_u64() % 2)) % 3;
    const Axis axis = static_cast<Axis>(rng.next_u64() % 3);
    const double angle = rng.uniform(-7.0, 7.0);
    switch (kind) {
    case 0:
        return Gate::rotation(axis, angle, t);
    case 1:
        return Gate::hadamard(t);
    case 2:
        return Gate::cnot(c, t);
    default:
        return Gate::controlled_rotation(axis, angle, c, t);
    }
}

TEST(Gate, EmbeddingsAreUnitary) {
    Rng rng(9);
    for (int i = 0; i < 500; ++i) {
        const Gate g = random_gate(rng);
        const auto u = gate_unitary(g);
        EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(8)), 1e-12);
    }
}

TEST(Apply, PreservesNorm) {
    Rng rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        Circuit c;
        const int len = static_cast<int>(rng.next_u64() % 51);
        for (int i = 0; i < len; ++i) {
            c.gates.push_back(random_gate(rng));
        }
        EXPECT_NEAR(apply(c, random_state(StateClass::Haar, static_cast<std::uint64_t>(trial))).norm(), 1.0, 1e-10);
    }
}

} // namespace
} // namespace tricorr
