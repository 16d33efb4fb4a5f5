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

#include <gtest/gtest.h>

#include "support.hpp"
#include "tricorr/classify.hpp"
#include "tricorr/correlations.hpp"
#include "tricorr/error.hpp"
#include "tricorr/linalg.hpp"

namespace tricorr {
namespace {

constexpr std::array<char, 3> kAxes{'X', 'Y', 'Z'};

ComplexMatrix rho_of(const PureState &psi) { return ComplexMatrix::outer(psi.span()); }

TEST(PauliString, ParseAndPrint) {
    const auto p = PauliString::parse("XIZ");
    ASSERT_TRUE(p);
    EXPECT_EQ(p->str(), "XIZ");
    EXPECT_FALSE(PauliString::parse("XX"));
    EXPECT_FALSE(PauliString::parse("XQZ"));
}

TEST(Expectation, Examples) {
    EXPECT_NEAR(expectation(rho_of(PureState::basis(0)), *PauliString::parse("ZZZ")), 1.0, 1e-15);
    const auto ghz = rho_of(standard_state(StateClass::Ghz));
    EXPECT_NEAR(expectation(ghz, *PauliString::parse("XXX")), 1.0, 1e-15);
    EXPECT_NEAR(expectation(ghz, *PauliString::parse("ZZI")), 1.0, 1e-15);
    EXPECT_NEAR(expectation(ghz, *PauliString::parse("IZZ")), 1.0, 1e-15);
}

TEST(Expectation, RejectsNonHermitianInput) {
    ComplexMatrix m(8, 8);
    m(0, 7) = cplx{0.0, 1.0};
    EXPECT_THROW(expectation(m, *PauliString::parse("XXX")), InconsistentData);
}

TEST(Expectation, MatchesBitLevelOracle) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const PureState psi = testing::random_pure(s);
        const auto rho = rho_of(psi);
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                for (int c = 0; c < 4; ++c) {
                    const PauliString p{{static_cast<Pauli>(a), static_cast<Pauli>(b), static_cast<Pauli>(c)}};
                    const auto ref = testing::reference_expectation(psi, {a, b, c});
                    EXPECT_NEAR(ref.imag(), 0.0, 1e-14);
                    EXPECT_NEAR(expectation(rho, p), ref.real(), 1e-14) << p.str();
                }
            }
        }
    }
}

TEST(Decomposition, Examples) {
    const auto mixed = full_decomposition(ComplexMatrix::identity(8) * cplx{0.125});
    EXPECT_EQ(mixed.max_abs(), 0.0);
    EXPECT_NEAR(full_decomposition(rho_of(standard_state(StateClass::Ghz))).three_body.at("ZZZ"), 0.0, 1e-15);
    EXPECT_NEAR(full_decomposition(rho_of(PureState::basis(7))).one_body[0][2], -1.0, 1e-15);
}

TEST(Decomposition, ReconstructsState) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto rho = rho_of(testing::random_pure(s));
        EXPECT_LT(max_abs_diff(full_decomposition(rho).reconstruct(), rho), 1e-9);
    }
}

TEST(Measure13, Examples) {
    const auto ghz = measure13(standard_state(StateClass::Ghz));
    EXPECT_NEAR(ghz["XXX"], 1.0, 1e-15);
    EXPECT_NEAR(ghz["ZZZ"], 0.0, 1e-15);
    EXPECT_NEAR(measure13(standard_state(StateClass::Sep))["ZZZ"], -1.0, 1e-15);
    const PureState w = standard_state(StateClass::W);
    EXPECT_NEAR(measure13(w)["XZZ"], testing::reference_expectation(w, {1, 3, 3}).real(), 1e-15);
}

TEST(ObservableSet13, RangeAndKeys) {
    std::array<double, 13> v{};
    v[0] = 1.0 + 1e-10;
    EXPECT_NO_THROW(ObservableSet13{v});
    v[0] = 1.01;
    EXPECT_THROW(ObservableSet13{v}, InvalidArgument);
    EXPECT_EQ(ObservableSet13::keys().size(), 13u);
    EXPECT_EQ(ObservableSet13::index_of("ZZZ"), 12u);
    EXPECT_FALSE(ObservableSet13::index_of("YYY"));
}

TEST(CompleteTensor, Examples) {
    std::array<double, 13> v{};
    v[0] = 1.0;
    const CorrelationTensor t = complete_tensor(ObservableSet13(v));
    EXPECT_EQ(t.at("XYY"), -1.0);
    EXPECT_EQ(t.at("YXY"), -1.0);
    EXPECT_EQ(t.at("YYX"), -1.0);
    for (auto z : {"XXY", "XYX", "XYZ", "XZY", "YXX", "YXZ", "YYY", "YZX"}) {
        EXPECT_EQ(t.at(z), 0.0);
    }
    const CorrelationTensor zero = complete_tensor(ObservableSet13{});
    for (double x : zero.data()) {
        EXPECT_EQ(x, 0.0);
    }
}

TEST(CompleteTensor, ThirteenObservablesSufficeInCanonicalBasis) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const PureState psi = from_canonical(testing::random_canonical(s));
        const CorrelationTensor direct = full_decomposition(rho_of(psi)).three_body;
        EXPECT_LT(complete_tensor(measure13(psi)).max_abs_diff(direct), 1e-9) << "seed " << s;
        for (double x : direct.data()) {
            EXPECT_LE(std::abs(x), 1.0 + 1e-9);
        }
    }
}

TEST(CanonicalBasisCheck, Examples) {
    EXPECT_TRUE(canonical_basis_check(rho_of(standard_state(StateClass::Ghz)), 1e-10).pass);
    EXPECT_TRUE(canonical_basis_check(ComplexMatrix::identity(8) * cplx{0.125}, 1e-10).pass);
    int failures = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        failures += canonical_basis_check(rho_of(testing::random_pure(s)), 1e-6).pass ? 0 : 1;
    }
    EXPECT_EQ(failures, 100);
}

TEST(Matricize, Layout) {
    CorrelationTensor t;
    t(0, 1, 2) = 1.0;
    const CorrelationMatrices m = matricize(t);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 9; ++c) {
            EXPECT_EQ(m.m[0](r, c), (r == 0 && c == 5) ? 1.0 : 0.0);
            EXPECT_EQ(m.m[1](r, c), (r == 1 && c == 2) ? 1.0 : 0.0);
            EXPECT_EQ(m.m[2](r, c), (r == 2 && c == 1) ? 1.0 : 0.0);
        }
    }
    for (const auto &u : matricize(CorrelationTensor{}).m) {
        for (double x : u.entries) {
            EXPECT_EQ(x, 0.0);
        }
    }
}

TEST(Matricize, EntriesFollowTensorIndices) {
    const CorrelationTensor t = three_body_tensor(rho_of(testing::random_pure(3)));
    const CorrelationMatrices m = matricize(t);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                const std::string key{kAxes[static_cast<std::size_t>(i)], kAxes[static_cast<std::size_t>(j)],
                                      kAxes[static_cast<std::size_t>(k)]};
                EXPECT_EQ(m.m[0](static_cast<std::size_t>(i), static_cast<std::size_t>(3 * j + k)), t.at(key));
                EXPECT_EQ(m.m[1](static_cast<std::size_t>(j), static_cast<std::size_t>(3 * i + k)), t.at(key));
                EXPECT_EQ(m.m[2](static_cast<std::size_t>(k), static_cast<std::size_t>(3 * i + j)), t.at(key));
            }
        }
    }
}

TEST(Matricize, OrientationDoesNotChangeRank) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const PureState psi = s % 2 ? testing::random_pure(s) : random_state(StateClass::Bs2, s);
        const CorrelationMatrices m = matricize(three_body_tensor(rho_of(psi)));
        for (const auto &u : m.m) {
            const auto c = u.to_complex();
            EXPECT_EQ(rank_from_singular_values(singular_values(c), 1e-10),
                      rank_from_singular_values(singular_values(c.transpose()), 1e-10));
        }
    }
}

} // namespace
} // namespace tricorr
