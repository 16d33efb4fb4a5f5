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
#include <sstream>

#include <gtest/gtest.h>

#include "tricorr/error.hpp"
#include "tricorr/experiment.hpp"

namespace tricorr {
namespace {

TEST(Batch, NoiselessAgreesEverywhere) {
    BatchConfig cfg;
    cfg.per_class = 20;
    cfg.seed = 11;
    const BatchResult r = run_batch(cfg);
    EXPECT_EQ(r.rows.size(), 120u);
    EXPECT_EQ(r.agreements, 120);
    EXPECT_EQ(r.accuracy(), 1.0);
    EXPECT_EQ(r.rows.front().id, "R1");
    EXPECT_EQ(r.rows.front().constructed, StateClass::Sep);
}

TEST(Batch, SingleSeparableRow) {
    BatchConfig cfg;
    cfg.per_class = 1;
    cfg.classes = {StateClass::Sep};
    const BatchResult r = run_batch(cfg);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0].label, ClassLabel::SEP);
}

TEST(Batch, OrderIndependentOfThreads) {
    BatchConfig cfg;
    cfg.per_class = 10;
    cfg.seed = 5;
    cfg.noise.sigma_obs = 0.03;
    cfg.tolerances = ToleranceConfig::noisy();
    EXPECT_EQ(batch_csv(cfg, run_batch(cfg, 1)), batch_csv(cfg, run_batch(cfg, 7)));
}

TEST(Batch, PseudoPureDoesNotChangeLabels) {
    BatchConfig cfg;
    cfg.per_class = 10;
    cfg.noise.epsilon_pps = 1e-5;
    EXPECT_EQ(run_batch(cfg).agreements, 60);
}

TEST(Batch, Csv) {
    BatchConfig cfg;
    cfg.per_class = 2;
    cfg.classes = {StateClass::Ghz, StateClass::Bs1};
    const std::string csv = batch_csv(cfg, run_batch(cfg));
    EXPECT_NE(csv.find("# schema=tricorr/1\n"), std::string::npos);
    EXPECT_NE(csv.find("# seed=0\n"), std::string::npos);
    EXPECT_NE(csv.find("# rank_threshold=1e-10\n"), std::string::npos);
    EXPECT_NE(csv.find("id,constructed,fidelity,r1,r2,r3,label,q_global,oracle,agree\n"), std::string::npos);
    EXPECT_NE(csv.find("\nR3,BS-1,1,1,3,3,BS-1,"), std::string::npos);
    EXPECT_NE(csv.find("# summary,agree=4,total=4,accuracy=1\n"), std::string::npos);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Batch, ConfigParsing) {
    const BatchConfig cfg = parse_batch_config(
        R"({"schema":"tricorr/1","per_class":3,"classes":["ghz","BS-2"],"seed":9,)"
        R"("noise":{"sigma_obs":0.03},"tolerances":{"mode":"noisy"}})");
    EXPECT_EQ(cfg.per_class, 3);
    EXPECT_EQ(cfg.classes, (std::vector<StateClass>{StateClass::Ghz, StateClass::Bs2}));
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.noise.seed, 9u);
    EXPECT_EQ(cfg.noise.sigma_obs, 0.03);
    EXPECT_EQ(cfg.tolerances.rank_threshold, 0.09);
    EXPECT_THROW(parse_batch_config(R"({"schema":"tricorr/1","classes":[]})"), SchemaError);
    EXPECT_THROW(parse_batch_config(R"({"schema":"tricorr/1","classes":["cluster"]})"), SchemaError);
    EXPECT_THROW(parse_batch_config(R"({"schema":"tricorr/1","noise":{"sigma":1}})"), SchemaError);
    EXPECT_THROW(parse_batch_config(R"({"per_class":1})"), SchemaError);
}

TEST(Report, StandardStates) {
    std::vector<ReportInput> in;
    for (auto c : {StateClass::Ghz, StateClass::W, StateClass::Bs1, StateClass::Bs2, StateClass::Bs3, StateClass::Sep}) {
        in.push_back({to_string(c), standard_state(c)});
    }
    const auto rows = run_report(in, NoiseConfig{});
    const std::array<double, 6> want{1.0, 0.5, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 0.0};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_NEAR(rows[i].q_theory, want[i], 1e-12);
        EXPECT_NEAR(rows[i].q_noisy, want[i], 1e-9);
    }
    EXPECT_NE(report_csv(NoiseConfig{}, rows).find("state_id,q_theory,q_noisy\nGHZ,1,1\n"), std::string::npos);
    EXPECT_THROW(run_report({}, NoiseConfig{}), InvalidArgument);
}

// sigma 0.02 on GHZ: the noisy global entanglement stays within 0.15 of 1
// in the large majority of seeds.
TEST(Report, GhzNoisyEstimate) {
    NoiseConfig noise;
    noise.sigma_obs = 0.02;
    int close = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        noise.seed = s;
        const auto rows = run_report({{"GHZ", standard_state(StateClass::Ghz)}}, noise);
        close += std::abs(rows[0].q_noisy - 1.0) <= 0.15 ? 1 : 0;
    }
    EXPECT_GE(close, 190);
}

} // namespace
} // namespace tricorr
