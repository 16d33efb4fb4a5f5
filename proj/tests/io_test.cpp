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
#include <string>

#include <gtest/gtest.h>

#include "tricorr/error.hpp"
#include "tricorr/io.hpp"

namespace tricorr {
namespace {

std::string expect_schema_error(const std::string &text, bool observables = false) {
    try {
        if (observables) {
            parse_observables(text);
        } else {
            parse_state(text);
        }
    } catch (const SchemaError &e) {
        return e.what();
    }
    ADD_FAILURE() << "no SchemaError for " << text;
    return {};
}

const char *kObsTail = R"("XXZ":0,"XZX":0,"ZXY":0,"XZZ":0,"YZZ":0,"ZXX":0,"ZXZ":0,"ZYY":0,"ZYZ":0,"ZZX":0,"ZZY":0,"ZZZ":-1)";

TEST(StateFile, RoundTrip) {
    for (auto c : {StateClass::Ghz, StateClass::W, StateClass::Bs3}) {
        const PureState psi = standard_state(c);
        EXPECT_EQ(parse_state(format_state(psi)).state.amplitudes(), psi.amplitudes());
    }
    const PureState r = random_state(StateClass::Haar, 3);
    EXPECT_EQ(parse_state(format_state(r)).state.amplitudes(), r.amplitudes());
}

TEST(StateFile, CircuitProvenanceRoundTrip) {
    const Circuit c = preparation_circuit(StateClass::W);
    const auto doc = parse_state(format_state(apply(c, PureState{}), CircuitProvenance{c, 1.0}));
    ASSERT_TRUE(doc.circuit);
    EXPECT_EQ(doc.circuit->circuit, c);
}

TEST(StateFile, Errors) {
    EXPECT_NE(expect_schema_error("{\"schema\":\"tricorr/1\",\"amplitudes\":[[1,0]").find("malformed"), std::string::npos);
    EXPECT_NE(expect_schema_error(R"({"amplitudes":[]})").find("schema"), std::string::npos);
    EXPECT_NE(expect_schema_error(R"({"schema":"tricorr/2"})").find("schema"), std::string::npos);
    EXPECT_NE(expect_schema_error(R"({"schema":"tricorr/1"})").find("amplitudes"), std::string::npos);
    EXPECT_NE(expect_schema_error(R"({"schema":"tricorr/1","amplitudes":[[1,0]]})").find("amplitudes"), std::string::npos);
    EXPECT_NE(expect_schema_error(R"({"schema":"tricorr/1","amplitudes":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,"x"]]})")
                  .find("amplitudes[7]"),
              std::string::npos);
    EXPECT_NE(expect_schema_error(R"({"schema":"tricorr/1","amplitudes":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]],"convention":"q3-msb"})")
                  .find("convention"),
              std::string::npos);
    EXPECT_NE(expect_schema_error(R"({"schema":"tricorr/1","amplitudes":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]],"extra":1})")
                  .find("extra"),
              std::string::npos);
}

TEST(StateFile, NormCheckAndRenormalize) {
    const std::string text = R"({"schema":"tricorr/1","amplitudes":[[2,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})";
    EXPECT_NE(expect_schema_error(text).find("norm"), std::string::npos);
    EXPECT_NEAR(parse_state(text, true).state[0].real(), 1.0, 1e-15);
    const std::string close = R"({"schema":"tricorr/1","amplitudes":[[1.0000001,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})";
    EXPECT_NO_THROW(parse_state(close));
}

TEST(ObservablesFile, RoundTripAndChecks) {
    const ObservableSet13 obs = measure13(standard_state(StateClass::W));
    EXPECT_EQ(parse_observables(format_observables(obs)).values(), obs.values());
    const std::string ok = std::string(R"({"schema":"tricorr/1","observables":{"XXX":0,)") + kObsTail + "}}";
    EXPECT_EQ(parse_observables(ok)["ZZZ"], -1.0);
    const std::string extra = std::string(R"({"schema":"tricorr/1","observables":{"XXX":0,"YYY":0,)") + kObsTail + "}}";
    EXPECT_NE(expect_schema_error(extra, true).find("observables.YYY"), std::string::npos);
    const std::string missing = std::string(R"({"schema":"tricorr/1","observables":{)") + kObsTail + "}}";
    EXPECT_NE(expect_schema_error(missing, true).find("observables.XXX"), std::string::npos);
    const std::string big = std::string(R"({"schema":"tricorr/1","observables":{"XXX":1.2,)") + kObsTail + "}}";
    EXPECT_NE(expect_schema_error(big, true).find("observables.XXX"), std::string::npos);
    const std::string slack = std::string(R"({"schema":"tricorr/1","observables":{"XXX":1.03,)") + kObsTail + "}}";
    EXPECT_EQ(parse_observables(slack)["XXX"], 1.0);
}

TEST(CircuitFile, RoundTripAndErrors) {
    for (auto c : {StateClass::Ghz, StateClass::W, StateClass::Bs1}) {
        const Circuit circuit = preparation_circuit(c);
        EXPECT_EQ(parse_circuit(format_circuit(circuit)), circuit);
    }
    try {
        parse_circuit(R"({"schema":"tricorr/1","gates":[{"kind":"cnot","control":2,"target":2}]})");
        ADD_FAILURE();
    } catch (const SchemaError &e) {
        EXPECT_NE(std::string(e.what()).find("gates[0]"), std::string::npos);
    }
    EXPECT_THROW(parse_circuit(R"({"schema":"tricorr/1","gates":[{"kind":"swap","target":1}]})"), SchemaError);
}

TEST(Detect, Kinds) {
    EXPECT_EQ(detect_document(format_state(PureState{})), DocumentKind::State);
    EXPECT_EQ(detect_document(format_observables(ObservableSet13{})), DocumentKind::Observables);
    EXPECT_THROW(detect_document(R"({"schema":"tricorr/1"})"), SchemaError);
}

TEST(ClassificationJson, CarriesAllFields) {
    const PureState ghz = standard_state(StateClass::Ghz);
    const std::string out =
        format_classification(classify_state(ghz, ToleranceConfig::exact()), ToleranceConfig::exact(), concurrence_oracle(ghz));
    for (const char *key : {"\"schema\"", "\"label\"", "\"ranks\"", "\"singular_values\"", "\"tolerances\"",
                            "\"canonical_violation\"", "\"q_global\"", "\"c_total_sq\"", "\"c_sq\""}) {
        EXPECT_NE(out.find(key), std::string::npos) << key;
    }
    EXPECT_NE(out.find("\"GE\""), std::string::npos);
}

} // namespace
} // namespace tricorr
