// Copyright 2026 The symmetric-povm Authors
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

#include "povm/serialize.hpp"
#include "test_util.hpp"

namespace povm {
namespace {

using testing::expect_kind;

TEST(Serialize, PovmJsonShape) {
    const Json j = to_json(cyclic_povm(3));
    EXPECT_EQ(j["family"]["kind"], "cyclic");
    EXPECT_EQ(j["family"]["m"], 3);
    ASSERT_EQ(j["vectors"].size(), 3u);
    EXPECT_EQ(j["vectors"][1][1].size(), 2u);
    EXPECT_DOUBLE_EQ(j["vectors"][0][0][0].get<double>(), 1.0 / std::sqrt(3.0));

    const Json d = to_json(PovmFamily::dihedral(4, {0.6, Complex(0.0, 0.8)}));
    EXPECT_EQ(d["alpha"], 0.6);
    EXPECT_EQ(d["beta"][1], 0.8);
    EXPECT_TRUE(to_json(Povm({{1.0, 0.0}, {0.0, 1.0}}))["family"].is_null());
}

TEST(Serialize, DilationJsonMarksPadding) {
    const Json j = to_json(structured_dilation(PovmFamily::platonic(FamilyKind::Octahedron)));
    EXPECT_EQ(j["n_qubits"], 3);
    EXPECT_TRUE(j["outcome_map"][3].is_null());
    EXPECT_TRUE(j["outcome_map"][7].is_null());
    EXPECT_EQ(j["outcome_map"][4], 3);
    EXPECT_EQ(j["matrix"].size(), 8u);
}

TEST(Serialize, CircuitRoundTrip) {
    for (const PovmFamily &f : {PovmFamily::cyclic(8), PovmFamily::dihedral(3, DihedralSeed::from_polar(1.0)),
                                PovmFamily::platonic(FamilyKind::Dodecahedron)}) {
        const Circuit c = synthesize_circuit(f);
        const Json j = to_json(c);
        EXPECT_EQ(j["qubits"], c.n_qubits());
        const Circuit back = circuit_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.size(), c.size());
        EXPECT_EQ(back.label(), c.label());
        EXPECT_EQ(max_entry_distance(compile_circuit(back), compile_circuit(c)), 0.0) << f.label();
    }
}

TEST(Serialize, CircuitJsonRejectsBadGates) {
    expect_kind(ErrorKind::InvalidGate, [] {
        circuit_from_json(Json::parse(R"({"qubits":2,"gates":[{"kind":"cnot","control":0,"target":0}]})"));
    });
    expect_kind(ErrorKind::InvalidGate, [] {
        circuit_from_json(Json::parse(R"({"qubits":2,"gates":[{"kind":"toffoli"}]})"));
    });
    expect_kind(ErrorKind::InvalidGate, [] { circuit_from_json(Json::parse(R"({"gates":[]})")); });
    expect_kind(ErrorKind::InvalidDimension, [] {
        circuit_from_json(Json::parse(R"({"qubits":1,"gates":[{"kind":"u","target":0,"matrix":[[[1,0]],[[0,0],[1,0]]]}]})"));
    });
}

TEST(Serialize, DoublesRoundTrip) {
    const double x = std::sqrt(2.0) / 3.0;
    EXPECT_EQ(std::stod(format_double(x)), x);
    EXPECT_EQ(format_double(-0.0), "0");
    const Json j = to_json(platonic_povm(FamilyKind::Icosahedron));
    const Json back = Json::parse(j.dump());
    EXPECT_EQ(back, j);
}

TEST(Serialize, ProbabilityCsv) {
    const ProbabilityVector a = make_probability_vector({0.25, 0.75});
    const ProbabilityVector b = make_probability_vector({0.25, 0.7500000000000001});
    const std::string csv = probability_table_csv(a, b);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "outcome,analytic,circuit,abs_error");
    EXPECT_NE(csv.find("0,0.25,0.25,0\n"), std::string::npos);
    EXPECT_NE(csv.find("1,0.75,0.75000000000000011,"), std::string::npos);
    expect_kind(ErrorKind::InvalidDimension, [&] { probability_table_csv(a, make_probability_vector({1.0})); });
}

TEST(Serialize, BlochCsv) {
    const std::string csv = bloch_csv(platonic_povm(FamilyKind::Tetrahedron));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
    EXPECT_EQ(csv.substr(0, 12), "index,x,y,z\n");
}

TEST(Serialize, ReportJson) {
    const Json ok = to_json(verify_family(PovmFamily::platonic(FamilyKind::Tetrahedron)));
    EXPECT_TRUE(ok["pass"]["all"].get<bool>());
    EXPECT_TRUE(ok["failure"].is_null());
    const Json bad = to_json(verify_family(PovmFamily::dihedral(3, {1.0, 0.0})));
    EXPECT_FALSE(bad["pass"]["all"].get<bool>());
    EXPECT_EQ(bad["failure"]["kind"], "DegenerateOrbit");
}

TEST(Serialize, SampleJson) {
    const Json j = to_json(sample(make_probability_vector({0.5, 0.5}), 10, kDefaultSeed));
    EXPECT_EQ(j["seed"], 0x5EED);
    EXPECT_EQ(j["seed_hex"], "0x5eed");
    EXPECT_EQ(j["shots"], 10);
}

}  // namespace
}  // namespace povm
