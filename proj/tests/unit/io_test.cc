// Copyright 2026 The opmagic Authors
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

#include "opmagic/io.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "opmagic/heisenberg.h"

using namespace opmagic;

namespace {

constexpr double PI = std::numbers::pi;

std::string temp_path(const std::string &name) {
    return ::testing::TempDir() + "opmagic_io_" + name;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST(io, operator_json_round_trip_is_bit_exact) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Circuit c = random_mixed_circuit(5, 12, seed);
        SparseOperator seed_op = SparseOperator::from_local(2, 0.6, 0, 0.8, 5);
        SparseOperator evolved = evolve_heisenberg(seed_op, c);
        std::string text = operator_to_json(evolved).dump();
        SparseOperator back = operator_from_json(nlohmann::json::parse(text));
        ASSERT_EQ(back.rank(), evolved.rank());
        for (size_t k = 0; k < back.rank(); k++) {
            EXPECT_EQ(back.terms()[k].pauli, evolved.terms()[k].pauli);
            EXPECT_EQ(back.terms()[k].coeff, evolved.terms()[k].coeff);
        }
    }
}

TEST(io, operator_json_format) {
    auto j = operator_to_json(SparseOperator::from_local(0, 0, 1, 0, 2));
    EXPECT_EQ(j.dump(), R"({"n":2,"terms":[["YI",1.0]]})");
    auto op = operator_from_json(nlohmann::json::parse(R"({"n":2,"terms":[["XZ",0.6],["ZX",-0.8]]})"));
    EXPECT_EQ(op.rank(), 2u);
    EXPECT_EQ(op.coefficient(PauliString::from_letters("ZX")), -0.8);
}

TEST(io, operator_json_errors) {
    EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"terms":[]})")), ParseError);
    EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"n":2,"terms":[["XZI",1]]})")), ParseError);
    EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"n":2,"terms":[["XZ"]]})")), ParseError);
    EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"n":2,"terms":[["XZ","a"]]})")), ParseError);
    EXPECT_THROW(operator_from_json(nlohmann::json::parse(R"({"n":2,"terms":[["XQ",1]]})")), std::invalid_argument);
    EXPECT_THROW(operator_from_json(nlohmann::json::parse("[1,2]")), ParseError);
}

TEST(io, circuit_json_round_trip_is_bit_exact) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Circuit c = random_mixed_circuit(4, 30, seed);
        c.append(Gate::rzz(0, 3, 0.1 + static_cast<double>(seed) / 7));
        c.append(Gate::rz(1, -PI / 3));
        Circuit back = circuit_from_json(nlohmann::json::parse(circuit_to_json(c).dump()));
        EXPECT_EQ(back, c);
    }
}

TEST(io, circuit_json_accepts_string_angles) {
    auto c = circuit_from_json(nlohmann::json::parse(
        R"({"n":2,"gates":[{"kind":"RZZ","sites":[0,1],"theta":"pi/8"},{"kind":"T","sites":[1]}]})"));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.gates()[0].theta, PI / 8);
    EXPECT_EQ(c.gates()[1].kind, GateKind::T);
}

TEST(io, circuit_json_errors) {
    EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"n":2,"gates":[{"kind":"FOO","sites":[0]}]})")),
                 ParseError);
    EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"n":2,"gates":[{"kind":"CNOT","sites":[0]}]})")),
                 ParseError);
    EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"n":2,"gates":[{"kind":"RZ","sites":[0]}]})")),
                 ParseError);
    EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"n":2,"gates":[{"kind":"H","sites":[5]}]})")),
                 std::out_of_range);
    EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"gates":[]})")), ParseError);
}

TEST(io, parse_angle) {
    EXPECT_EQ(parse_angle("0.3"), 0.3);
    EXPECT_EQ(parse_angle(" -1e-3 "), -1e-3);
    EXPECT_EQ(parse_angle("pi"), PI);
    EXPECT_EQ(parse_angle("-pi"), -PI);
    EXPECT_EQ(parse_angle("pi/8"), PI / 8);
    EXPECT_EQ(parse_angle("-pi/8"), -PI / 8);
    EXPECT_EQ(parse_angle("3pi/4"), 3 * PI / 4);
    EXPECT_EQ(parse_angle("3*pi/4"), 3 * PI / 4);
    EXPECT_EQ(parse_angle("PI/2"), PI / 2);
    EXPECT_THROW(parse_angle(""), ParseError);
    EXPECT_THROW(parse_angle("abc"), ParseError);
    EXPECT_THROW(parse_angle("pi/0"), ParseError);
    EXPECT_THROW(parse_angle("pi*2"), ParseError);
    EXPECT_THROW(parse_angle("0.3x"), ParseError);
    EXPECT_THROW(parse_angle("x pi"), ParseError);
}

TEST(io, parse_paulis) {
    auto a = parse_signed_pauli("-XYZ");
    EXPECT_EQ(a.coeff, -1);
    EXPECT_EQ(a.pauli, PauliString::from_letters("XYZ"));
    EXPECT_EQ(parse_signed_pauli("+ZI").coeff, 1);
    EXPECT_EQ(parse_signed_pauli("ZI").coeff, 1);
    EXPECT_THROW(parse_signed_pauli("XA"), ParseError);

    EXPECT_EQ(parse_site_pauli("X0 Z2", 3), PauliString::from_letters("XIZ"));
    EXPECT_EQ(parse_site_pauli("y1", 2), PauliString::from_letters("IY"));
    EXPECT_EQ(parse_site_pauli("", 2), PauliString(2));
    EXPECT_THROW(parse_site_pauli("X0 Z0", 2), ParseError);
    EXPECT_THROW(parse_site_pauli("X2", 2), ParseError);
    EXPECT_THROW(parse_site_pauli("X", 2), ParseError);
    EXPECT_THROW(parse_site_pauli("Q1", 2), ParseError);
    EXPECT_THROW(parse_site_pauli("X1a", 2), ParseError);

    EXPECT_EQ(parse_pauli_spec("-X1", 3).pauli, PauliString::from_letters("IXI"));
    EXPECT_EQ(parse_pauli_spec("-X1", 3).coeff, -1);
    EXPECT_EQ(parse_pauli_spec("XX", 2).pauli, PauliString::from_letters("XX"));
    EXPECT_EQ(parse_pauli_spec("XX", 0).pauli.num_qubits(), 2u);
    EXPECT_THROW(parse_pauli_spec("XX", 3), ParseError);
    EXPECT_THROW(parse_pauli_spec("X1", 0), ParseError);
}

TEST(io, parse_gate_list) {
    Circuit c = parse_gate_list(
        "# header\n"
        "H 0\n"
        "CNOT 0 2   # inline\n"
        "\n"
        "RZZ 1 2 pi/8\n"
        "RZ 0 -0.25\n"
        "T 1\n");
    EXPECT_EQ(c.num_qubits(), 3u);
    ASSERT_EQ(c.size(), 5u);
    EXPECT_EQ(c.gates()[1], Gate::pair(GateKind::CNOT, 0, 2));
    EXPECT_EQ(c.gates()[2], Gate::rzz(1, 2, PI / 8));
    EXPECT_EQ(c.gates()[3], Gate::rz(0, -0.25));
    EXPECT_EQ(c.t_count(), 1u);

    EXPECT_EQ(parse_gate_list("qubits 5\nH 0\n").num_qubits(), 5u);
    EXPECT_EQ(parse_gate_list("H 0\n", 4).num_qubits(), 4u);
    EXPECT_EQ(parse_gate_list("qubits 3\n").size(), 0u);
}

TEST(io, parse_gate_list_errors) {
    EXPECT_THROW(parse_gate_list(""), ParseError);
    EXPECT_THROW(parse_gate_list("# nothing\n"), ParseError);
    EXPECT_THROW(parse_gate_list("FOO 0\n"), ParseError);
    EXPECT_THROW(parse_gate_list("H 0 1\n"), ParseError);
    EXPECT_THROW(parse_gate_list("CNOT 0\n"), ParseError);
    EXPECT_THROW(parse_gate_list("RZ 0\n"), ParseError);
    EXPECT_THROW(parse_gate_list("H -1\n"), ParseError);
    EXPECT_THROW(parse_gate_list("qubits\n"), ParseError);
    EXPECT_THROW(parse_gate_list("CNOT 1 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_gate_list("qubits 2\nH 4\n"), std::out_of_range);
    try {
        parse_gate_list("H 0\nBAD 1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("Line 2"), std::string::npos);
    }
}

TEST(io, gate_list_round_trip_is_bit_exact) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Circuit c = random_mixed_circuit(4, 25, seed);
        c.append(Gate::rzz(2, 0, 1.0 / 3));
        c.append(Gate::rz(3, std::nextafter(PI, 4.0)));
        EXPECT_EQ(parse_gate_list(format_gate_list(c)), c);
    }
}

TEST(io, files) {
    Circuit c = doped_circuit(3, 2, 4, 9);
    std::string text_path = temp_path("circuit.txt");
    std::string json_path = temp_path("circuit.json");
    write_file(text_path, format_gate_list(c));
    write_file(json_path, circuit_to_json(c).dump(2));
    EXPECT_EQ(load_circuit_file(text_path), c);
    EXPECT_EQ(load_circuit_file(json_path), c);
    EXPECT_EQ(read_text_file(text_path), format_gate_list(c));
    EXPECT_THROW(read_text_file(temp_path("missing")), std::runtime_error);
    EXPECT_THROW(load_circuit_file(temp_path("missing")), std::runtime_error);
    std::string bad_path = temp_path("bad.json");
    write_file(bad_path, "{not json");
    EXPECT_THROW(load_circuit_file(bad_path), ParseError);
    std::remove(text_path.c_str());
    std::remove(json_path.c_str());
    std::remove(bad_path.c_str());
}
