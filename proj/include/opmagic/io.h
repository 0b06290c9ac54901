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

#ifndef OPMAGIC_IO_H
#define OPMAGIC_IO_H

// Text and JSON formats for operators and circuits.
//
// Operator JSON:  {"n": 3, "terms": [["XIZ", 0.7071067811865476], ...]}
// Circuit JSON:   {"n": 2, "gates": [{"kind": "RZZ", "sites": [0, 1], "theta": 0.39}, ...]}
// Gate list:      one gate per line ("T 0", "CNOT 0 1", "RZZ 0 1 pi/8"), '#' comments,
//                 and an optional "qubits N" line.
//
// Doubles are written in shortest round-trip form, so reloading is bit exact.

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "opmagic/circuit.h"
#include "opmagic/sparse_operator.h"

namespace opmagic {

/// Thrown for malformed operator, circuit or angle text.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

nlohmann::json operator_to_json(const SparseOperator &op);
SparseOperator operator_from_json(const nlohmann::json &j);

nlohmann::json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const nlohmann::json &j);

/// Radians, with optional pi-fraction syntax: "0.3", "pi", "-pi/8", "3pi/4", "3*pi/4".
double parse_angle(std::string_view text);

/// "+XIZ", "-YY", "XZ" (implicit +).
PauliTerm parse_signed_pauli(std::string_view text);

/// Site syntax "X0 X1 Z3" on `num_qubits` qubits; an empty string is the identity.
PauliString parse_site_pauli(std::string_view text, size_t num_qubits);

/// Either syntax. Letter strings must have length `num_qubits` when it is nonzero.
PauliTerm parse_pauli_spec(std::string_view text, size_t num_qubits);

/// Text gate list. `num_qubits` of 0 means "qubits N" line or max site + 1.
Circuit parse_gate_list(std::string_view text, size_t num_qubits = 0);
std::string format_gate_list(const Circuit &c);

/// Reads a circuit from a JSON or gate-list file (JSON is detected by a leading '{').
Circuit load_circuit_file(const std::string &path);

/// Reads a whole file; throws std::runtime_error on I/O failure.
std::string read_text_file(const std::string &path);

}  // namespace opmagic

#endif
