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

#ifndef OPMAGIC_CIRCUIT_H
#define OPMAGIC_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace opmagic {

/// Gate kinds understood by both the sparse and the dense backends.
///
/// Angle convention: RZ(theta) = exp(-i theta Z), RZZ(theta) = exp(-i theta Z(x)Z).
/// T is exactly RZ(pi/8) and Tdg is RZ(-pi/8); they agree with diag(1, e^{+-i pi/4})
/// up to a global phase.
enum class GateKind : uint8_t { H, S, Sdg, X, Y, Z, CNOT, CZ, SWAP, T, Tdg, RZ, RZZ };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
size_t gate_arity(GateKind kind);
bool gate_is_clifford(GateKind kind);
bool gate_has_angle(GateKind kind);

struct Gate {
    GateKind kind;
    /// First site (control for CNOT).
    uint32_t q0 = 0;
    /// Second site; ignored for single-qubit kinds.
    uint32_t q1 = 0;
    /// Rotation angle in radians; only meaningful for RZ and RZZ.
    double theta = 0;

    static Gate single(GateKind kind, size_t site);
    static Gate pair(GateKind kind, size_t a, size_t b);
    static Gate rz(size_t site, double theta);
    static Gate rzz(size_t a, size_t b, double theta);

    size_t arity() const { return gate_arity(kind); }
    /// Angle of the equivalent Z or ZZ rotation (T -> pi/8); 0 for Clifford kinds.
    double rotation_angle() const;

    bool operator==(const Gate &other) const = default;
};

/// Ordered gate list. The first gate acts first on states.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits);
    Circuit(size_t num_qubits, std::vector<Gate> gates);

    size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    size_t size() const { return gates_.size(); }

    /// Throws std::out_of_range / std::invalid_argument for bad sites.
    void append(const Gate &g);
    void append(const Circuit &other);

    /// Number of T and Tdg gates.
    size_t t_count() const;
    bool is_clifford() const;

    bool operator==(const Circuit &other) const = default;

   private:
    size_t num_qubits_;
    std::vector<Gate> gates_;
};

/// The dual-unitary XXZ brick on sites (0, 1): RZZ(coupling) followed by SWAP.
Circuit xxz_brick(double coupling);

/// `layers` alternating layers of `brick` (a 2-qubit circuit) on an open chain.
/// Even layers couple (0,1),(2,3),...; odd layers couple (1,2),(3,4),...
/// Throws std::invalid_argument for odd `num_qubits`.
Circuit brickwork_circuit(size_t num_qubits, size_t layers, const Circuit &brick);

/// Default number of gates in a Clifford mixing block: 3 n^2.
size_t default_clifford_depth(size_t num_qubits);

/// Seeded sequence of `depth` gates drawn uniformly from {H, S, CNOT} on uniformly
/// random sites ({H, S} only when num_qubits == 1). Not an exactly uniform Clifford.
Circuit random_clifford_circuit(size_t num_qubits, size_t depth, uint64_t seed);

/// Clifford block, then (one T on a random site, Clifford block) repeated `t_count` times.
/// A `clifford_depth` of 0 selects `default_clifford_depth`.
Circuit doped_circuit(size_t num_qubits, size_t t_count, size_t clifford_depth, uint64_t seed);

/// Seeded circuit of `num_gates` gates drawn from every gate kind, with uniform angles
/// for RZ/RZZ. Used for oracle comparisons.
Circuit random_mixed_circuit(size_t num_qubits, size_t num_gates, uint64_t seed);

}  // namespace opmagic

#endif
