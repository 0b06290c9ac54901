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

#include "opmagic/heisenberg.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace opmagic {

namespace {

inline uint64_t bit_at(uint64_t mask, size_t k) {
    return (mask >> k) & 1;
}

inline uint64_t with_bit(uint64_t mask, size_t k, uint64_t v) {
    return (mask & ~(uint64_t{1} << k)) | (v << k);
}

void check_sites(const Gate &g, size_t n) {
    if (g.q0 >= n || (g.arity() == 2 && (g.q1 >= n || g.q0 == g.q1))) {
        std::stringstream ss;
        ss << gate_name(g.kind) << " gate sites invalid for a " << n << "-qubit operator.";
        throw std::out_of_range(ss.str());
    }
}

}  // namespace

PauliTerm conjugate_clifford(const PauliString &p, const Gate &g) {
    uint64_t x = p.x_mask();
    uint64_t z = p.z_mask();
    bool flip = false;
    size_t a = g.q0;
    size_t b = g.q1;
    uint64_t xa = bit_at(x, a);
    uint64_t za = bit_at(z, a);
    switch (g.kind) {
        case GateKind::H:
            flip = xa & za;
            x = with_bit(x, a, za);
            z = with_bit(z, a, xa);
            break;
        case GateKind::S:
            // X -> -Y, Y -> X
            flip = xa & !za;
            z = with_bit(z, a, za ^ xa);
            break;
        case GateKind::Sdg:
            // X -> Y, Y -> -X
            flip = xa & za;
            z = with_bit(z, a, za ^ xa);
            break;
        case GateKind::X:
            flip = za;
            break;
        case GateKind::Y:
            flip = xa ^ za;
            break;
        case GateKind::Z:
            flip = xa;
            break;
        case GateKind::CNOT: {
            uint64_t xb = bit_at(x, b);
            uint64_t zb = bit_at(z, b);
            flip = xa & zb & (xb ^ za ^ 1);
            x = with_bit(x, b, xb ^ xa);
            z = with_bit(z, a, za ^ zb);
            break;
        }
        case GateKind::CZ: {
            uint64_t xb = bit_at(x, b);
            uint64_t zb = bit_at(z, b);
            flip = xa & xb & (za ^ zb);
            z = with_bit(z, a, za ^ xb);
            z = with_bit(z, b, zb ^ xa);
            break;
        }
        case GateKind::SWAP: {
            uint64_t xb = bit_at(x, b);
            uint64_t zb = bit_at(z, b);
            x = with_bit(with_bit(x, a, xb), b, xa);
            z = with_bit(with_bit(z, a, zb), b, za);
            break;
        }
        default:
            throw std::invalid_argument("conjugate_clifford called with a non-Clifford gate.");
    }
    return PauliTerm{PauliString(p.num_qubits(), x, z), flip ? -1.0 : 1.0};
}

SparseOperator conjugate_gate(const SparseOperator &op, const Gate &g, double prune_tolerance) {
    size_t n = op.num_qubits();
    check_sites(g, n);
    std::vector<PauliTerm> out;
    if (gate_is_clifford(g.kind)) {
        out.reserve(op.rank());
        for (const auto &t : op.terms()) {
            PauliTerm image = conjugate_clifford(t.pauli, g);
            image.coeff *= t.coeff;
            out.push_back(image);
        }
        return SparseOperator::from_terms(n, std::move(out), prune_tolerance);
    }

    uint64_t rot_z = uint64_t{1} << g.q0;
    if (g.arity() == 2) {
        rot_z |= uint64_t{1} << g.q1;
    }
    PauliString axis(n, 0, rot_z);
    double angle = 2 * g.rotation_angle();
    double c = std::cos(angle);
    double s = std::sin(angle);
    out.reserve(2 * op.rank());
    for (const auto &t : op.terms()) {
        if ((std::popcount(t.pauli.x_mask() & rot_z) & 1) == 0) {
            out.push_back(t);
            continue;
        }
        // P Q = i^k P' with k odd, and -i * i^k is +1 for k = 1, -1 for k = 3.
        PauliProduct pq = pauli_mul(t.pauli, axis);
        double sign = pq.phase_exponent == 1 ? 1.0 : -1.0;
        out.push_back(PauliTerm{t.pauli, c * t.coeff});
        out.push_back(PauliTerm{pq.result, sign * s * t.coeff});
    }
    return SparseOperator::from_terms(n, std::move(out), prune_tolerance);
}

SparseOperator evolve_heisenberg(const SparseOperator &op, const Circuit &circuit, double prune_tolerance) {
    if (op.num_qubits() != circuit.num_qubits()) {
        std::stringstream ss;
        ss << "Operator has " << op.num_qubits() << " qubits but circuit has " << circuit.num_qubits() << ".";
        throw std::invalid_argument(ss.str());
    }
    SparseOperator cur = SparseOperator::from_terms(
        op.num_qubits(), std::vector<PauliTerm>(op.terms().begin(), op.terms().end()), prune_tolerance);
    const auto &gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        cur = conjugate_gate(cur, *it, prune_tolerance);
    }
    return cur;
}

std::vector<size_t> support(const SparseOperator &op) {
    uint64_t mask = 0;
    for (const auto &t : op.terms()) {
        mask |= t.pauli.x_mask() | t.pauli.z_mask();
    }
    std::vector<size_t> sites;
    for (size_t k = 0; k < op.num_qubits(); k++) {
        if (bit_at(mask, k)) {
            sites.push_back(k);
        }
    }
    return sites;
}

}  // namespace opmagic
