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

#include "opmagic/circuit.h"

#include <array>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "opmagic/pauli_string.h"
#include "opmagic/rng.h"

namespace opmagic {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
    size_t arity;
    bool clifford;
    bool angle;
};

constexpr std::array<GateInfo, 13> GATE_TABLE = {{
    {GateKind::H, "H", 1, true, false},
    {GateKind::S, "S", 1, true, false},
    {GateKind::Sdg, "Sdg", 1, true, false},
    {GateKind::X, "X", 1, true, false},
    {GateKind::Y, "Y", 1, true, false},
    {GateKind::Z, "Z", 1, true, false},
    {GateKind::CNOT, "CNOT", 2, true, false},
    {GateKind::CZ, "CZ", 2, true, false},
    {GateKind::SWAP, "SWAP", 2, true, false},
    {GateKind::T, "T", 1, false, false},
    {GateKind::Tdg, "Tdg", 1, false, false},
    {GateKind::RZ, "RZ", 1, false, true},
    {GateKind::RZZ, "RZZ", 2, false, true},
}};

const GateInfo &info(GateKind kind) {
    return GATE_TABLE[static_cast<size_t>(kind)];
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    return info(kind).name;
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &g : GATE_TABLE) {
        if (g.name == name) {
            return g.kind;
        }
    }
    if (name == "CX") {
        return GateKind::CNOT;
    }
    if (name == "S_DAG" || name == "SDG") {
        return GateKind::Sdg;
    }
    if (name == "T_DAG" || name == "TDG") {
        return GateKind::Tdg;
    }
    return std::nullopt;
}

size_t gate_arity(GateKind kind) {
    return info(kind).arity;
}

bool gate_is_clifford(GateKind kind) {
    return info(kind).clifford;
}

bool gate_has_angle(GateKind kind) {
    return info(kind).angle;
}

Gate Gate::single(GateKind kind, size_t site) {
    if (gate_arity(kind) != 1) {
        throw std::invalid_argument("Gate::single needs a single-qubit kind.");
    }
    return Gate{kind, static_cast<uint32_t>(site), 0, 0};
}

Gate Gate::pair(GateKind kind, size_t a, size_t b) {
    if (gate_arity(kind) != 2) {
        throw std::invalid_argument("Gate::pair needs a two-qubit kind.");
    }
    if (a == b) {
        throw std::invalid_argument("Two-qubit gate needs distinct sites.");
    }
    return Gate{kind, static_cast<uint32_t>(a), static_cast<uint32_t>(b), 0};
}

Gate Gate::rz(size_t site, double theta) {
    return Gate{GateKind::RZ, static_cast<uint32_t>(site), 0, theta};
}

Gate Gate::rzz(size_t a, size_t b, double theta) {
    Gate g = pair(GateKind::RZZ, a, b);
    g.theta = theta;
    return g;
}

double Gate::rotation_angle() const {
    switch (kind) {
        case GateKind::T:
            return std::numbers::pi / 8;
        case GateKind::Tdg:
            return -std::numbers::pi / 8;
        case GateKind::RZ:
        case GateKind::RZZ:
            return theta;
        default:
            return 0;
    }
}

Circuit::Circuit(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("Circuit qubit count out of range.");
    }
}

Circuit::Circuit(size_t num_qubits, std::vector<Gate> gates) : Circuit(num_qubits) {
    for (const auto &g : gates) {
        append(g);
    }
}

void Circuit::append(const Gate &g) {
    if (g.q0 >= num_qubits_ || (g.arity() == 2 && g.q1 >= num_qubits_)) {
        std::stringstream ss;
        ss << gate_name(g.kind) << " gate site out of range for " << num_qubits_ << " qubits.";
        throw std::out_of_range(ss.str());
    }
    if (g.arity() == 2 && g.q0 == g.q1) {
        throw std::invalid_argument("Two-qubit gate needs distinct sites.");
    }
    Gate stored = g;
    if (stored.arity() == 1) {
        stored.q1 = 0;
    }
    if (!gate_has_angle(stored.kind)) {
        stored.theta = 0;
    }
    gates_.push_back(stored);
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::invalid_argument("Appended circuit is wider than the target.");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
}

size_t Circuit::t_count() const {
    size_t count = 0;
    for (const auto &g : gates_) {
        count += g.kind == GateKind::T || g.kind == GateKind::Tdg;
    }
    return count;
}

bool Circuit::is_clifford() const {
    for (const auto &g : gates_) {
        if (!gate_is_clifford(g.kind)) {
            return false;
        }
    }
    return true;
}

Circuit xxz_brick(double coupling) {
    return Circuit(2, {Gate::rzz(0, 1, coupling), Gate::pair(GateKind::SWAP, 0, 1)});
}

Circuit brickwork_circuit(size_t num_qubits, size_t layers, const Circuit &brick) {
    if (num_qubits % 2 != 0) {
        throw std::invalid_argument("Brickwork circuits need an even number of qubits.");
    }
    if (brick.num_qubits() != 2) {
        throw std::invalid_argument("Brick template must act on exactly 2 qubits.");
    }
    Circuit out(num_qubits);
    for (size_t layer = 0; layer < layers; layer++) {
        for (size_t left = layer % 2; left + 1 < num_qubits; left += 2) {
            for (const auto &g : brick.gates()) {
                Gate placed = g;
                placed.q0 = static_cast<uint32_t>(left + g.q0);
                placed.q1 = static_cast<uint32_t>(left + g.q1);
                out.append(placed);
            }
        }
    }
    return out;
}

size_t default_clifford_depth(size_t num_qubits) {
    return 3 * num_qubits * num_qubits;
}

namespace {

void append_random_clifford(Circuit &out, size_t depth, Rng &rng) {
    size_t n = out.num_qubits();
    size_t kinds = n > 1 ? 3 : 2;
    for (size_t k = 0; k < depth; k++) {
        switch (uniform_below(rng, kinds)) {
            case 0:
                out.append(Gate::single(GateKind::H, uniform_below(rng, n)));
                break;
            case 1:
                out.append(Gate::single(GateKind::S, uniform_below(rng, n)));
                break;
            default: {
                size_t a = uniform_below(rng, n);
                size_t b = uniform_below(rng, n - 1);
                if (b >= a) {
                    b++;
                }
                out.append(Gate::pair(GateKind::CNOT, a, b));
            }
        }
    }
}

}  // namespace

Circuit random_clifford_circuit(size_t num_qubits, size_t depth, uint64_t seed) {
    if (depth == 0) {
        throw std::invalid_argument("Random Clifford circuit depth must be at least 1.");
    }
    Circuit out(num_qubits);
    Rng rng(derive_seed(seed, 0));
    append_random_clifford(out, depth, rng);
    return out;
}

Circuit doped_circuit(size_t num_qubits, size_t t_count, size_t clifford_depth, uint64_t seed) {
    if (clifford_depth == 0) {
        clifford_depth = default_clifford_depth(num_qubits);
    }
    Circuit out(num_qubits);
    Rng rng(derive_seed(seed, 1));
    append_random_clifford(out, clifford_depth, rng);
    for (size_t k = 0; k < t_count; k++) {
        out.append(Gate::single(GateKind::T, uniform_below(rng, num_qubits)));
        append_random_clifford(out, clifford_depth, rng);
    }
    return out;
}

Circuit random_mixed_circuit(size_t num_qubits, size_t num_gates, uint64_t seed) {
    Circuit out(num_qubits);
    Rng rng(derive_seed(seed, 2));
    for (size_t k = 0; k < num_gates; k++) {
        GateKind kind;
        do {
            kind = static_cast<GateKind>(uniform_below(rng, GATE_TABLE.size()));
        } while (num_qubits == 1 && gate_arity(kind) == 2);
        size_t a = uniform_below(rng, num_qubits);
        if (gate_arity(kind) == 1) {
            Gate g = Gate::single(kind, a);
            if (kind == GateKind::RZ) {
                g.theta = (2 * uniform_unit(rng) - 1) * std::numbers::pi;
            }
            out.append(g);
        } else {
            size_t b = uniform_below(rng, num_qubits - 1);
            if (b >= a) {
                b++;
            }
            Gate g = Gate::pair(kind, a, b);
            if (kind == GateKind::RZZ) {
                g.theta = (2 * uniform_unit(rng) - 1) * std::numbers::pi;
            }
            out.append(g);
        }
    }
    return out;
}

}  // namespace opmagic
