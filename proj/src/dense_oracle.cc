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

#include "opmagic/dense_oracle.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "opmagic/magic.h"

namespace opmagic::dense {

namespace {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

constexpr Complex I_UNIT{0, 1};

void require_dense(size_t n, size_t limit = MAX_DENSE_QUBITS) {
    if (n > limit) {
        std::stringstream ss;
        ss << "Dense backend limited to " << limit << " qubits, got " << n << ".";
        throw std::invalid_argument(ss.str());
    }
}

size_t num_qubits_of_dim(Eigen::Index dim) {
    if (dim <= 1 || !std::has_single_bit(static_cast<size_t>(dim))) {
        throw std::invalid_argument("Dense matrix dimension must be a power of two (at least 2).");
    }
    return static_cast<size_t>(std::countr_zero(static_cast<size_t>(dim)));
}

/// Moves site bits to dense-index bit positions.
uint64_t to_dense(uint64_t mask, size_t n) {
    uint64_t out = 0;
    for (size_t q = 0; q < n; q++) {
        out |= ((mask >> q) & 1) << (n - 1 - q);
    }
    return out;
}

struct DensePauli {
    uint64_t x;
    uint64_t z;
    Complex base_phase;

    /// P|b> = phase(b) |b ^ x>.
    Complex phase(uint64_t b) const {
        return (std::popcount(z & b) & 1) ? -base_phase : base_phase;
    }
};

DensePauli dense_pauli(const PauliString &p) {
    size_t n = p.num_qubits();
    constexpr Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int y_count = std::popcount(p.x_mask() & p.z_mask());
    return DensePauli{to_dense(p.x_mask(), n), to_dense(p.z_mask(), n), powers[y_count & 3]};
}

Mat2 single_qubit_matrix(const Gate &g) {
    const double r = 1 / std::numbers::sqrt2;
    Mat2 m;
    switch (g.kind) {
        case GateKind::H:
            m << r, r, r, -r;
            return m;
        case GateKind::S:
            m << 1, 0, 0, I_UNIT;
            return m;
        case GateKind::Sdg:
            m << 1, 0, 0, -I_UNIT;
            return m;
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        case GateKind::Y:
            m << 0, -I_UNIT, I_UNIT, 0;
            return m;
        case GateKind::Z:
            m << 1, 0, 0, -1;
            return m;
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::RZ: {
            double th = g.rotation_angle();
            m << std::exp(-I_UNIT * th), 0, 0, std::exp(I_UNIT * th);
            return m;
        }
        default:
            throw std::invalid_argument("Not a single-qubit gate.");
    }
}

/// Matrix in the basis |q0 q1> (q0 most significant).
Mat4 two_qubit_matrix(const Gate &g) {
    Mat4 m = Mat4::Zero();
    switch (g.kind) {
        case GateKind::CNOT:
            m(0, 0) = m(1, 1) = 1;
            m(2, 3) = m(3, 2) = 1;
            return m;
        case GateKind::CZ:
            m(0, 0) = m(1, 1) = m(2, 2) = 1;
            m(3, 3) = -1;
            return m;
        case GateKind::SWAP:
            m(0, 0) = m(3, 3) = 1;
            m(1, 2) = m(2, 1) = 1;
            return m;
        case GateKind::RZZ: {
            Complex same = std::exp(-I_UNIT * g.theta);
            Complex diff = std::exp(I_UNIT * g.theta);
            m(0, 0) = m(3, 3) = same;
            m(1, 1) = m(2, 2) = diff;
            return m;
        }
        default:
            throw std::invalid_argument("Not a two-qubit gate.");
    }
}

}  // namespace

Matrix pauli_matrix(const PauliString &p) {
    size_t n = p.num_qubits();
    require_dense(n);
    size_t dim = size_t{1} << n;
    DensePauli dp = dense_pauli(p);
    Matrix m = Matrix::Zero(dim, dim);
    for (uint64_t b = 0; b < dim; b++) {
        m(b ^ dp.x, b) = dp.phase(b);
    }
    return m;
}

Matrix operator_matrix(const SparseOperator &op) {
    size_t n = op.num_qubits();
    require_dense(n);
    size_t dim = size_t{1} << n;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto &t : op.terms()) {
        DensePauli dp = dense_pauli(t.pauli);
        for (uint64_t b = 0; b < dim; b++) {
            m(b ^ dp.x, b) += t.coeff * dp.phase(b);
        }
    }
    return m;
}

void apply_gate(Vector &state, const Gate &g, size_t num_qubits) {
    size_t dim = size_t{1} << num_qubits;
    if (static_cast<size_t>(state.size()) != dim) {
        throw std::invalid_argument("State vector dimension does not match qubit count.");
    }
    if (g.q0 >= num_qubits || (g.arity() == 2 && (g.q1 >= num_qubits || g.q0 == g.q1))) {
        throw std::out_of_range("Gate site out of range for the dense state.");
    }
    if (g.arity() == 1) {
        Mat2 m = single_qubit_matrix(g);
        uint64_t bit = uint64_t{1} << (num_qubits - 1 - g.q0);
        for (uint64_t b = 0; b < dim; b++) {
            if (b & bit) {
                continue;
            }
            Complex v0 = state[b];
            Complex v1 = state[b | bit];
            state[b] = m(0, 0) * v0 + m(0, 1) * v1;
            state[b | bit] = m(1, 0) * v0 + m(1, 1) * v1;
        }
        return;
    }
    Mat4 m = two_qubit_matrix(g);
    uint64_t ba = uint64_t{1} << (num_qubits - 1 - g.q0);
    uint64_t bb = uint64_t{1} << (num_qubits - 1 - g.q1);
    for (uint64_t b = 0; b < dim; b++) {
        if (b & (ba | bb)) {
            continue;
        }
        const uint64_t idx[4] = {b, b | bb, b | ba, b | ba | bb};
        Complex v[4];
        for (int k = 0; k < 4; k++) {
            v[k] = state[idx[k]];
        }
        for (int r = 0; r < 4; r++) {
            Complex acc = 0;
            for (int c = 0; c < 4; c++) {
                acc += m(r, c) * v[c];
            }
            state[idx[r]] = acc;
        }
    }
}

Matrix circuit_unitary(const Circuit &circuit) {
    size_t n = circuit.num_qubits();
    require_dense(n);
    size_t dim = size_t{1} << n;
    Matrix u(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        Vector v = basis_state(n, col);
        for (const auto &g : circuit.gates()) {
            apply_gate(v, g, n);
        }
        u.col(col) = v;
    }
    return u;
}

double unitarity_defect(const Matrix &u) {
    Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

Complex pauli_overlap(const Matrix &m, const PauliString &p) {
    size_t n = num_qubits_of_dim(m.rows());
    if (m.rows() != m.cols() || p.num_qubits() != n) {
        throw std::invalid_argument("Pauli overlap dimension mismatch.");
    }
    size_t dim = size_t{1} << n;
    DensePauli dp = dense_pauli(p);
    Complex acc = 0;
    for (uint64_t b = 0; b < dim; b++) {
        acc += m(b, b ^ dp.x) * dp.phase(b);
    }
    return acc / static_cast<double>(dim);
}

std::vector<Complex> pauli_decomposition(const Matrix &m, size_t num_qubits) {
    require_dense(num_qubits);
    if (static_cast<size_t>(m.rows()) != (size_t{1} << num_qubits) || m.rows() != m.cols()) {
        throw std::invalid_argument("Matrix dimension does not match qubit count.");
    }
    auto paulis = enumerate_paulis(num_qubits);
    std::vector<Complex> out;
    out.reserve(paulis.size());
    for (const auto &p : paulis) {
        out.push_back(pauli_overlap(m, p));
    }
    return out;
}

std::vector<Complex> pauli_spectrum(const Matrix &u, const SparseOperator &seed) {
    size_t n = seed.num_qubits();
    require_dense(n);
    if (static_cast<size_t>(u.rows()) != (size_t{1} << n) || u.rows() != u.cols()) {
        throw std::invalid_argument("Unitary dimension does not match the seed operator.");
    }
    Matrix evolved = u.adjoint() * operator_matrix(seed) * u;
    return pauli_decomposition(evolved, n);
}

NullityReport stabilizer_nullity(const Matrix &u) {
    size_t n = num_qubits_of_dim(u.rows());
    require_dense(n, MAX_NULLITY_QUBITS);
    uint64_t count = 0;
    for (const auto &p2 : enumerate_paulis(n)) {
        Matrix evolved = u.adjoint() * pauli_matrix(p2) * u;
        for (const auto &c : pauli_decomposition(evolved, n)) {
            if (std::abs(std::abs(c) - 1) < 1e-9) {
                count++;
            }
        }
    }
    return NullityReport{count, 2.0 * static_cast<double>(n) - std::log2(static_cast<double>(count))};
}

std::vector<double> pauli_expectations(const Vector &psi, size_t num_qubits) {
    require_dense(num_qubits);
    size_t dim = size_t{1} << num_qubits;
    if (static_cast<size_t>(psi.size()) != dim) {
        throw std::invalid_argument("State dimension does not match qubit count.");
    }
    auto paulis = enumerate_paulis(num_qubits);
    std::vector<double> out;
    out.reserve(paulis.size());
    for (const auto &p : paulis) {
        DensePauli dp = dense_pauli(p);
        Complex acc = 0;
        for (uint64_t b = 0; b < dim; b++) {
            acc += std::conj(psi[b ^ dp.x]) * dp.phase(b) * psi[b];
        }
        out.push_back(acc.real());
    }
    return out;
}

StateSre state_sre(const Matrix &u, const Vector &psi, double alpha) {
    size_t n = num_qubits_of_dim(u.rows());
    require_dense(n);
    if (u.cols() != u.rows() || psi.size() != u.rows()) {
        throw std::invalid_argument("State/unitary dimension mismatch.");
    }
    Vector out = u * psi;
    auto ev = pauli_expectations(out, n);
    double dim = static_cast<double>(size_t{1} << n);
    std::vector<double> xi;
    xi.reserve(ev.size());
    double zeta2 = 0;
    for (double e : ev) {
        xi.push_back(e * e / dim);
        zeta2 += e * e * e * e;
    }
    zeta2 /= dim;
    StateSre r{};
    r.alpha = alpha;
    r.linear_sre = 1 - zeta2;
    if (alpha == 1) {
        r.purity = 1;
        r.sre = renyi_entropy(xi, 1) - std::log2(dim);
    } else {
        double z = 0;
        for (double e : ev) {
            z += std::pow(e * e, alpha);
        }
        r.purity = z / dim;
        r.sre = std::log2(r.purity) / (1 - alpha);
    }
    return r;
}

Vector basis_state(size_t num_qubits, size_t index) {
    require_dense(num_qubits, 20);
    size_t dim = size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::out_of_range("Basis index out of range.");
    }
    Vector v = Vector::Zero(dim);
    v[index] = 1;
    return v;
}

Vector random_stabilizer_state(size_t num_qubits, uint64_t seed) {
    require_dense(num_qubits);
    Circuit c = random_clifford_circuit(num_qubits, default_clifford_depth(num_qubits) + 1, seed);
    Vector v = basis_state(num_qubits, 0);
    for (const auto &g : c.gates()) {
        apply_gate(v, g, num_qubits);
    }
    return v;
}

double expectation(const SparseOperator &op, const Vector &psi) {
    size_t n = op.num_qubits();
    size_t dim = size_t{1} << n;
    if (static_cast<size_t>(psi.size()) != dim) {
        throw std::invalid_argument("State dimension does not match operator.");
    }
    Complex total = 0;
    for (const auto &t : op.terms()) {
        DensePauli dp = dense_pauli(t.pauli);
        Complex acc = 0;
        for (uint64_t b = 0; b < dim; b++) {
            acc += std::conj(psi[b ^ dp.x]) * dp.phase(b) * psi[b];
        }
        total += t.coeff * acc;
    }
    return total.real();
}

}  // namespace opmagic::dense
