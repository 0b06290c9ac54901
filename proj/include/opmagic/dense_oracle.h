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

#ifndef OPMAGIC_DENSE_ORACLE_H
#define OPMAGIC_DENSE_ORACLE_H

// Brute-force dense-matrix backend for small registers.
//
// Basis convention: site 0 is the most significant tensor factor, so the
// string "XI" is kron(X, I). Global phases are never tracked; every quantity
// computed here is invariant under U -> e^{i phi} U.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "opmagic/circuit.h"
#include "opmagic/sparse_operator.h"

namespace opmagic::dense {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Register limit for unitaries and spectra.
constexpr size_t MAX_DENSE_QUBITS = 6;
/// Register limit for the stabilizer-nullity pair scan.
constexpr size_t MAX_NULLITY_QUBITS = 4;

Matrix pauli_matrix(const PauliString &p);
Matrix operator_matrix(const SparseOperator &op);

/// Applies one gate to a state vector in place.
void apply_gate(Vector &state, const Gate &g, size_t num_qubits);

/// Ordered product of the gate matrices (first gate rightmost).
Matrix circuit_unitary(const Circuit &circuit);

/// ||U^dag U - 1||_max.
double unitarity_defect(const Matrix &u);

/// tr[M P] / D.
Complex pauli_overlap(const Matrix &m, const PauliString &p);

/// tr[U^dag O U P] / D for every P in canonical order.
std::vector<Complex> pauli_spectrum(const Matrix &u, const SparseOperator &seed);

/// Same as `pauli_spectrum` but for an already evolved dense operator.
std::vector<Complex> pauli_decomposition(const Matrix &m, size_t num_qubits);

struct NullityReport {
    /// Pairs (P1, P2) with |tr(P1 U^dag P2 U)| / D = 1.
    uint64_t s_count;
    /// 2N - log2(s_count).
    double nu;
};

NullityReport stabilizer_nullity(const Matrix &u);

struct StateSre {
    double alpha;
    /// zeta_alpha = sum_P <P>^(2 alpha) / D.
    double purity;
    /// Renyi SRE (1 / (1 - alpha)) log2 zeta_alpha, with the alpha = 1 Shannon limit.
    double sre;
    /// 1 - zeta_2 (independent of alpha).
    double linear_sre;
};

/// Stabilizer Renyi entropy of U |psi>.
StateSre state_sre(const Matrix &u, const Vector &psi, double alpha);

/// <psi| P |psi> for every P in canonical order.
std::vector<double> pauli_expectations(const Vector &psi, size_t num_qubits);

/// |b> for the computational basis index b (site 0 is the most significant bit).
Vector basis_state(size_t num_qubits, size_t index);

/// A random Clifford mixing circuit (depth 3 n^2, plus one) applied to |0...0>.
Vector random_stabilizer_state(size_t num_qubits, uint64_t seed);

/// <psi| O |psi> for a Hermitian sparse operator.
double expectation(const SparseOperator &op, const Vector &psi);

}  // namespace opmagic::dense

#endif
