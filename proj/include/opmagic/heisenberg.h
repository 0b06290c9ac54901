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

#ifndef OPMAGIC_HEISENBERG_H
#define OPMAGIC_HEISENBERG_H

#include <vector>

#include "opmagic/circuit.h"
#include "opmagic/sparse_operator.h"

namespace opmagic {

/// Conjugates one Pauli string by a Clifford gate: g^dag P g = sign * P'.
/// Throws std::invalid_argument for non-Clifford kinds.
PauliTerm conjugate_clifford(const PauliString &p, const Gate &g);

/// g^dag O g.
///
/// Clifford kinds permute and sign-flip terms, so the rank is unchanged.
/// A rotation exp(-i theta Q) (Q = Z_q or Z_a Z_b) leaves terms commuting with Q
/// alone and sends an anticommuting P to cos(2 theta) P + sin(2 theta) P', where
/// P' is the Hermitian string proportional to -i P Q. Coefficients stay real and
/// the result is pruned at `prune_tolerance`.
SparseOperator conjugate_gate(
    const SparseOperator &op, const Gate &g, double prune_tolerance = DEFAULT_PRUNE_TOLERANCE);

/// U^dag O U for the circuit unitary U. Gates are conjugated last-to-first.
SparseOperator evolve_heisenberg(
    const SparseOperator &op, const Circuit &circuit, double prune_tolerance = DEFAULT_PRUNE_TOLERANCE);

/// Sorted sites where some term acts non-trivially.
std::vector<size_t> support(const SparseOperator &op);

}  // namespace opmagic

#endif
