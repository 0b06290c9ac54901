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

#ifndef OPMAGIC_XXZ_H
#define OPMAGIC_XXZ_H

// The dual-unitary XXZ brickwork: every brick is RZZ(J) followed by SWAP.
//
// For a local seed O = a_x X + a_y Y + a_z Z and t layers the OSE is
//
//     M_alpha = log2[(A + (cos^{2 alpha}(2J) + sin^{2 alpha}(2J))^t) / (A + 1)] / (1 - alpha)
//
// with A = a_z^{2 alpha} / (a_x^{2 alpha} + a_y^{2 alpha}).

#include <cstddef>
#include <cstdint>

#include "opmagic/pauli_string.h"
#include "opmagic/sparse_operator.h"

namespace opmagic {

struct XxzParams {
    double J = 0;
    size_t t = 0;
    double a_x = 1;
    double a_y = 0;
    double a_z = 0;
    double alpha = 2;
};

/// A_alpha for the seed coefficients. Throws when a_x = a_y = 0.
double xxz_a_alpha(double a_x, double a_y, double a_z, double alpha);

/// Closed-form OSE in bits. Throws for alpha = 1; a pure Z seed returns 0.
double closed_form_ose(const XxzParams &p);

/// t (a_x^2 + a_y^2) H2(cos^2(2J)), the alpha -> 1 limit of `closed_form_ose`.
double alpha1_ose(const XxzParams &p);

/// t -> infinity limit of `closed_form_ose` (t is ignored).
double saturation_ose(const XxzParams &p);

/// Binary Shannon entropy in bits.
double binary_entropy(double p);

/// sigma^{(j+t)} exp(-2iJ sum_{i<t} Z^{(j+t)} Z^{(j+i)}) expanded in Pauli strings.
/// `axis` must be X or Y.
SparseOperator commuted_operator(size_t site, size_t t, double J, PauliAxis axis, size_t num_qubits);

struct XxzComparison {
    double simulated;
    double closed;
    double abs_diff;
};

/// Evolves the local seed through p.t brickwork layers on 2t + 2 qubits and compares
/// the simulated OSE with the closed form (alpha = 1 uses `alpha1_ose`).
/// `seed_site` defaults to the chain centre t when negative.
XxzComparison simulate_vs_closed(const XxzParams &p, long seed_site = -1);

/// The operator produced by `simulate_vs_closed` (2t + 2 qubits).
SparseOperator simulate_xxz(const XxzParams &p, long seed_site = -1);

}  // namespace opmagic

#endif
