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

#ifndef OPMAGIC_MAGIC_H
#define OPMAGIC_MAGIC_H

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "opmagic/sparse_operator.h"

// Operator stabilizer entropies.
//
// For a unit-weight operator O = sum_i a_i P_i the squared coefficients
// Pi_i = a_i^2 form a probability vector. The generalized Pauli purity is
// P_alpha(O) = sum_i Pi_i^alpha and the operator stabilizer entropy of the
// evolved operator O_U relative to its seed O is
//
//     M_alpha(O_U) = (log2 P_alpha(O_U) - log2 P_alpha(O)) / (1 - alpha)
//
// with alpha = 0 (log-rank), 1 (Shannon) and infinity (min-entropy) taken as
// limits. All logarithms are base 2, so entropies are in bits.
//
// Non-integer alpha is accepted and evaluated with |a_i|^(2 alpha). The
// monotone properties are only established for integer alpha.

namespace opmagic {

constexpr double ALPHA_INFINITY = std::numeric_limits<double>::infinity();

struct OseReport {
    double alpha;
    /// P_alpha(O_U); the rank for alpha = 0, max Pi for alpha = infinity.
    double purity;
    /// M_alpha in bits.
    double ose;
    /// 1 - purity.
    double linear_ose;
    size_t rank;
    size_t support_size;
};

/// Pi_i = a_i^2 in canonical term order. Throws if the weight is not 1 within 1e-8.
std::vector<double> pauli_probs(const SparseOperator &op);

/// sum_i Pi_i^alpha for alpha > 0 (max Pi at infinity); alpha <= 0 returns the rank.
double purity(const SparseOperator &op, double alpha);

/// Renyi-alpha entropy (bits) of a probability vector, with the 0, 1, infinity limits.
double renyi_entropy(std::span<const double> probs, double alpha);

/// Stabilizer entropy of `evolved` offset by that of `initial`.
OseReport ose(const SparseOperator &evolved, const SparseOperator &initial, double alpha);

/// M_alpha(O_U) - M_0(O): a lower bound on the T-count of any circuit mapping O to O_U.
double t_count_lower_bound(const SparseOperator &evolved, const SparseOperator &initial, double alpha);

}  // namespace opmagic

#endif
