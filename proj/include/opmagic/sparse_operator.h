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

#ifndef OPMAGIC_SPARSE_OPERATOR_H
#define OPMAGIC_SPARSE_OPERATOR_H

#include <cstddef>
#include <span>
#include <vector>

#include "opmagic/pauli_string.h"

namespace opmagic {

/// Coefficients with magnitude below this are dropped after every update.
/// Rank-based quantities (the alpha = 0 entropy) depend on this choice.
constexpr double DEFAULT_PRUNE_TOLERANCE = 1e-14;

struct PauliTerm {
    PauliString pauli;
    double coeff;

    bool operator==(const PauliTerm &other) const = default;
};

/// A real linear combination of Hermitian Pauli strings, O = sum_i a_i P_i.
///
/// Terms are kept sorted in canonical PauliString order with no duplicates
/// and no coefficient smaller than the prune tolerance in magnitude. Equality
/// is exact (bitwise on coefficients).
class SparseOperator {
   public:
    /// The zero operator.
    explicit SparseOperator(size_t num_qubits);

    static SparseOperator from_pauli(const PauliString &p, double coeff = 1.0);

    /// Sums duplicate strings (in input order) and prunes small coefficients.
    static SparseOperator from_terms(
        size_t num_qubits, std::vector<PauliTerm> terms, double prune_tolerance = DEFAULT_PRUNE_TOLERANCE);

    /// a_x X + a_y Y + a_z Z on `site`. Requires |a_x^2 + a_y^2 + a_z^2 - 1| < 1e-10.
    static SparseOperator from_local(size_t site, double a_x, double a_y, double a_z, size_t num_qubits);

    size_t num_qubits() const { return num_qubits_; }
    size_t rank() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    std::span<const PauliTerm> terms() const { return terms_; }

    /// Coefficient of `p`, zero if absent.
    double coefficient(const PauliString &p) const;

    /// sum_i a_i^2.
    double l2_weight() const;

    /// This operator on the low qubits and `other` on the following ones.
    SparseOperator tensor(const SparseOperator &other) const;

    /// Relabels sites: site k moves to `destination[k]`, which must be a permutation.
    SparseOperator permuted(std::span<const size_t> destination) const;

    SparseOperator scaled(double factor) const;

    bool operator==(const SparseOperator &other) const = default;

   private:
    size_t num_qubits_;
    std::vector<PauliTerm> terms_;
};

/// Outcome of keeping the chi largest Pauli terms of a unit-weight operator.
struct TruncationResult {
    /// Kept terms with their original (unrescaled) coefficients.
    SparseOperator kept;
    /// sqrt of the discarded weight: the Choi-state distance to the kept operator.
    double epsilon;
    double kept_weight;

    /// `kept` divided by sqrt(kept_weight), so its Choi state has unit norm.
    SparseOperator normalized() const;
};

/// Keeps the `chi` largest-|a| terms; ties go to the earlier canonical string.
/// Throws std::invalid_argument when chi == 0 or the input weight is not 1 (within 1e-8).
TruncationResult truncate_top(const SparseOperator &op, size_t chi);

/// Upper bound 1 - sqrt(1 - eps^2) + eps on |tr[(O - W) rho]| for a truncation at distance eps.
double expectation_error_bound(double epsilon);

}  // namespace opmagic

#endif
