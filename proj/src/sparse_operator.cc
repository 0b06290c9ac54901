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

#include "opmagic/sparse_operator.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace opmagic {

SparseOperator::SparseOperator(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("SparseOperator qubit count out of range.");
    }
}

SparseOperator SparseOperator::from_pauli(const PauliString &p, double coeff) {
    return from_terms(p.num_qubits(), {PauliTerm{p, coeff}});
}

SparseOperator SparseOperator::from_terms(size_t num_qubits, std::vector<PauliTerm> terms, double prune_tolerance) {
    SparseOperator result(num_qubits);
    for (const auto &t : terms) {
        if (t.pauli.num_qubits() != num_qubits) {
            throw std::invalid_argument("Pauli term size does not match operator size.");
        }
    }
    // Stable sort keeps duplicates in input order, so the summation order is fixed.
    std::stable_sort(terms.begin(), terms.end(), [](const PauliTerm &a, const PauliTerm &b) {
        return a.pauli < b.pauli;
    });
    std::vector<PauliTerm> merged;
    merged.reserve(terms.size());
    for (size_t k = 0; k < terms.size();) {
        size_t end = k;
        double sum = 0;
        while (end < terms.size() && terms[end].pauli == terms[k].pauli) {
            sum += terms[end].coeff;
            end++;
        }
        if (sum != 0 && std::abs(sum) >= prune_tolerance) {
            merged.push_back(PauliTerm{terms[k].pauli, sum});
        }
        k = end;
    }
    result.terms_ = std::move(merged);
    return result;
}

SparseOperator SparseOperator::from_local(size_t site, double a_x, double a_y, double a_z, size_t num_qubits) {
    double norm = a_x * a_x + a_y * a_y + a_z * a_z;
    if (std::abs(norm - 1) >= 1e-10) {
        std::stringstream ss;
        ss << "Local operator coefficients must satisfy a_x^2 + a_y^2 + a_z^2 = 1 (got " << norm << ").";
        throw std::invalid_argument(ss.str());
    }
    return from_terms(
        num_qubits,
        {
            PauliTerm{PauliString::single_site(num_qubits, site, PauliAxis::X), a_x},
            PauliTerm{PauliString::single_site(num_qubits, site, PauliAxis::Y), a_y},
            PauliTerm{PauliString::single_site(num_qubits, site, PauliAxis::Z), a_z},
        });
}

double SparseOperator::coefficient(const PauliString &p) const {
    if (p.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Coefficient lookup with mismatched qubit count.");
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p, [](const PauliTerm &t, const PauliString &key) {
        return t.pauli < key;
    });
    if (it != terms_.end() && it->pauli == p) {
        return it->coeff;
    }
    return 0;
}

double SparseOperator::l2_weight() const {
    double total = 0;
    for (const auto &t : terms_) {
        total += t.coeff * t.coeff;
    }
    return total;
}

SparseOperator SparseOperator::tensor(const SparseOperator &other) const {
    size_t n = num_qubits_ + other.num_qubits_;
    if (n > MAX_QUBITS) {
        throw std::invalid_argument("Tensor product exceeds the qubit limit.");
    }
    std::vector<PauliTerm> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const auto &a : terms_) {
        for (const auto &b : other.terms_) {
            uint64_t x = a.pauli.x_mask() | (b.pauli.x_mask() << num_qubits_);
            uint64_t z = a.pauli.z_mask() | (b.pauli.z_mask() << num_qubits_);
            out.push_back(PauliTerm{PauliString(n, x, z), a.coeff * b.coeff});
        }
    }
    return from_terms(n, std::move(out), 0);
}

SparseOperator SparseOperator::permuted(std::span<const size_t> destination) const {
    if (destination.size() != num_qubits_) {
        throw std::invalid_argument("Permutation size does not match operator size.");
    }
    std::vector<bool> seen(num_qubits_, false);
    for (size_t d : destination) {
        if (d >= num_qubits_ || seen[d]) {
            throw std::invalid_argument("Site relabeling is not a permutation.");
        }
        seen[d] = true;
    }
    std::vector<PauliTerm> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        uint64_t x = 0;
        uint64_t z = 0;
        for (size_t k = 0; k < num_qubits_; k++) {
            x |= ((t.pauli.x_mask() >> k) & 1) << destination[k];
            z |= ((t.pauli.z_mask() >> k) & 1) << destination[k];
        }
        out.push_back(PauliTerm{PauliString(num_qubits_, x, z), t.coeff});
    }
    return from_terms(num_qubits_, std::move(out), 0);
}

SparseOperator SparseOperator::scaled(double factor) const {
    std::vector<PauliTerm> out(terms_.begin(), terms_.end());
    for (auto &t : out) {
        t.coeff *= factor;
    }
    return from_terms(num_qubits_, std::move(out), 0);
}

SparseOperator TruncationResult::normalized() const {
    if (kept_weight <= 0) {
        throw std::domain_error("Cannot normalize an empty truncation.");
    }
    return kept.scaled(1 / std::sqrt(kept_weight));
}

TruncationResult truncate_top(const SparseOperator &op, size_t chi) {
    if (chi == 0) {
        throw std::invalid_argument("Truncation rank chi must be positive.");
    }
    double weight = op.l2_weight();
    if (std::abs(weight - 1) > 1e-8) {
        std::stringstream ss;
        ss << "Truncation expects a unit-weight operator (weight " << weight << ").";
        throw std::invalid_argument(ss.str());
    }
    auto terms = op.terms();
    std::vector<size_t> order(terms.size());
    std::iota(order.begin(), order.end(), 0);
    // Terms are already canonical, so a stable sort on |a| breaks ties canonically.
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::abs(terms[a].coeff) > std::abs(terms[b].coeff);
    });
    size_t keep = std::min(chi, terms.size());
    std::vector<PauliTerm> kept;
    kept.reserve(keep);
    for (size_t k = 0; k < keep; k++) {
        kept.push_back(terms[order[k]]);
    }
    double discarded = 0;
    for (size_t k = keep; k < order.size(); k++) {
        discarded += terms[order[k]].coeff * terms[order[k]].coeff;
    }
    double kept_weight = 0;
    for (const auto &t : kept) {
        kept_weight += t.coeff * t.coeff;
    }
    return TruncationResult{
        SparseOperator::from_terms(op.num_qubits(), std::move(kept), 0),
        std::sqrt(discarded),
        kept_weight,
    };
}

double expectation_error_bound(double epsilon) {
    if (!(epsilon >= 0 && epsilon <= 1)) {
        throw std::domain_error("Truncation error must lie in [0, 1].");
    }
    return 1 - std::sqrt(1 - epsilon * epsilon) + epsilon;
}

}  // namespace opmagic
