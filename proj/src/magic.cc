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

#include "opmagic/magic.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "opmagic/heisenberg.h"

namespace opmagic {

namespace {

void require_unit_weight(const SparseOperator &op) {
    double w = op.l2_weight();
    if (std::abs(w - 1) > 1e-8) {
        std::stringstream ss;
        ss << "Operator must have unit Pauli weight (sum a_i^2 = " << w << ").";
        throw std::invalid_argument(ss.str());
    }
}

double purity_of(std::span<const double> probs, double alpha) {
    if (std::isinf(alpha)) {
        double best = 0;
        for (double p : probs) {
            best = std::max(best, p);
        }
        return best;
    }
    if (alpha <= 0) {
        return static_cast<double>(probs.size());
    }
    double total = 0;
    if (alpha == std::floor(alpha) && alpha <= 8) {
        int k = static_cast<int>(alpha);
        for (double p : probs) {
            double v = 1;
            for (int j = 0; j < k; j++) {
                v *= p;
            }
            total += v;
        }
    } else {
        for (double p : probs) {
            total += std::pow(p, alpha);
        }
    }
    return total;
}

double shannon_bits(std::span<const double> probs) {
    double h = 0;
    for (double p : probs) {
        if (p > 0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

std::vector<double> squared(const SparseOperator &op) {
    std::vector<double> out;
    out.reserve(op.rank());
    for (const auto &t : op.terms()) {
        out.push_back(t.coeff * t.coeff);
    }
    return out;
}

}  // namespace

std::vector<double> pauli_probs(const SparseOperator &op) {
    require_unit_weight(op);
    return squared(op);
}

double purity(const SparseOperator &op, double alpha) {
    require_unit_weight(op);
    auto probs = squared(op);
    return purity_of(probs, alpha);
}

double renyi_entropy(std::span<const double> probs, double alpha) {
    if (std::isnan(alpha)) {
        throw std::invalid_argument("Renyi index is NaN.");
    }
    if (alpha <= 0) {
        return std::log2(static_cast<double>(probs.size()));
    }
    if (alpha == 1) {
        return shannon_bits(probs);
    }
    if (std::isinf(alpha)) {
        return -std::log2(purity_of(probs, alpha));
    }
    return std::log2(purity_of(probs, alpha)) / (1 - alpha);
}

OseReport ose(const SparseOperator &evolved, const SparseOperator &initial, double alpha) {
    if (evolved.num_qubits() != initial.num_qubits()) {
        throw std::invalid_argument("Evolved and initial operators have different qubit counts.");
    }
    auto pe = pauli_probs(evolved);
    auto pi = pauli_probs(initial);
    OseReport r{};
    r.alpha = alpha;
    r.ose = renyi_entropy(pe, alpha) - renyi_entropy(pi, alpha);
    r.purity = purity_of(pe, alpha);
    r.linear_ose = 1 - r.purity;
    r.rank = evolved.rank();
    r.support_size = support(evolved).size();
    return r;
}

double t_count_lower_bound(const SparseOperator &evolved, const SparseOperator &initial, double alpha) {
    if (evolved.num_qubits() != initial.num_qubits()) {
        throw std::invalid_argument("Evolved and initial operators have different qubit counts.");
    }
    auto pe = pauli_probs(evolved);
    require_unit_weight(initial);
    return renyi_entropy(pe, alpha) - std::log2(static_cast<double>(initial.rank()));
}

}  // namespace opmagic
