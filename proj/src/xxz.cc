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

#include "opmagic/xxz.h"

#include <bit>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "opmagic/circuit.h"
#include "opmagic/heisenberg.h"
#include "opmagic/magic.h"

namespace opmagic {

namespace {

void require_seed(const XxzParams &p) {
    double norm = p.a_x * p.a_x + p.a_y * p.a_y + p.a_z * p.a_z;
    if (std::abs(norm - 1) > 1e-10) {
        std::stringstream ss;
        ss << "Seed coefficients must satisfy a_x^2 + a_y^2 + a_z^2 = 1 (got " << norm << ").";
        throw std::invalid_argument(ss.str());
    }
}

void require_alpha(double alpha) {
    if (!(alpha > 0) || std::isinf(alpha)) {
        throw std::invalid_argument("XXZ formulas need a finite Renyi index alpha > 0.");
    }
}

bool pure_z(const XxzParams &p) {
    return p.a_x == 0 && p.a_y == 0;
}

}  // namespace

double xxz_a_alpha(double a_x, double a_y, double a_z, double alpha) {
    require_alpha(alpha);
    if (a_x == 0 && a_y == 0) {
        throw std::invalid_argument("A_alpha is undefined for a pure Z seed.");
    }
    double e = 2 * alpha;
    return std::pow(std::abs(a_z), e) / (std::pow(std::abs(a_x), e) + std::pow(std::abs(a_y), e));
}

double closed_form_ose(const XxzParams &p) {
    require_seed(p);
    require_alpha(p.alpha);
    if (p.alpha == 1) {
        throw std::invalid_argument("closed_form_ose is singular at alpha = 1; use alpha1_ose.");
    }
    if (pure_z(p)) {
        return 0;
    }
    double a = xxz_a_alpha(p.a_x, p.a_y, p.a_z, p.alpha);
    double e = 2 * p.alpha;
    double g = std::pow(std::abs(std::cos(2 * p.J)), e) + std::pow(std::abs(std::sin(2 * p.J)), e);
    double ratio = (a + std::pow(g, static_cast<double>(p.t))) / (a + 1);
    return std::log2(ratio) / (1 - p.alpha);
}

double binary_entropy(double p) {
    if (p < 0 || p > 1) {
        throw std::domain_error("Binary entropy argument must lie in [0, 1].");
    }
    double h = 0;
    if (p > 0) {
        h -= p * std::log2(p);
    }
    if (p < 1) {
        h -= (1 - p) * std::log2(1 - p);
    }
    return h;
}

double alpha1_ose(const XxzParams &p) {
    require_seed(p);
    double c = std::cos(2 * p.J);
    double c2 = std::min(1.0, c * c);
    return static_cast<double>(p.t) * (p.a_x * p.a_x + p.a_y * p.a_y) * binary_entropy(c2);
}

double saturation_ose(const XxzParams &p) {
    require_seed(p);
    require_alpha(p.alpha);
    if (pure_z(p)) {
        return 0;
    }
    if (p.alpha == 1) {
        throw std::invalid_argument("The alpha = 1 OSE grows linearly and does not saturate.");
    }
    double a = xxz_a_alpha(p.a_x, p.a_y, p.a_z, p.alpha);
    if (a == 0) {
        throw std::domain_error("The OSE grows without bound when a_z = 0.");
    }
    return std::log2(a / (a + 1)) / (1 - p.alpha);
}

SparseOperator commuted_operator(size_t site, size_t t, double J, PauliAxis axis, size_t num_qubits) {
    if (axis == PauliAxis::Z) {
        throw std::invalid_argument("The commuted operator is defined for X or Y seeds.");
    }
    if (num_qubits < site + t + 1) {
        std::stringstream ss;
        ss << "commuted_operator needs at least " << site + t + 1 << " qubits, got " << num_qubits << ".";
        throw std::invalid_argument(ss.str());
    }
    if (t >= 63) {
        throw std::invalid_argument("commuted_operator expansion limited to t < 63.");
    }
    size_t head = site + t;
    PauliString sigma = PauliString::single_site(num_qubits, head, axis);
    double c = std::cos(2 * J);
    double s = std::sin(2 * J);
    constexpr std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<PauliTerm> terms;
    terms.reserve(size_t{1} << t);
    for (uint64_t subset = 0; subset < (uint64_t{1} << t); subset++) {
        int k = std::popcount(subset);
        uint64_t z = subset << site;
        if (k & 1) {
            z |= uint64_t{1} << head;
        }
        PauliProduct prod = pauli_mul(sigma, PauliString(num_qubits, 0, z));
        // (-i)^k from the expansion times i^e from the product.
        std::complex<double> phase = powers[(prod.phase_exponent + 3 * k) & 3];
        double mag = std::pow(c, static_cast<double>(t - k)) * std::pow(s, static_cast<double>(k));
        terms.push_back(PauliTerm{prod.result, mag * phase.real()});
    }
    return SparseOperator::from_terms(num_qubits, std::move(terms));
}

SparseOperator simulate_xxz(const XxzParams &p, long seed_site) {
    require_seed(p);
    size_t n = 2 * p.t + 2;
    if (n > MAX_QUBITS) {
        throw std::invalid_argument("Too many layers for the bitmask register.");
    }
    size_t site = seed_site < 0 ? p.t : static_cast<size_t>(seed_site);
    if (site >= n) {
        throw std::out_of_range("XXZ seed site outside the 2t + 2 qubit chain.");
    }
    SparseOperator seed = SparseOperator::from_local(site, p.a_x, p.a_y, p.a_z, n);
    Circuit c = brickwork_circuit(n, p.t, xxz_brick(p.J));
    return evolve_heisenberg(seed, c);
}

XxzComparison simulate_vs_closed(const XxzParams &p, long seed_site) {
    require_alpha(p.alpha);
    size_t n = 2 * p.t + 2;
    size_t site = seed_site < 0 ? p.t : static_cast<size_t>(seed_site);
    SparseOperator evolved = simulate_xxz(p, seed_site);
    SparseOperator seed = SparseOperator::from_local(site, p.a_x, p.a_y, p.a_z, n);
    double simulated = ose(evolved, seed, p.alpha).ose;
    double closed = p.alpha == 1 ? alpha1_ose(p) : closed_form_ose(p);
    return XxzComparison{simulated, closed, std::abs(simulated - closed)};
}

}  // namespace opmagic
