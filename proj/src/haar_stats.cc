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

#include "opmagic/haar_stats.h"

#include <cmath>
#include <initializer_list>
#include <random>
#include <sstream>
#include <stdexcept>

#include "opmagic/magic.h"
#include "opmagic/parallel.h"

namespace opmagic {

namespace {

void require_haar_qubits(size_t n) {
    if (n == 0 || n > MAX_HAAR_QUBITS) {
        std::stringstream ss;
        ss << "Haar studies need 1 to " << MAX_HAAR_QUBITS << " qubits, got " << n << ".";
        throw std::invalid_argument(ss.str());
    }
}

void require_samples(size_t n_samples, size_t minimum) {
    if (n_samples < minimum) {
        std::stringstream ss;
        ss << "Need at least " << minimum << " samples, got " << n_samples << ".";
        throw std::invalid_argument(ss.str());
    }
}

double haar_purity_sample(size_t n, double alpha, uint64_t seed) {
    size_t dim = size_t{1} << n;
    dense::Matrix u = sample_haar_unitary(dim, seed);
    dense::Matrix evolved = u.adjoint() * dense::pauli_matrix(PauliString::single_site(n, 0, PauliAxis::X)) * u;
    auto coeffs = dense::pauli_decomposition(evolved, n);
    std::vector<double> probs;
    probs.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        probs.push_back(std::norm(c));
    }
    if (alpha == 1) {
        return std::exp2(-renyi_entropy(probs, 1));
    }
    double total = 0;
    for (double p : probs) {
        total += std::pow(p, alpha);
    }
    return total;
}

double poly(double x, std::initializer_list<double> coeffs_high_first) {
    double acc = 0;
    for (double c : coeffs_high_first) {
        acc = acc * x + c;
    }
    return acc;
}

}  // namespace

dense::Matrix sample_haar_unitary(size_t dim, Rng &rng) {
    if (dim == 0 || dim > MAX_HAAR_DIM) {
        std::stringstream ss;
        ss << "Haar dimension must be in [1, " << MAX_HAAR_DIM << "], got " << dim << ".";
        throw std::invalid_argument(ss.str());
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    dense::Matrix g(dim, dim);
    for (size_t c = 0; c < dim; c++) {
        for (size_t r = 0; r < dim; r++) {
            double re = gauss(rng);
            double im = gauss(rng);
            g(r, c) = dense::Complex(re, im);
        }
    }
    Eigen::HouseholderQR<dense::Matrix> qr(g);
    dense::Matrix q = qr.householderQ();
    const dense::Matrix &packed = qr.matrixQR();
    for (size_t j = 0; j < dim; j++) {
        dense::Complex d = packed(j, j);
        double mag = std::abs(d);
        if (mag > 0) {
            q.col(j) *= d / mag;
        }
    }
    return q;
}

dense::Matrix sample_haar_unitary(size_t dim, uint64_t seed) {
    Rng rng(seed);
    return sample_haar_unitary(dim, rng);
}

std::vector<double> sample_haar_purities(
    size_t num_qubits, double alpha, size_t n_samples, uint64_t seed, size_t workers) {
    require_haar_qubits(num_qubits);
    if (!(alpha > 0) || std::isinf(alpha)) {
        throw std::invalid_argument("Haar purity index must be a finite alpha > 0.");
    }
    std::vector<double> out(n_samples);
    parallel_for(n_samples, workers, [&](size_t i) {
        out[i] = haar_purity_sample(num_qubits, alpha, derive_seed(seed, i));
    });
    return out;
}

McEstimate summarize(std::span<const double> values, uint64_t seed) {
    require_samples(values.size(), 2);
    double n = static_cast<double>(values.size());
    double mean = 0;
    for (double v : values) {
        mean += v;
    }
    mean /= n;
    double ss = 0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    double var = ss / (n - 1);
    return McEstimate{mean, std::sqrt(var / n), values.size(), seed};
}

McEstimate mc_average_purity(size_t num_qubits, double alpha, size_t n_samples, uint64_t seed, size_t workers) {
    require_samples(n_samples, 2);
    auto p = sample_haar_purities(num_qubits, alpha, n_samples, seed, workers);
    return summarize(p, seed);
}

McEstimate mc_average_ose(size_t num_qubits, double alpha, size_t n_samples, uint64_t seed, size_t workers) {
    require_samples(n_samples, 2);
    auto p = sample_haar_purities(num_qubits, alpha, n_samples, seed, workers);
    for (double &v : p) {
        v = alpha == 1 ? -std::log2(v) : std::log2(v) / (1 - alpha);
    }
    return summarize(p, seed);
}

double closed_form_avg_purity(size_t dim, int alpha) {
    if (alpha < 2 || alpha > 5) {
        throw std::invalid_argument("Closed-form Haar purity is available for alpha in {2, 3, 4, 5}.");
    }
    if (dim < 2) {
        throw std::invalid_argument("Closed-form Haar purity needs dim >= 2.");
    }
    double d = static_cast<double>(dim);
    double x = d * d;
    double num = 0;
    double den = 0;
    switch (alpha) {
        case 2:
            num = 3 * (x - 8);
            den = x * (x - 9);
            break;
        case 3:
            num = 15 * poly(x, {1, -33, 216, -256});
            den = x * x * poly(x, {1, -35, 259, -225});
            break;
        case 4:
            num = 105 * poly(x, {1, -81, 1776, -10432, 15360});
            den = x * x * x * poly(x, {1, -84, 1974, -12916, 11025});
            break;
        case 5:
            num = 945 * poly(x, {1, -170, 9657, -224080, 2199488, -8985600, 12386304});
            den = x * x * x * x * (x - 9) * (x - 9) * poly(x, {1, -156, 7374, -106444, 99225});
            break;
    }
    if (den == 0) {
        std::stringstream ss;
        ss << "Closed-form Haar purity P^(" << alpha << ") has a pole at dim = " << dim << ".";
        throw std::domain_error(ss.str());
    }
    return num / den;
}

double odd_double_factorial(int k) {
    if (k < 0) {
        throw std::invalid_argument("Double factorial index must be non-negative.");
    }
    double r = 1;
    for (int j = 1; j <= k; j++) {
        r *= 2 * j - 1;
    }
    return r;
}

double asymptotic_avg_purity(size_t dim, int alpha) {
    if (alpha < 1) {
        throw std::invalid_argument("Asymptotic Haar purity needs integer alpha >= 1.");
    }
    if (dim == 0) {
        throw std::invalid_argument("Dimension must be positive.");
    }
    return odd_double_factorial(alpha) / std::pow(static_cast<double>(dim), 2 * alpha - 2);
}

double asymptotic_ose(size_t num_qubits, int alpha) {
    if (alpha < 2) {
        throw std::invalid_argument("Asymptotic OSE needs integer alpha >= 2.");
    }
    return 2.0 * static_cast<double>(num_qubits) + std::log2(odd_double_factorial(alpha)) / (1 - alpha);
}

McEstimate relative_fluctuation(std::span<const double> purities, uint64_t seed) {
    require_samples(purities.size(), 3);
    size_t count = purities.size();
    double n = static_cast<double>(count);
    double s1 = 0;
    double s2 = 0;
    for (double v : purities) {
        s1 += v;
        s2 += v * v;
    }
    auto fluct = [](double sum, double sum_sq, double m) {
        double mean = sum / m;
        double var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1));
        return std::sqrt(var) / mean;
    };
    double full = fluct(s1, s2, n);
    std::vector<double> loo(count);
    double loo_mean = 0;
    for (size_t i = 0; i < count; i++) {
        double v = purities[i];
        loo[i] = fluct(s1 - v, s2 - v * v, n - 1);
        loo_mean += loo[i];
    }
    loo_mean /= n;
    double acc = 0;
    for (double f : loo) {
        acc += (f - loo_mean) * (f - loo_mean);
    }
    return McEstimate{full, std::sqrt((n - 1) / n * acc), count, seed};
}

McEstimate relative_fluctuation(size_t num_qubits, size_t n_samples, uint64_t seed, size_t workers) {
    require_samples(n_samples, 3);
    auto p = sample_haar_purities(num_qubits, 2, n_samples, seed, workers);
    return relative_fluctuation(p, seed);
}

}  // namespace opmagic
