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

#ifndef OPMAGIC_HAAR_STATS_H
#define OPMAGIC_HAAR_STATS_H

// Haar-random unitaries and Monte-Carlo estimates of typical Pauli purities.
//
// Sample i always draws from the stream derive_seed(seed, i), so an estimate
// is a function of (seed, n_samples) only and does not depend on the number
// of worker threads.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "opmagic/dense_oracle.h"
#include "opmagic/rng.h"

namespace opmagic {

/// Largest dimension accepted by `sample_haar_unitary`.
constexpr size_t MAX_HAAR_DIM = 64;
/// Register limit for the Monte-Carlo purity studies.
constexpr size_t MAX_HAAR_QUBITS = 5;

struct McEstimate {
    double mean;
    /// Standard error of `mean`.
    double std_error;
    size_t n_samples;
    uint64_t seed;
};

/// QR of a complex Ginibre matrix with the phases of R's diagonal moved into Q.
dense::Matrix sample_haar_unitary(size_t dim, Rng &rng);
dense::Matrix sample_haar_unitary(size_t dim, uint64_t seed);

/// P^(alpha)(U^dag X_0 U) for each of `n_samples` Haar draws, in sample order.
std::vector<double> sample_haar_purities(
    size_t num_qubits, double alpha, size_t n_samples, uint64_t seed, size_t workers = 1);

/// Mean and standard error (sample std / sqrt(n)).
McEstimate summarize(std::span<const double> values, uint64_t seed);

McEstimate mc_average_purity(size_t num_qubits, double alpha, size_t n_samples, uint64_t seed, size_t workers = 1);

/// Monte-Carlo average of M^(alpha) = log2(P^(alpha)) / (1 - alpha) for the X_0 seed.
McEstimate mc_average_ose(size_t num_qubits, double alpha, size_t n_samples, uint64_t seed, size_t workers = 1);

/// Exact Haar average of P^(alpha) for alpha in {2, 3, 4, 5}.
double closed_form_avg_purity(size_t dim, int alpha);

/// (2 alpha - 1)!! / dim^(2 alpha - 2).
double asymptotic_avg_purity(size_t dim, int alpha);

/// 2N + log2((2 alpha - 1)!!) / (1 - alpha).
double asymptotic_ose(size_t num_qubits, int alpha);

/// (2k - 1)!! = 1 * 3 * ... * (2k - 1).
double odd_double_factorial(int k);

/// sqrt(Var[P^(2)]) / E[P^(2)], with a jackknife standard error.
McEstimate relative_fluctuation(size_t num_qubits, size_t n_samples, uint64_t seed, size_t workers = 1);

/// Same estimator applied to precomputed purities.
McEstimate relative_fluctuation(std::span<const double> purities, uint64_t seed);

}  // namespace opmagic

#endif
