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

#include <gtest/gtest.h>

#include <cmath>

using namespace opmagic;

TEST(haar_stats, sample_is_unitary_and_seeded) {
    for (size_t dim : {1, 2, 4, 7, 32, 64}) {
        dense::Matrix u = sample_haar_unitary(dim, 3);
        EXPECT_LT(dense::unitarity_defect(u), 1e-10) << dim;
    }
    EXPECT_EQ(sample_haar_unitary(8, 5), sample_haar_unitary(8, 5));
    EXPECT_GT((sample_haar_unitary(8, 5) - sample_haar_unitary(8, 6)).cwiseAbs().maxCoeff(), 1e-3);
    EXPECT_THROW(sample_haar_unitary(65, 1), std::invalid_argument);
    EXPECT_THROW(sample_haar_unitary(0, 1), std::invalid_argument);
}

TEST(haar_stats, first_moment_of_entries) {
    const size_t dim = 4;
    const size_t samples = 1000;
    std::vector<double> v;
    std::vector<double> diag_phase;
    for (size_t k = 0; k < samples; k++) {
        dense::Matrix u = sample_haar_unitary(dim, derive_seed(77, k));
        v.push_back(std::norm(u(0, 0)));
        diag_phase.push_back(u(1, 1).real());
    }
    McEstimate m = summarize(v, 77);
    EXPECT_LT(std::abs(m.mean - 1.0 / dim), 3 * m.std_error);
    // The phase-corrected QR has no bias on diagonal entries.
    McEstimate d = summarize(diag_phase, 77);
    EXPECT_LT(std::abs(d.mean), 3 * d.std_error);
}

TEST(haar_stats, summarize) {
    std::vector<double> v = {1, 2, 3, 4};
    McEstimate m = summarize(v, 9);
    EXPECT_EQ(m.mean, 2.5);
    EXPECT_NEAR(m.std_error, std::sqrt((1.25 * 4 / 3) / 4), 1e-15);
    EXPECT_EQ(m.n_samples, 4u);
    EXPECT_EQ(m.seed, 9u);
    std::vector<double> one = {1};
    EXPECT_THROW(summarize(one, 0), std::invalid_argument);
}

TEST(haar_stats, closed_forms) {
    EXPECT_NEAR(closed_form_avg_purity(4, 2), 3.0 / 14, 1e-15);
    EXPECT_NEAR(closed_form_avg_purity(4, 3), 1.0 / 14, 1e-15);
    EXPECT_NEAR(closed_form_avg_purity(4, 4), 1.0 / 33, 1e-15);
    EXPECT_NEAR(closed_form_avg_purity(4, 5), 15.0 / 1001, 1e-15);
    EXPECT_NEAR(closed_form_avg_purity(64, 2), 3.0 * (4096 - 8) / (4096.0 * 4087), 1e-18);
    // A single qubit: U^dag X U = n.sigma with n uniform on the sphere, and E[n_x^{2a}] = 1/(2a+1).
    for (int a = 2; a <= 5; a++) {
        EXPECT_NEAR(closed_form_avg_purity(2, a), 3.0 / (2 * a + 1), 1e-14) << a;
    }
    EXPECT_THROW(closed_form_avg_purity(3, 2), std::domain_error);
    EXPECT_THROW(closed_form_avg_purity(3, 5), std::domain_error);
    EXPECT_THROW(closed_form_avg_purity(5, 3), std::domain_error);
    EXPECT_THROW(closed_form_avg_purity(1, 2), std::invalid_argument);
    EXPECT_THROW(closed_form_avg_purity(4, 1), std::invalid_argument);
    EXPECT_THROW(closed_form_avg_purity(4, 6), std::invalid_argument);
}

TEST(haar_stats, asymptotics) {
    EXPECT_EQ(odd_double_factorial(0), 1.0);
    EXPECT_EQ(odd_double_factorial(5), 945.0);
    EXPECT_EQ(asymptotic_avg_purity(7, 1), 1.0);
    EXPECT_EQ(asymptotic_avg_purity(4, 2), 3.0 / 16);
    EXPECT_EQ(asymptotic_ose(5, 2), 10 - std::log2(3.0));
    EXPECT_EQ(asymptotic_ose(5, 3), 10 - std::log2(15.0) / 2);
    double prev = 0;
    for (int a = 2; a <= 5; a++) {
        double corr = 2 * 3 - asymptotic_ose(3, a);
        EXPECT_GT(corr, prev);
        prev = corr;
    }
    for (size_t n = 2; n <= 6; n++) {
        double d = std::exp2(static_cast<double>(n));
        double ratio = closed_form_avg_purity(static_cast<size_t>(d), 2) / asymptotic_avg_purity(static_cast<size_t>(d), 2);
        EXPECT_NEAR(ratio, (d * d - 8) / (d * d - 9), 1e-13);
    }
    EXPECT_THROW(asymptotic_ose(3, 1), std::invalid_argument);
    EXPECT_THROW(asymptotic_avg_purity(4, 0), std::invalid_argument);
}

TEST(haar_stats, mc_single_qubit_matches_closed_forms) {
    for (int a = 2; a <= 5; a++) {
        McEstimate m = mc_average_purity(1, a, 2000, 1234);
        EXPECT_LT(std::abs(m.mean - closed_form_avg_purity(2, a)), 3 * m.std_error) << a;
    }
}

TEST(haar_stats, mc_two_qubits_alpha2) {
    McEstimate m = mc_average_purity(2, 2, 2000, 42);
    EXPECT_LT(std::abs(m.mean - 3.0 / 14), 3 * m.std_error);
    EXPECT_EQ(m.n_samples, 2000u);
    EXPECT_EQ(m.seed, 42u);
}

TEST(haar_stats, typical_ose_exceeds_jensen_bound) {
    McEstimate m = mc_average_ose(2, 2, 1000, 8);
    EXPECT_GT(m.mean, std::log2(14.0 / 3));
    McEstimate s = mc_average_ose(1, 1, 500, 8);
    EXPECT_GT(s.mean, 0);
    EXPECT_LT(s.mean, 2);
}

TEST(haar_stats, worker_count_does_not_change_results) {
    auto a = sample_haar_purities(2, 2, 64, 5, 1);
    auto b = sample_haar_purities(2, 2, 64, 5, 3);
    auto c = sample_haar_purities(2, 2, 64, 5, 8);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    McEstimate f1 = relative_fluctuation(2, 200, 4, 1);
    McEstimate f2 = relative_fluctuation(2, 200, 4, 2);
    EXPECT_EQ(f1.mean, f2.mean);
    EXPECT_EQ(f1.std_error, f2.std_error);
}

TEST(haar_stats, input_validation) {
    EXPECT_THROW(mc_average_purity(0, 2, 10, 1), std::invalid_argument);
    EXPECT_THROW(mc_average_purity(6, 2, 10, 1), std::invalid_argument);
    EXPECT_THROW(mc_average_purity(2, 0, 10, 1), std::invalid_argument);
    EXPECT_THROW(mc_average_purity(2, 2, 1, 1), std::invalid_argument);
    EXPECT_THROW(relative_fluctuation(2, 2, 1), std::invalid_argument);
}

TEST(haar_stats, relative_fluctuation_estimator) {
    std::vector<double> v = {1, 1, 1, 1};
    McEstimate zero = relative_fluctuation(v, 0);
    EXPECT_EQ(zero.mean, 0.0);
    std::vector<double> w = {1, 2, 3, 4, 5, 6};
    McEstimate f = relative_fluctuation(w, 0);
    EXPECT_NEAR(f.mean, std::sqrt(3.5) / 3.5, 1e-15);
    EXPECT_GT(f.std_error, 0);
}
