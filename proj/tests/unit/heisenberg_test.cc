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

#include "opmagic/heisenberg.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "opmagic/rng.h"
#include "oracle.h"

using namespace opmagic;

namespace {

PauliString L(const char *s) {
    return PauliString::from_letters(s);
}

/// Asserts every coefficient of `sparse` equals tr[U^dag O U P] / D from the kron oracle.
void expect_matches_oracle(const SparseOperator &seed, const Circuit &c, const SparseOperator &sparse, double tol) {
    oracle::M u = oracle::unitary(c);
    oracle::M evolved = u.adjoint() * oracle::op(seed) * u;
    for (const auto &p : enumerate_paulis(seed.num_qubits())) {
        oracle::C expect = oracle::overlap(evolved, p.str());
        ASSERT_NEAR(expect.imag(), 0.0, 1e-12);
        ASSERT_NEAR(sparse.coefficient(p), expect.real(), tol) << p.str();
    }
}

}  // namespace

TEST(heisenberg, t_conjugates_x) {
    SparseOperator x = SparseOperator::from_pauli(L("X"));
    SparseOperator out = conjugate_gate(x, Gate::single(GateKind::T, 0));
    double r = 1 / std::numbers::sqrt2;
    ASSERT_EQ(out.rank(), 2u);
    EXPECT_NEAR(out.coefficient(L("X")), r, 1e-15);
    EXPECT_NEAR(out.coefficient(L("Y")), -r, 1e-15);
    expect_matches_oracle(x, Circuit(1, {Gate::single(GateKind::T, 0)}), out, 1e-14);
}

TEST(heisenberg, clifford_examples) {
    SparseOperator x = SparseOperator::from_pauli(L("X"));
    EXPECT_EQ(conjugate_gate(x, Gate::single(GateKind::H, 0)), SparseOperator::from_pauli(L("Z")));
    SparseOperator xi = SparseOperator::from_pauli(L("XI"));
    SparseOperator rzz = conjugate_gate(xi, Gate::rzz(0, 1, std::numbers::pi / 4));
    ASSERT_EQ(rzz.rank(), 1u);
    EXPECT_EQ(rzz.terms()[0].pauli.str(), "YZ");
    EXPECT_NEAR(std::abs(rzz.terms()[0].coeff), 1.0, 1e-15);
}

TEST(heisenberg, clifford_rules_match_dense) {
    const GateKind singles[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Y, GateKind::Z};
    const GateKind pairs[] = {GateKind::CNOT, GateKind::CZ, GateKind::SWAP};
    std::vector<Gate> gates;
    for (auto k : singles) {
        gates.push_back(Gate::single(k, 0));
        gates.push_back(Gate::single(k, 1));
    }
    for (auto k : pairs) {
        gates.push_back(Gate::pair(k, 0, 1));
        gates.push_back(Gate::pair(k, 1, 0));
    }
    for (const auto &g : gates) {
        oracle::M u = oracle::gate(g, 2);
        for (const auto &p : enumerate_paulis(2)) {
            PauliTerm image = conjugate_clifford(p, g);
            oracle::M lhs = u.adjoint() * oracle::pauli(p) * u;
            oracle::M rhs = image.coeff * oracle::pauli(image.pauli);
            ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << gate_name(g.kind) << " on " << p.str();
        }
    }
    EXPECT_THROW(conjugate_clifford(L("X"), Gate::single(GateKind::T, 0)), std::invalid_argument);
}

TEST(heisenberg, rotations_match_dense) {
    std::vector<Gate> gates = {Gate::single(GateKind::T, 1), Gate::single(GateKind::Tdg, 0), Gate::rz(1, 0.37),
                               Gate::rz(0, -2.1), Gate::rzz(0, 1, 0.61), Gate::rzz(1, 0, -1.3)};
    for (const auto &g : gates) {
        for (const auto &p : enumerate_paulis(2)) {
            SparseOperator seed = SparseOperator::from_pauli(p);
            Circuit c(2, {g});
            expect_matches_oracle(seed, c, conjugate_gate(seed, g), 1e-14);
        }
    }
}

TEST(heisenberg, evolve_examples) {
    SparseOperator x = SparseOperator::from_pauli(L("XII"));
    EXPECT_EQ(evolve_heisenberg(x, Circuit(3)), x);

    SparseOperator t1 = evolve_heisenberg(SparseOperator::from_pauli(L("X")), Circuit(1, {Gate::single(GateKind::T, 0)}));
    ASSERT_EQ(t1.rank(), 2u);
    for (const auto &t : t1.terms()) {
        EXPECT_NEAR(t.coeff * t.coeff, 0.5, 1e-15);
    }

    Circuit tt(2, {Gate::single(GateKind::T, 0), Gate::single(GateKind::T, 1)});
    SparseOperator t2 = evolve_heisenberg(SparseOperator::from_pauli(L("XX")), tt);
    ASSERT_EQ(t2.rank(), 4u);
    for (const auto &t : t2.terms()) {
        EXPECT_NEAR(t.coeff * t.coeff, 0.25, 1e-15);
    }
    EXPECT_THROW(evolve_heisenberg(x, Circuit(2)), std::invalid_argument);
    EXPECT_THROW(conjugate_gate(SparseOperator::from_pauli(L("X")), Gate::single(GateKind::H, 1)), std::out_of_range);
}

TEST(heisenberg, reverse_order_convention) {
    // U = S H (H first). U^dag X U = H^dag S^dag X S H = H^dag (-Y) H = Y.
    Circuit c(1, {Gate::single(GateKind::H, 0), Gate::single(GateKind::S, 0)});
    SparseOperator out = evolve_heisenberg(SparseOperator::from_pauli(L("X")), c);
    expect_matches_oracle(SparseOperator::from_pauli(L("X")), c, out, 1e-15);
    EXPECT_EQ(out, SparseOperator::from_pauli(L("Y")));
}

TEST(heisenberg, random_circuits_match_dense) {
    for (uint64_t seed = 0; seed < 40; seed++) {
        size_t n = 1 + seed % 4;
        Circuit c = random_mixed_circuit(n, 12, seed);
        Rng rng(derive_seed(99, seed));
        PauliString p = pauli_from_index(n, 1 + uniform_below(rng, (uint64_t{1} << (2 * n)) - 1));
        SparseOperator s = SparseOperator::from_pauli(p);
        expect_matches_oracle(s, c, evolve_heisenberg(s, c), 1e-10);
    }
}

TEST(heisenberg, weight_and_rank_laws) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        size_t n = 5;
        Circuit c = random_mixed_circuit(n, 40, seed + 100);
        SparseOperator cur = SparseOperator::from_pauli(pauli_from_index(n, 1 + seed));
        for (const auto &g : c.gates()) {
            SparseOperator next = conjugate_gate(cur, g);
            ASSERT_NEAR(next.l2_weight(), cur.l2_weight(), 1e-12);
            if (gate_is_clifford(g.kind)) {
                ASSERT_EQ(next.rank(), cur.rank());
            } else {
                ASSERT_LE(next.rank(), 2 * cur.rank());
            }
            for (const auto &t : next.terms()) {
                ASSERT_TRUE(std::isfinite(t.coeff));
                ASSERT_GE(std::abs(t.coeff), DEFAULT_PRUNE_TOLERANCE);
            }
            cur = next;
        }
        ASSERT_NEAR(cur.l2_weight(), 1.0, 1e-10);
    }
}

TEST(heisenberg, support_and_light_cone) {
    EXPECT_EQ(support(SparseOperator::from_pauli(PauliString::single_site(8, 3, PauliAxis::X))),
              std::vector<size_t>{3});
    EXPECT_TRUE(support(SparseOperator::from_pauli(PauliString(4))).empty());
    EXPECT_TRUE(support(SparseOperator(4)).empty());

    Circuit brick(2, {Gate::rzz(0, 1, 0.3), Gate::pair(GateKind::CZ, 0, 1), Gate::single(GateKind::H, 0),
                      Gate::single(GateKind::T, 1), Gate::pair(GateKind::CNOT, 1, 0)});
    SparseOperator seed = SparseOperator::from_pauli(PauliString::single_site(4, 1, PauliAxis::X));
    auto even = support(evolve_heisenberg(seed, brickwork_circuit(4, 1, brick)));
    for (size_t s : even) {
        EXPECT_TRUE(s == 0 || s == 1);
    }
    SparseOperator seed2 = SparseOperator::from_pauli(PauliString::single_site(4, 2, PauliAxis::X));
    auto even2 = support(evolve_heisenberg(seed2, brickwork_circuit(4, 1, brick)));
    for (size_t s : even2) {
        EXPECT_TRUE(s == 2 || s == 3);
    }

    for (size_t t = 0; t <= 6; t++) {
        size_t n = 2 * t + 2;
        Circuit c = brickwork_circuit(n, t, brick);
        SparseOperator s = SparseOperator::from_pauli(PauliString::single_site(n, t, PauliAxis::Y));
        EXPECT_LE(support(evolve_heisenberg(s, c)).size(), 1 + 2 * t);
    }
}
