// Copyright 2026 The qparadox Authors
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

#include "qparadox/qstate.h"

#include <numbers>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace qparadox;

namespace {

constexpr double kS = std::numbers::sqrt2 / 2;

}  // namespace

TEST(basis_state, examples) {
    ASSERT_EQ(basis_state(2, 0).amplitudes(), (CVector{1, 0, 0, 0}));
    ASSERT_EQ(basis_state(1, 1).amplitudes(), (CVector{0, 1}));
    StateVector s = basis_state(3, 5);
    for (std::size_t k = 0; k < 8; k++) {
        ASSERT_EQ(s[k], Complex(k == 5 ? 1.0 : 0.0));
    }
    ASSERT_THROW(basis_state(2, 4), std::out_of_range);
    ASSERT_THROW(basis_state(11, 0), SizeLimitError);
    ASSERT_THROW(basis_state(0, 0), SizeLimitError);
}

TEST(StateVector, rejects_unnormalized) {
    ASSERT_THROW(StateVector(1, CVector{1, 1}), ValidityError);
    ASSERT_THROW(StateVector(2, CVector{1, 0}), ShapeError);
    ASSERT_NO_THROW(StateVector(1, CVector{1 + 1e-12, 0}));
}

TEST(hadamard, entries_and_involution) {
    Gate h = hadamard();
    ASSERT_EQ(h.label(), "H");
    ASSERT_NEAR(h.matrix()(0, 0).real(), 0.70710678, 1e-8);
    ASSERT_EQ(h.matrix()(0, 0), Complex(kS));
    ASSERT_EQ(h.matrix()(1, 1), Complex(-kS));
    ASSERT_LT(max_abs_diff(matmul(h.matrix(), h.matrix()), CMatrix::identity(2)), 1e-15);
}

TEST(Gate, rejects_non_unitary) {
    ASSERT_THROW(Gate(1, CMatrix({{1, 1}, {0, 1}}), "bad"), ValidityError);
    ASSERT_THROW(Gate(2, CMatrix::identity(2), "bad"), ShapeError);
}

TEST(lift, reproduces_printed_operators) {
    CMatrix h_a({
        {kS, 0, kS, 0},
        {0, kS, 0, kS},
        {kS, 0, -kS, 0},
        {0, kS, 0, -kS},
    });
    CMatrix h_b({
        {kS, kS, 0, 0},
        {kS, -kS, 0, 0},
        {0, 0, kS, kS},
        {0, 0, kS, -kS},
    });
    ASSERT_LT(max_abs_diff(lift(hadamard(), QubitId::A(), 2).matrix(), h_a), 1e-15);
    ASSERT_LT(max_abs_diff(lift(hadamard(), QubitId::B(), 2).matrix(), h_b), 1e-15);
    ASSERT_EQ(lift(identity_gate(1), QubitId::A(), 2).matrix(), CMatrix::identity(4));
}

TEST(lift, errors) {
    ASSERT_THROW(lift(hadamard(), QubitId{2}, 2), std::out_of_range);
    ASSERT_THROW(lift(identity_gate(2), QubitId::A(), 2), ShapeError);
}

TEST(lift, unitary_for_random_gates) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; trial++) {
        Gate g(1, qparadox::testing::random_unitary_qr(rng, 2), "U");
        for (std::size_t n = 1; n <= 5; n++) {
            for (std::size_t q = 0; q < n; q++) {
                ASSERT_LT(unitarity_defect(lift(g, QubitId{q}, n).matrix()), 1e-12);
            }
        }
    }
}

TEST(lift, distinct_qubits_commute) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; trial++) {
        Gate g(1, qparadox::testing::random_unitary_qr(rng, 2), "U");
        CMatrix a = lift(g, QubitId::A(), 2).matrix();
        CMatrix b = lift(g, QubitId::B(), 2).matrix();
        ASSERT_LT(max_abs_diff(matmul(a, b), matmul(b, a)), 1e-12);
    }
}

TEST(cnot, action) {
    Gate c = cnot(QubitId::A(), QubitId::B());
    ASSERT_EQ(apply(c, basis_state(2, 2)).amplitudes(), basis_state(2, 3).amplitudes());
    ASSERT_EQ(apply(c, basis_state(2, 0)).amplitudes(), basis_state(2, 0).amplitudes());
    ASSERT_EQ(apply(c, basis_state(2, 1)).amplitudes(), basis_state(2, 1).amplitudes());

    Gate reversed = cnot(QubitId::B(), QubitId::A());
    ASSERT_EQ(apply(reversed, basis_state(2, 1)).amplitudes(), basis_state(2, 3).amplitudes());

    ASSERT_THROW(cnot(QubitId::A(), QubitId::A()), std::invalid_argument);
    ASSERT_THROW(cnot(QubitId::A(), QubitId{2}), std::out_of_range);
}

TEST(cnot, prepares_bell_from_hadamard) {
    // Multiplied out by hand: H(A)|00> = (1,0,1,0)/sqrt2, CNOT swaps the
    // |10> and |11> amplitudes.
    StateVector v = apply(cnot(QubitId::A(), QubitId::B()),
                          apply(lift(hadamard(), QubitId::A(), 2), basis_state(2, 0)));
    ASSERT_LT(max_abs_diff(v.amplitudes(), CVector{kS, 0, 0, kS}), 1e-15);
}

TEST(bell_phi_plus, closed_form) {
    StateVector phi = bell_phi_plus();
    ASSERT_LT(max_abs_diff(phi.amplitudes(), CVector{kS, 0, 0, kS}), 1e-15);
    ASSERT_NEAR(phi[0].real(), 0.70710678, 1e-8);
    ASSERT_NEAR(norm2(phi.amplitudes()), 1.0, 1e-15);
    DensityMatrix rho_a = reduced_state(outer(phi), Subsystem::A);
    ASSERT_NEAR(purity(rho_a.matrix()), 0.5, 1e-12);
}

TEST(outer, examples) {
    ASSERT_EQ(outer(basis_state(1, 0)).matrix(), CMatrix({{1, 0}, {0, 0}}));
    ASSERT_LT(max_abs_diff(outer(plus_state()).matrix(), CMatrix({{0.5, 0.5}, {0.5, 0.5}})), 1e-15);
    CMatrix bell = outer(bell_phi_plus()).matrix();
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            bool corner = (r == 0 || r == 3) && (c == 0 || c == 3);
            ASSERT_NEAR(std::abs(bell(r, c)), corner ? 0.5 : 0.0, 1e-15);
        }
    }
    ASSERT_NEAR(trace(bell).real(), 1.0, 1e-12);
}

TEST(ensemble_density, examples) {
    StateVector psi = bell_phi_plus();
    ASSERT_EQ(ensemble_density(Ensemble({{1.0, psi}})).matrix(), outer(psi).matrix());

    CMatrix half = 0.5 * CMatrix::identity(2);
    DensityMatrix zo = ensemble_density(Ensemble({{0.5, basis_state(1, 0)}, {0.5, basis_state(1, 1)}}));
    DensityMatrix pm = ensemble_density(Ensemble({{0.5, plus_state()}, {0.5, minus_state()}}));
    ASSERT_LT(max_abs_diff(zo.matrix(), half), 1e-15);
    ASSERT_LT(max_abs_diff(pm.matrix(), half), 1e-15);
    ASSERT_LT(max_abs_diff(zo.matrix(), pm.matrix()), 1e-15);
}

TEST(Ensemble, validation) {
    ASSERT_THROW(Ensemble({}), ValidityError);
    ASSERT_THROW(Ensemble({{0.5, plus_state()}}), ValidityError);
    ASSERT_THROW(Ensemble({{0.0, plus_state()}, {1.0, minus_state()}}), ValidityError);
    ASSERT_THROW(Ensemble({{0.5, plus_state()}, {0.5, bell_phi_plus()}}), ShapeError);
}

TEST(ensemble_density, random_ensembles_are_valid) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> w(0.1, 1.0);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t n = 1 + trial % 3;
        std::size_t members = 1 + trial % 5;
        std::vector<double> weights(members);
        double total = 0;
        for (auto &x : weights) {
            x = w(rng);
            total += x;
        }
        std::vector<EnsembleMember> list;
        for (std::size_t k = 0; k < members; k++) {
            list.push_back({weights[k] / total,
                            StateVector(n, qparadox::testing::random_unit_vector(rng, std::size_t{1} << n))});
        }
        DensityMatrix rho = ensemble_density(Ensemble(std::move(list)));
        ASSERT_LT(hermiticity_defect(rho.matrix()), 1e-12);
        ASSERT_NEAR(trace(rho.matrix()).real(), 1.0, 1e-12);
        ASSERT_LE(purity(rho.matrix()), 1.0 + 1e-12);
    }
}

TEST(DensityMatrix, validation) {
    ASSERT_THROW(DensityMatrix(CMatrix({{1, 0}, {0, 1}})), ValidityError);
    ASSERT_THROW(DensityMatrix(CMatrix({{0.5, 1}, {0, 0.5}})), ValidityError);
    // Hermitian, unit trace, but negative eigenvalue.
    ASSERT_THROW(DensityMatrix(CMatrix({{1.5, 0}, {0, -0.5}})), ValidityError);
    ASSERT_THROW(DensityMatrix(CMatrix({{0.5, 0.9}, {0.9, 0.5}})), ValidityError);
    ASSERT_THROW(DensityMatrix(CMatrix::identity(3)), ShapeError);
    ASSERT_EQ(maximally_mixed(2).n_qubits(), 2u);
}

TEST(conjugate, hadamard_leaves_maximally_mixed_unchanged) {
    DensityMatrix out = conjugate(hadamard(), maximally_mixed(1));
    ASSERT_LT(max_abs_diff(out.matrix(), maximally_mixed(1).matrix()), 1e-15);
    DensityMatrix plus = conjugate(hadamard(), outer(plus_state()));
    ASSERT_LT(max_abs_diff(plus.matrix(), outer(basis_state(1, 0)).matrix()), 1e-15);
}
