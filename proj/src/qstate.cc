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

#include <bit>
#include <cmath>
#include <numbers>

namespace qparadox {

namespace {

std::size_t register_dim(std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw SizeLimitError("qubit count " + std::to_string(n_qubits) + " outside [1, " + std::to_string(kMaxQubits) +
                             "]");
    }
    return std::size_t{1} << n_qubits;
}

std::size_t qubits_for_dim(std::size_t dim) {
    if (!std::has_single_bit(dim) || dim < 2) {
        throw ShapeError("dimension " + std::to_string(dim) + " is not 2^n for n >= 1");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.dim() != register_dim(n_qubits)) {
        throw ShapeError(std::to_string(n_qubits) + "-qubit state needs " + std::to_string(register_dim(n_qubits)) +
                         " amplitudes, got " + std::to_string(amplitudes_.dim()));
    }
    if (std::abs(norm2(amplitudes_) - 1.0) > kValidityTol) {
        throw ValidityError("state vector is not normalized");
    }
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, CMatrix matrix) : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    std::size_t dim = register_dim(n_qubits);
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw ShapeError(std::to_string(n_qubits) + "-qubit density matrix must be " + std::to_string(dim) + "x" +
                         std::to_string(dim));
    }
    if (hermiticity_defect(matrix_) > kValidityTol) {
        throw ValidityError("density matrix is not Hermitian");
    }
    if (std::abs(trace(matrix_) - 1.0) > kValidityTol) {
        throw ValidityError("density matrix does not have unit trace");
    }
    if (dim == 2) {
        double a = matrix_(0, 0).real();
        double c = matrix_(1, 1).real();
        double det = a * c - std::norm(matrix_(0, 1));
        if (a < -kValidityTol || c < -kValidityTol || det < -kValidityTol) {
            throw ValidityError("density matrix is not positive semidefinite");
        }
    }
}

DensityMatrix::DensityMatrix(CMatrix matrix) : DensityMatrix(qubits_for_dim(matrix.rows()), std::move(matrix)) {
}

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw ValidityError("ensemble must have at least one member");
    }
    double total = 0;
    for (const auto &m : members_) {
        if (!(m.probability > 0.0 && m.probability <= 1.0)) {
            throw ValidityError("ensemble probability " + std::to_string(m.probability) + " outside (0, 1]");
        }
        if (m.state.n_qubits() != members_.front().state.n_qubits()) {
            throw ShapeError("ensemble members have different qubit counts");
        }
        total += m.probability;
    }
    if (std::abs(total - 1.0) > kValidityTol) {
        throw ValidityError("ensemble probabilities sum to " + std::to_string(total));
    }
}

Gate::Gate(std::size_t n_qubits, CMatrix matrix, std::string label)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)), label_(std::move(label)) {
    std::size_t dim = register_dim(n_qubits);
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw ShapeError("gate " + label_ + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (unitarity_defect(matrix_) > kIdentityTol) {
        throw ValidityError("gate " + label_ + " is not unitary");
    }
}

StateVector basis_state(std::size_t n_qubits, std::size_t index) {
    std::size_t dim = register_dim(n_qubits);
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " outside " + std::to_string(n_qubits) +
                                "-qubit register");
    }
    CVector amps(dim);
    amps.set(index, 1.0);
    return StateVector(n_qubits, std::move(amps));
}

StateVector plus_state() {
    constexpr double s = std::numbers::sqrt2 / 2;
    return StateVector(1, CVector{s, s});
}

StateVector minus_state() {
    constexpr double s = std::numbers::sqrt2 / 2;
    return StateVector(1, CVector{s, -s});
}

Gate hadamard() {
    constexpr double s = std::numbers::sqrt2 / 2;
    return Gate(1, CMatrix({{s, s}, {s, -s}}), "H");
}

Gate identity_gate(std::size_t n_qubits) {
    return Gate(n_qubits, CMatrix::identity(register_dim(n_qubits)), "I");
}

Gate lift(const Gate &g, QubitId target, std::size_t n_qubits) {
    if (g.n_qubits() != 1) {
        throw ShapeError("lift expects a single-qubit gate, got " + std::to_string(g.n_qubits()) + " qubits");
    }
    register_dim(n_qubits);
    if (target.index >= n_qubits) {
        throw std::out_of_range("target qubit " + std::to_string(target.index) + " outside " +
                                std::to_string(n_qubits) + "-qubit register");
    }
    CMatrix acc = target.index == 0 ? g.matrix() : CMatrix::identity(2);
    for (std::size_t q = 1; q < n_qubits; q++) {
        acc = kron(acc, q == target.index ? g.matrix() : CMatrix::identity(2));
    }
    return Gate(n_qubits, std::move(acc), g.label() + "(" + std::to_string(target.index) + ")");
}

Gate cnot(QubitId control, QubitId target) {
    if (control.index > 1 || target.index > 1) {
        throw std::out_of_range("cnot acts on a two-qubit register");
    }
    if (control == target) {
        throw std::invalid_argument("cnot control and target must differ");
    }
    CMatrix m(4, 4);
    for (std::size_t in = 0; in < 4; in++) {
        std::size_t control_bit = (in >> (1 - control.index)) & 1;
        std::size_t out = control_bit ? in ^ (std::size_t{1} << (1 - target.index)) : in;
        m.set(out, in, 1.0);
    }
    return Gate(2, std::move(m), "CNOT(" + std::to_string(control.index) + "," + std::to_string(target.index) + ")");
}

StateVector apply(const Gate &g, const StateVector &v) {
    if (g.n_qubits() != v.n_qubits()) {
        throw ShapeError("gate " + g.label() + " acts on " + std::to_string(g.n_qubits()) + " qubits, state has " +
                         std::to_string(v.n_qubits()));
    }
    return StateVector(v.n_qubits(), apply(g.matrix(), v.amplitudes()));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    return StateVector(a.n_qubits() + b.n_qubits(), kron(a.amplitudes(), b.amplitudes()));
}

StateVector bell_phi_plus() {
    StateVector v = apply(lift(hadamard(), QubitId::A(), 2), basis_state(2, 0));
    return apply(cnot(QubitId::A(), QubitId::B()), v);
}

DensityMatrix outer(const StateVector &v) {
    return DensityMatrix(v.n_qubits(), outer_product(v.amplitudes(), v.amplitudes()));
}

DensityMatrix ensemble_density(const Ensemble &e) {
    std::size_t dim = e.members().front().state.dim();
    CMatrix acc(dim, dim);
    for (const auto &m : e.members()) {
        acc = acc + Complex(m.probability) * outer_product(m.state.amplitudes(), m.state.amplitudes());
    }
    return DensityMatrix(e.n_qubits(), std::move(acc));
}

DensityMatrix maximally_mixed(std::size_t n_qubits) {
    std::size_t dim = register_dim(n_qubits);
    return DensityMatrix(n_qubits, Complex(1.0 / static_cast<double>(dim)) * CMatrix::identity(dim));
}

DensityMatrix conjugate(const Gate &u, const DensityMatrix &rho) {
    if (u.n_qubits() != rho.n_qubits()) {
        throw ShapeError("gate " + u.label() + " acts on " + std::to_string(u.n_qubits()) +
                         " qubits, density matrix has " + std::to_string(rho.n_qubits()));
    }
    return DensityMatrix(rho.n_qubits(), matmul(matmul(u.matrix(), rho.matrix()), dagger(u.matrix())));
}

DensityMatrix reduced_state(const DensityMatrix &rho, Subsystem keep) {
    if (rho.n_qubits() != 2) {
        throw ShapeError("reduced_state expects a two-qubit density matrix");
    }
    return DensityMatrix(1, partial_trace(rho.matrix(), keep, 2, 2));
}

}  // namespace qparadox
