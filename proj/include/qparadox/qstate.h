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

#ifndef QPARADOX_QSTATE_H
#define QPARADOX_QSTATE_H

#include <cstddef>
#include <string>
#include <vector>

#include "qparadox/qcore.h"

namespace qparadox {

/// Qubit position in a register. Qubit 0 (A) is the most significant bit of
/// the basis index, so |q0 q1> has index 2*q0 + q1.
struct QubitId {
    std::size_t index;

    static constexpr QubitId A() {
        return {0};
    }
    static constexpr QubitId B() {
        return {1};
    }
    bool operator==(const QubitId &) const = default;
};

/// Normalized pure state of an n-qubit register (1 <= n <= 10).
///
/// Construction rejects amplitude vectors whose 2-norm differs from 1 by more
/// than kValidityTol. Nothing is renormalized.
class StateVector {
   public:
    StateVector(std::size_t n_qubits, CVector amplitudes);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t dim() const {
        return amplitudes_.dim();
    }
    const CVector &amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

   private:
    std::size_t n_qubits_;
    CVector amplitudes_;
};

/// Hermitian, unit-trace density matrix. Positivity is verified exactly for
/// single qubits (det and diagonal), larger registers are checked for
/// Hermiticity and trace only.
class DensityMatrix {
   public:
    DensityMatrix(std::size_t n_qubits, CMatrix matrix);
    /// Infers the qubit count from the matrix dimension.
    explicit DensityMatrix(CMatrix matrix);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t dim() const {
        return matrix_.rows();
    }
    const CMatrix &matrix() const {
        return matrix_;
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return matrix_(r, c);
    }

   private:
    std::size_t n_qubits_;
    CMatrix matrix_;
};

struct EnsembleMember {
    double probability;
    StateVector state;
};

/// Probability-weighted list of pure states on a common register.
class Ensemble {
   public:
    explicit Ensemble(std::vector<EnsembleMember> members);

    const std::vector<EnsembleMember> &members() const {
        return members_;
    }
    std::size_t n_qubits() const {
        return members_.front().state.n_qubits();
    }

   private:
    std::vector<EnsembleMember> members_;
};

/// Unitary operator on an n-qubit register, unitary within kIdentityTol.
class Gate {
   public:
    Gate(std::size_t n_qubits, CMatrix matrix, std::string label);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    const CMatrix &matrix() const {
        return matrix_;
    }
    const std::string &label() const {
        return label_;
    }

   private:
    std::size_t n_qubits_;
    CMatrix matrix_;
    std::string label_;
};

StateVector basis_state(std::size_t n_qubits, std::size_t index);
/// (|0> + |1>)/sqrt2.
StateVector plus_state();
/// (|0> - |1>)/sqrt2.
StateVector minus_state();

Gate hadamard();
Gate identity_gate(std::size_t n_qubits);
/// Embeds a single-qubit gate at `target`: I x ... x g x ... x I.
Gate lift(const Gate &g, QubitId target, std::size_t n_qubits);
/// Two-qubit controlled-NOT.
Gate cnot(QubitId control, QubitId target);

StateVector apply(const Gate &g, const StateVector &v);
StateVector tensor(const StateVector &a, const StateVector &b);

/// CNOT(A->B) . H(A) . |00>.
StateVector bell_phi_plus();

/// |v><v|.
DensityMatrix outer(const StateVector &v);
DensityMatrix ensemble_density(const Ensemble &e);
/// I/2^n.
DensityMatrix maximally_mixed(std::size_t n_qubits);
/// U rho U^dagger.
DensityMatrix conjugate(const Gate &u, const DensityMatrix &rho);
/// Reduced state of one qubit of a two-qubit density matrix.
DensityMatrix reduced_state(const DensityMatrix &rho, Subsystem keep);

}  // namespace qparadox

#endif
