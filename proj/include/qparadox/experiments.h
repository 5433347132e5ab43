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

#ifndef QPARADOX_EXPERIMENTS_H
#define QPARADOX_EXPERIMENTS_H

#include <cstddef>
#include <vector>

#include "qparadox/modechannel.h"
#include "qparadox/qstate.h"
#include "qparadox/report.h"

namespace qparadox {

/// The two lifted Hadamards the checks exercise. Stored as raw matrices so
/// tests can inject corrupted operators; checks fold the operators'
/// unitarity defect into their residual.
struct LocalOperators {
    CMatrix h_a;
    CMatrix h_b;

    /// lift(H, A, 2) and lift(H, B, 2).
    static LocalOperators standard();
};

struct ExperimentConfig {
    LocalOperators ops = LocalOperators::standard();
    std::size_t no_signaling_samples = 10000;
    RngState seed{42};
};

/// bell_phi_plus() against the closed form (1/sqrt2, 0, 0, 1/sqrt2).
CheckReport check_bell_state();

/// Reduced state of one qubit of |Phi+> against I/2, with purity 1/2.
CheckReport check_reduced_state(Subsystem keep);

/// H(A)|psi> == H(B)|psi>, with |psi> = |Phi+> unless overridden.
CheckReport check_local_equality(const LocalOperators &ops);
CheckReport check_local_equality(const LocalOperators &ops, const StateVector &psi);
inline CheckReport check_local_equality() {
    return check_local_equality(LocalOperators::standard());
}

/// H(B) H(A) |Phi+> == |Phi+>.
CheckReport check_reversal(const LocalOperators &ops);
inline CheckReport check_reversal() {
    return check_reversal(LocalOperators::standard());
}

/// Contrasts the chain a local observer would predict (treating qubit A as
/// |+>) with the global evolution H(B) H(A) |Phi+>. Passes when the two
/// finals have squared overlap 1/2, i.e. the mismatch is reproduced.
CheckReport naive_local_prediction(const LocalOperators &ops);
inline CheckReport naive_local_prediction() {
    return naive_local_prediction(LocalOperators::standard());
}

/// (m x I)|Phi+> == (I x m^T)|Phi+> for any 2x2 m.
CheckReport check_transpose_identity(const CMatrix &m);

/// The two regroupings of H(A)|Phi+> agree with each other and with
/// H(A)|Phi+>, and the {|+>,|->} and {|0>,|1>} equal mixtures both give I/2.
CheckReport check_decompositions(const LocalOperators &ops);
inline CheckReport check_decompositions() {
    return check_decompositions(LocalOperators::standard());
}

/// local-equality, reversal, naive, transpose(H), decompositions,
/// no-signaling, in that order.
std::vector<CheckReport> run_all_experiments(const ExperimentConfig &config = {});

}  // namespace qparadox

#endif
