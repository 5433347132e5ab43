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

#include "qparadox/experiments.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qparadox {

namespace {

std::string label(Perspective p) {
    return std::string(perspective_name(p));
}

/// Max unitarity defect over the operators a check consumes.
double operator_defect(std::initializer_list<const CMatrix *> ops) {
    double worst = 0;
    for (const auto *m : ops) {
        worst = std::max(worst, unitarity_defect(*m));
    }
    return worst;
}

void require_two_qubit(const CMatrix &m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw ShapeError("lifted operator must be 4x4");
    }
}

}  // namespace

LocalOperators LocalOperators::standard() {
    return LocalOperators{
        lift(hadamard(), QubitId::A(), 2).matrix(),
        lift(hadamard(), QubitId::B(), 2).matrix(),
    };
}

CheckReport check_bell_state() {
    constexpr double s = std::numbers::sqrt2 / 2;
    StateVector phi = bell_phi_plus();
    CVector closed_form{s, 0, 0, s};
    return make_report("bell_state", max_abs_diff(phi.amplitudes(), closed_form), kIdentityTol,
                       {
                           {"circuit", "CNOT(0,1) H(0) |00>"},
                           {"amplitudes", format_vector(phi.amplitudes())},
                           {"norm", format_real(norm2(phi.amplitudes()))},
                       });
}

CheckReport check_reduced_state(Subsystem keep) {
    DensityMatrix rho = reduced_state(outer(bell_phi_plus()), keep);
    double p = purity(rho.matrix());
    double diff = max_abs_diff(rho.matrix(), maximally_mixed(1).matrix());
    std::string side = keep == Subsystem::A ? "A" : "B";
    return make_report("reduced_state_" + side, std::max(diff, std::abs(p - 0.5)), kIdentityTol,
                       {
                           {"perspective", label(keep == Subsystem::A ? Perspective::Local_A : Perspective::Local_B)},
                           {"rho_" + side, format_matrix(rho.matrix())},
                           {"purity", format_real(p)},
                           {"mixed", p < 1 - kIdentityTol ? "true" : "false"},
                       });
}

CheckReport check_local_equality(const LocalOperators &ops) {
    return check_local_equality(ops, bell_phi_plus());
}

CheckReport check_local_equality(const LocalOperators &ops, const StateVector &psi) {
    require_two_qubit(ops.h_a);
    require_two_qubit(ops.h_b);
    CVector via_a = apply(ops.h_a, psi.amplitudes());
    CVector via_b = apply(ops.h_b, psi.amplitudes());
    double diff = max_abs_diff(via_a, via_b);
    double defect = operator_defect({&ops.h_a, &ops.h_b});
    return make_report("local_equality", std::max(diff, defect), kIdentityTol,
                       {
                           {"input", format_vector(psi.amplitudes())},
                           {"H(A)|psi>", format_vector(via_a)},
                           {"H(B)|psi>", format_vector(via_b)},
                           {"state_residual", format_real(diff)},
                           {"operator_unitarity_defect", format_real(defect)},
                       });
}

CheckReport check_reversal(const LocalOperators &ops) {
    require_two_qubit(ops.h_a);
    require_two_qubit(ops.h_b);
    StateVector phi = bell_phi_plus();
    CVector mid = apply(ops.h_a, phi.amplitudes());
    CVector back = apply(ops.h_b, mid);
    double diff = max_abs_diff(back, phi.amplitudes());
    double defect = operator_defect({&ops.h_a, &ops.h_b});
    return make_report("reversal", std::max(diff, defect), kIdentityTol,
                       {
                           {"H(A)|Phi+>", format_vector(mid)},
                           {"H(B)H(A)|Phi+>", format_vector(back)},
                           {"|Phi+>", format_vector(phi.amplitudes())},
                           {"state_residual", format_real(diff)},
                           {"operator_unitarity_defect", format_real(defect)},
                       });
}

CheckReport naive_local_prediction(const LocalOperators &ops) {
    require_two_qubit(ops.h_a);
    require_two_qubit(ops.h_b);

    // Local view: A believes its qubit is |+>, rotates it to |0>, then B
    // rotates its own |+> the same way.
    CVector a_after = apply(hadamard().matrix(), plus_state().amplitudes());
    CVector joint = kron(a_after, plus_state().amplitudes());
    CVector naive_final = apply(ops.h_b, joint);

    // Global view: both operators act on the entangled pair.
    StateVector phi = bell_phi_plus();
    CVector global_final = apply(ops.h_b, apply(ops.h_a, phi.amplitudes()));

    double overlap = std::norm(inner(naive_final, global_final));
    double distance = max_abs_diff(naive_final, global_final);
    double defect = operator_defect({&ops.h_a, &ops.h_b});
    return make_report("naive_local_prediction", std::max(std::abs(overlap - 0.5), defect), kIdentityTol,
                       {
                           {label(Perspective::Local_A), "H|+> = " + format_vector(a_after)},
                           {label(Perspective::Local_B), "H(B)(|0>|+>) = " + format_vector(naive_final)},
                           {label(Perspective::Global_G), "H(B)H(A)|Phi+> = " + format_vector(global_final)},
                           {"squared_overlap", format_real(overlap)},
                           {"max_distance", format_real(distance)},
                           {"mismatch", distance > 0.2 ? "true" : "false"},
                           {"operator_unitarity_defect", format_real(defect)},
                       });
}

CheckReport check_transpose_identity(const CMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw ShapeError("transpose identity expects a 2x2 matrix");
    }
    CMatrix id = CMatrix::identity(2);
    CVector phi = bell_phi_plus().amplitudes();
    CVector left = apply(kron(m, id), phi);
    CVector right = apply(kron(id, transpose(m)), phi);
    CVector untransposed = apply(kron(id, m), phi);
    double diff = max_abs_diff(left, right);
    return make_report("transpose_identity", diff, kIdentityTol,
                       {
                           {"scope", "extension: (m x I)|Phi+> = (I x m^T)|Phi+>"},
                           {"m", format_matrix(m)},
                           {"(m x I)|Phi+>", format_vector(left)},
                           {"(I x m^T)|Phi+>", format_vector(right)},
                           {"untransposed_residual", format_real(max_abs_diff(left, untransposed))},
                       });
}

CheckReport check_decompositions(const LocalOperators &ops) {
    require_two_qubit(ops.h_a);
    const double half = 0.5;
    CVector zero{1, 0};
    CVector one{0, 1};
    CVector plus_unnorm = zero + one;
    CVector minus_unnorm = zero - one;

    // 1/2 ((|0>+|1>)|0> + (|0>-|1>)|1>)
    CVector a_side = Complex(half) * (kron(plus_unnorm, zero) + kron(minus_unnorm, one));
    // 1/2 (|0>(|0>+|1>) + |1>(|0>-|1>))
    CVector b_side = Complex(half) * (kron(zero, plus_unnorm) + kron(one, minus_unnorm));
    CVector evolved = apply(ops.h_a, bell_phi_plus().amplitudes());

    DensityMatrix pm = ensemble_density(Ensemble({{0.5, plus_state()}, {0.5, minus_state()}}));
    DensityMatrix zo = ensemble_density(Ensemble({{0.5, basis_state(1, 0)}, {0.5, basis_state(1, 1)}}));
    CMatrix target = maximally_mixed(1).matrix();

    double grouping = max_abs_diff(a_side, b_side);
    double vs_evolved = std::max(max_abs_diff(a_side, evolved), max_abs_diff(b_side, evolved));
    double ensembles = std::max({max_abs_diff(pm.matrix(), zo.matrix()), max_abs_diff(pm.matrix(), target),
                                 max_abs_diff(zo.matrix(), target)});
    double defect = operator_defect({&ops.h_a});
    return make_report("decompositions", std::max({grouping, vs_evolved, ensembles, defect}), kIdentityTol,
                       {
                           {"A-side grouping", format_vector(a_side)},
                           {"B-side grouping", format_vector(b_side)},
                           {"H(A)|Phi+>", format_vector(evolved)},
                           {"grouping_residual", format_real(grouping)},
                           {"vs_H(A)|Phi+>_residual", format_real(vs_evolved)},
                           {"rho{+,-}", format_matrix(pm.matrix())},
                           {"rho{0,1}", format_matrix(zo.matrix())},
                           {"ensemble_residual", format_real(ensembles)},
                           {"operator_unitarity_defect", format_real(defect)},
                       });
}

std::vector<CheckReport> run_all_experiments(const ExperimentConfig &config) {
    std::vector<CheckReport> reports;
    reports.push_back(check_local_equality(config.ops));
    reports.push_back(check_reversal(config.ops));
    reports.push_back(naive_local_prediction(config.ops));
    reports.push_back(check_transpose_identity(hadamard().matrix()));
    reports.push_back(check_decompositions(config.ops));
    reports.push_back(no_signaling_check(config.no_signaling_samples, config.seed));
    return reports;
}

}  // namespace qparadox
