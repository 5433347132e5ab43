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

#ifndef QPARADOX_MODECHANNEL_H
#define QPARADOX_MODECHANNEL_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qparadox/qstate.h"
#include "qparadox/report.h"

namespace qparadox {

/// splitmix64 state. Every 64-bit value is a valid state.
struct RngState {
    std::uint64_t state;

    bool operator==(const RngState &) const = default;
};

struct RngDraw {
    std::uint64_t value;
    RngState next;
};

struct UniformDraw {
    double u;
    RngState next;
};

RngDraw rng_next(RngState s);
/// (value >> 11) * 2^-53, in [0, 1).
double uniform01_from_bits(std::uint64_t value);
UniformDraw uniform01(RngState s);

enum class SourceMode { PurePlus, MaximallyMixed };
enum class Verdict { Pure, Mixed };

struct ShotRecord {
    std::vector<std::size_t> outcomes;
    std::size_t shots;
    std::map<std::size_t, std::size_t> counts;

    double frequency(std::size_t outcome) const;
};

struct MeasureResult {
    ShotRecord record;
    RngState next;
};

/// Born-rule sampling in the computational basis. Each shot consumes one
/// uniform01 draw and picks the first outcome whose cumulative diagonal
/// weight exceeds it.
MeasureResult measure(const DensityMatrix &rho, std::size_t shots, RngState s);

/// H rho H^dagger for the state the source emits in `mode`.
DensityMatrix detector_input(SourceMode mode);

struct DetectorResult {
    std::vector<std::uint8_t> outcomes;
    RngState next;
};

/// One fresh copy per shot: prepare, apply H, measure once.
DetectorResult detector_run(SourceMode mode, std::size_t copies, RngState s);

/// All zeros means Pure. Throws UsageError on an empty list.
Verdict distinguish(std::span<const std::uint8_t> outcomes);

struct DistinguisherStats {
    std::size_t copies;
    std::size_t trials;
    /// Empirical P(verdict = Pure | MaximallyMixed source).
    double false_pure_rate;
    /// Empirical P(verdict = Mixed | PurePlus source).
    double false_mixed_rate;
    std::size_t false_pure_count;
    std::size_t false_mixed_count;
    /// 2^-copies.
    double analytic_false_pure_rate;
    /// sqrt(p(1-p)/trials) at the analytic rate.
    double sigma;
};

/// Runs `trials` detector rounds on the mixed source, then `trials` on the
/// pure source, threading one RngState through all of them.
DistinguisherStats distinguisher_trial_stats(std::size_t copies, std::size_t trials, RngState s);

struct UnitaryDraw {
    CMatrix u;
    RngState next;
};

/// [[cos t, -e^{il} sin t], [e^{ip} sin t, e^{i(p+l)} cos t]] with
/// t = acos(sqrt(u1)), p = 2 pi u2, l = 2 pi u3.
CMatrix unitary_from_draws(double u1, double u2, double u3);
UnitaryDraw random_unitary(RngState s);

/// Reduced state of B after applying `u` to qubit A of |Phi+>.
DensityMatrix reduced_b_after_local(const CMatrix &u);

/// Max trace distance of rho_B from I/2 over `samples` random unitaries on A.
CheckReport no_signaling_check(std::size_t samples, RngState s);

/// Detector after H on each source: the mixed source's frequency of 0 must
/// be within 3 sigma of 1/2, and the pure source must never yield 1.
/// Returns one report per source.
std::vector<CheckReport> detector_statistics_checks(std::size_t shots, RngState s);

/// Empirical false-pure rate within 3 sigma of 2^-copies, and zero
/// false-mixed verdicts. Returns one report per error type.
std::vector<CheckReport> distinguisher_checks(std::size_t copies, std::size_t trials, RngState s);

}  // namespace qparadox

#endif
