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

#include "qparadox/modechannel.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qparadox {

RngDraw rng_next(RngState s) {
    std::uint64_t state = s.state + 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return {z ^ (z >> 31), RngState{state}};
}

double uniform01_from_bits(std::uint64_t value) {
    return static_cast<double>(value >> 11) * 0x1.0p-53;
}

UniformDraw uniform01(RngState s) {
    RngDraw d = rng_next(s);
    return {uniform01_from_bits(d.value), d.next};
}

double ShotRecord::frequency(std::size_t outcome) const {
    auto it = counts.find(outcome);
    if (it == counts.end() || shots == 0) {
        return 0.0;
    }
    return static_cast<double>(it->second) / static_cast<double>(shots);
}

namespace {

/// Inverse-CDF sampler over the diagonal of a density matrix. Negative
/// rounding noise on the diagonal is clamped to zero, so outcomes with no
/// weight are never drawn.
class DiagonalSampler {
   public:
    explicit DiagonalSampler(const DensityMatrix &rho) {
        double raw = 0;
        double acc = 0;
        cumulative_.reserve(rho.dim());
        for (std::size_t k = 0; k < rho.dim(); k++) {
            double p = rho(k, k).real();
            raw += p;
            acc += std::max(p, 0.0);
            cumulative_.push_back(acc);
        }
        if (std::abs(raw - 1.0) > kValidityTol) {
            throw ValidityError("measurement diagonal sums to " + std::to_string(raw));
        }
    }

    std::size_t sample(RngState &s) const {
        UniformDraw d = uniform01(s);
        s = d.next;
        double target = d.u * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
        return static_cast<std::size_t>(it - cumulative_.begin());
    }

   private:
    std::vector<double> cumulative_;
};

DensityMatrix source_state(SourceMode mode) {
    return mode == SourceMode::PurePlus ? outer(plus_state()) : maximally_mixed(1);
}

}  // namespace

MeasureResult measure(const DensityMatrix &rho, std::size_t shots, RngState s) {
    if (shots == 0) {
        throw UsageError("shots must be at least 1");
    }
    DiagonalSampler sampler(rho);
    ShotRecord record{{}, shots, {}};
    record.outcomes.reserve(shots);
    for (std::size_t k = 0; k < shots; k++) {
        std::size_t outcome = sampler.sample(s);
        record.outcomes.push_back(outcome);
        record.counts[outcome]++;
    }
    return {std::move(record), s};
}

DensityMatrix detector_input(SourceMode mode) {
    return conjugate(hadamard(), source_state(mode));
}

namespace {

void run_detector(const DiagonalSampler &sampler, std::size_t copies, RngState &s, std::vector<std::uint8_t> &out) {
    out.clear();
    for (std::size_t k = 0; k < copies; k++) {
        out.push_back(static_cast<std::uint8_t>(sampler.sample(s)));
    }
}

}  // namespace

DetectorResult detector_run(SourceMode mode, std::size_t copies, RngState s) {
    if (copies == 0) {
        throw UsageError("copies must be at least 1");
    }
    // Every copy is an independent preparation of the same state, so the
    // post-H distribution is shared.
    DiagonalSampler sampler(detector_input(mode));
    DetectorResult result{{}, s};
    run_detector(sampler, copies, result.next, result.outcomes);
    return result;
}

Verdict distinguish(std::span<const std::uint8_t> outcomes) {
    if (outcomes.empty()) {
        throw UsageError("distinguish needs at least one outcome");
    }
    bool all_zero = std::all_of(outcomes.begin(), outcomes.end(), [](std::uint8_t b) { return b == 0; });
    return all_zero ? Verdict::Pure : Verdict::Mixed;
}

DistinguisherStats distinguisher_trial_stats(std::size_t copies, std::size_t trials, RngState s) {
    if (copies == 0) {
        throw UsageError("copies must be at least 1");
    }
    if (trials == 0) {
        throw UsageError("trials must be at least 1");
    }
    DiagonalSampler mixed(detector_input(SourceMode::MaximallyMixed));
    DiagonalSampler pure(detector_input(SourceMode::PurePlus));
    std::vector<std::uint8_t> bits;
    bits.reserve(copies);

    std::size_t false_pure = 0;
    for (std::size_t t = 0; t < trials; t++) {
        run_detector(mixed, copies, s, bits);
        false_pure += distinguish(bits) == Verdict::Pure;
    }
    std::size_t false_mixed = 0;
    for (std::size_t t = 0; t < trials; t++) {
        run_detector(pure, copies, s, bits);
        false_mixed += distinguish(bits) == Verdict::Mixed;
    }

    double n = static_cast<double>(trials);
    double p = std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(copies, 2000)));
    return DistinguisherStats{
        copies,
        trials,
        static_cast<double>(false_pure) / n,
        static_cast<double>(false_mixed) / n,
        false_pure,
        false_mixed,
        p,
        std::sqrt(p * (1 - p) / n),
    };
}

CMatrix unitary_from_draws(double u1, double u2, double u3) {
    double theta = std::acos(std::sqrt(u1));
    double phi = 2 * std::numbers::pi * u2;
    double lambda = 2 * std::numbers::pi * u3;
    double c = std::cos(theta);
    double s = std::sin(theta);
    return CMatrix({
        {c, -std::polar(1.0, lambda) * s},
        {std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c},
    });
}

UnitaryDraw random_unitary(RngState s) {
    UniformDraw a = uniform01(s);
    UniformDraw b = uniform01(a.next);
    UniformDraw c = uniform01(b.next);
    return {unitary_from_draws(a.u, b.u, c.u), c.next};
}

DensityMatrix reduced_b_after_local(const CMatrix &u) {
    Gate local(1, u, "U");
    DensityMatrix joint = outer(apply(lift(local, QubitId::A(), 2), bell_phi_plus()));
    return reduced_state(joint, Subsystem::B);
}

CheckReport no_signaling_check(std::size_t samples, RngState s) {
    if (samples == 0) {
        throw UsageError("samples must be at least 1");
    }
    CMatrix half_identity = maximally_mixed(1).matrix();
    double worst = 0;
    std::size_t worst_index = 0;
    for (std::size_t k = 0; k < samples; k++) {
        UnitaryDraw d = random_unitary(s);
        s = d.next;
        double dist = trace_distance_2x2(reduced_b_after_local(d.u).matrix(), half_identity);
        if (dist > worst) {
            worst = dist;
            worst_index = k;
        }
    }
    return make_report("no_signaling", worst, kIdentityTol,
                       {
                           {"samples", std::to_string(samples)},
                           {"max_trace_distance", format_real(worst)},
                           {"worst_sample", std::to_string(worst_index)},
                           {"reference", "I/2"},
                       });
}

std::vector<CheckReport> detector_statistics_checks(std::size_t shots, RngState s) {
    MeasureResult mixed = measure(detector_input(SourceMode::MaximallyMixed), shots, s);
    MeasureResult pure = measure(detector_input(SourceMode::PurePlus), shots, mixed.next);

    double n = static_cast<double>(shots);
    double f0 = mixed.record.frequency(0);
    double band = 3 * std::sqrt(0.25 / n);
    double ones = pure.record.frequency(1);
    std::size_t pure_zeros = pure.record.counts.count(0) ? pure.record.counts.at(0) : 0;

    std::vector<CheckReport> out;
    out.push_back(make_report("detector_mixed_source", std::abs(f0 - 0.5), band,
                              {
                                  {"source", "I/2 then H"},
                                  {"shots", std::to_string(shots)},
                                  {"frequency_0", format_real(f0)},
                                  {"band", "0.5 +/- " + format_real(band)},
                              }));
    // Any single 1 gives residual 1/shots, which fails.
    out.push_back(make_report("detector_pure_source", ones, 1.0 / n,
                              {
                                  {"source", "|+><+| then H"},
                                  {"shots", std::to_string(shots)},
                                  {"zeros", std::to_string(pure_zeros) + "/" + std::to_string(shots)},
                              }));
    return out;
}

std::vector<CheckReport> distinguisher_checks(std::size_t copies, std::size_t trials, RngState s) {
    DistinguisherStats st = distinguisher_trial_stats(copies, trials, s);
    std::vector<CheckReport> out;
    out.push_back(make_report("distinguisher_false_pure", std::abs(st.false_pure_rate - st.analytic_false_pure_rate),
                              3 * st.sigma,
                              {
                                  {"copies", std::to_string(copies)},
                                  {"trials", std::to_string(trials)},
                                  {"empirical_false_pure_rate", format_real(st.false_pure_rate)},
                                  {"analytic_false_pure_rate", format_real(st.analytic_false_pure_rate)},
                                  {"sigma", format_real(st.sigma)},
                              }));
    out.push_back(make_report("distinguisher_false_mixed", st.false_mixed_rate, 1.0 / static_cast<double>(trials),
                              {
                                  {"copies", std::to_string(copies)},
                                  {"trials", std::to_string(trials)},
                                  {"false_mixed_count", std::to_string(st.false_mixed_count)},
                              }));
    return out;
}

}  // namespace qparadox
