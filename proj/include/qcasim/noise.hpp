/*
   Copyright 2026 The qcasim authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "qcasim/gates.hpp"

#include <cstdint>

// Imprecision model: epsilon is a phase error accumulated per pi/2 of
// nominal single-spin rotation (proportional, sign-following); delta is a
// phase error on the accumulated charge-rotation angle, once per cycle
// (the canonical cycles contain exactly one tunneling window).

namespace qcasim {

struct NoiseParams {
    double epsilon = 0.0;
    double delta = 0.0;

    void validate() const;  // both in [0, pi)
};

struct SweepGrid {
    double eps_max = 0.3;
    double delta_max = 0.3;
    int steps = 31;  // per axis, >= 2; the lattice includes (0,0)

    void validate() const;
};

struct FidelityRecord {
    double epsilon = 0.0;
    double delta = 0.0;
    GateKind gate = GateKind::HL;
    std::string input_label;
    double fidelity = 0.0;
    bool repaired = false;  // merge lost unitarity, projected back
};

GateCycle perturb_cycle(const GateCycle& cycle, const NoiseParams& noise);

struct NoisyResult {
    double fidelity = 0.0;
    bool repaired = false;
};

/// Fidelity between the ideal-cycle output and the perturbed-cycle output
/// on the same input. A perturbed merge that fails the unitarity check is
/// replaced by its nearest unitary and flagged.
NoisyResult noisy_gate_fidelity(GateKind gate, const Vector& input,
                                const NoiseParams& noise);

struct SweepJob {
    GateKind gate = GateKind::HL;
    Vector input;
    std::string label;
};

/// One record per (eps, delta) lattice point x job; lattice row-major with
/// eps outer, delta inner, jobs innermost. Output order is independent of
/// the thread count.
std::vector<FidelityRecord> sweep(const std::vector<SweepJob>& jobs,
                                  const SweepGrid& grid, int threads = 1);

struct DephasingStats {
    double mean_fidelity = 0.0;
    std::vector<double> phis;
    std::vector<double> per_sample;
};

/// Samples phi uniformly from [phi_lo, phi_hi) with a per-sample-seeded
/// generator, so serial and parallel evaluation agree bit for bit.
DephasingStats monte_carlo_dephasing(const Vector& state, int n_samples,
                                     double phi_lo, double phi_hi,
                                     std::uint64_t seed);

/// The n-th uniform draw from [lo, hi) for a given seed; pure function.
double sample_phase(std::uint64_t seed, std::uint64_t index, double lo,
                    double hi);

}  // namespace qcasim
