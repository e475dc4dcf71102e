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

#include "qcasim/noise.hpp"

#include "qcasim/dfs.hpp"

#include <cmath>
#include <thread>

namespace qcasim {

void NoiseParams::validate() const {
    if (!(epsilon >= 0) || !(epsilon < kPi) || !std::isfinite(epsilon))
        throw ValidationError("epsilon must be in [0, pi)");
    if (!(delta >= 0) || !(delta < kPi) || !std::isfinite(delta))
        throw ValidationError("delta must be in [0, pi)");
}

void SweepGrid::validate() const {
    if (!(eps_max > 0) || !(eps_max < kPi))
        throw ValidationError("eps_max must be in (0, pi)");
    if (!(delta_max > 0) || !(delta_max < kPi))
        throw ValidationError("delta_max must be in (0, pi)");
    if (steps < 2) throw ValidationError("steps must be >= 2");
}

GateCycle perturb_cycle(const GateCycle& cycle, const NoiseParams& noise) {
    noise.validate();
    cycle.params.validate();
    GateCycle out = cycle;
    // One epsilon per pi/2 of nominal rotation, following the sign.
    const auto bend = [&](std::vector<PulseSpec>& pulses) {
        for (PulseSpec& p : pulses) {
            const double units = std::abs(p.angle) / (kPi / 2);
            p.angle += noise.epsilon * units * (p.angle < 0 ? -1.0 : 1.0);
        }
    };
    bend(out.pulses_minus);
    bend(out.pulses_plus);
    // One tunneling event per cycle: gamma * duration -> gamma * duration + delta.
    if (!(out.params.gamma > 0))
        throw ValidationError("delta perturbation needs gamma > 0");
    out.params.duration += noise.delta / out.params.gamma;
    return out;
}

namespace {

GateCycle canonical_cycle(GateKind gate) {
    switch (gate) {
        case GateKind::HL: return hl_cycle();
        case GateKind::CPF: return cpf_cycle();
        default:
            throw ValidationError("noise evaluation supports HL and CPF only");
    }
}

}  // namespace

NoisyResult noisy_gate_fidelity(GateKind gate, const Vector& input,
                                const NoiseParams& noise) {
    if (input.size() != 4)
        throw DimensionMismatch("gate input must have dim 4");
    const Vector in = checked_state(input);
    const GateCycle ideal = canonical_cycle(gate);
    const GateCycle noisy = perturb_cycle(ideal, noise);

    const Matrix ideal_eff = merged_operator(ideal);
    Matrix noisy_eff = merged_operator_unchecked(noisy);
    NoisyResult r;
    if (unitarity_defect(noisy_eff) > kMergeTol) {
        noisy_eff = nearest_unitary(noisy_eff);
        r.repaired = true;
    }
    const Vector ideal_out = ideal_eff * in;
    Vector noisy_out = noisy_eff * in;
    noisy_out /= noisy_out.norm();
    r.fidelity = state_fidelity(ideal_out, noisy_out);
    return r;
}

std::vector<FidelityRecord> sweep(const std::vector<SweepJob>& jobs,
                                  const SweepGrid& grid, int threads) {
    grid.validate();
    if (threads < 1) throw ValidationError("threads must be >= 1");
    for (const SweepJob& job : jobs) (void)canonical_cycle(job.gate);

    const std::size_t per_point = jobs.size();
    const std::size_t total =
        static_cast<std::size_t>(grid.steps) * grid.steps * per_point;
    std::vector<FidelityRecord> records(total);

    const auto eval_point = [&](std::size_t flat) {
        const std::size_t job_idx = flat % per_point;
        const std::size_t lattice = flat / per_point;
        const int di = static_cast<int>(lattice % grid.steps);
        const int ei = static_cast<int>(lattice / grid.steps);
        NoiseParams noise;
        noise.epsilon = grid.eps_max * ei / (grid.steps - 1);
        noise.delta = grid.delta_max * di / (grid.steps - 1);
        const SweepJob& job = jobs[job_idx];
        const NoisyResult res = noisy_gate_fidelity(job.gate, job.input, noise);
        records[flat] = {noise.epsilon, noise.delta, job.gate,
                         job.label,     res.fidelity, res.repaired};
    };

    if (threads == 1) {
        for (std::size_t i = 0; i < total; ++i) eval_point(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < total; i += threads) eval_point(i);
            });
        for (std::thread& th : pool) th.join();
    }
    return records;
}

double sample_phase(std::uint64_t seed, std::uint64_t index, double lo,
                    double hi) {
    // splitmix64 on (seed, index); stable across platforms and threads.
    std::uint64_t x = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    const double u = static_cast<double>(x >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

DephasingStats monte_carlo_dephasing(const Vector& state, int n_samples,
                                     double phi_lo, double phi_hi,
                                     std::uint64_t seed) {
    if (n_samples < 1) throw ValidationError("n_samples must be >= 1");
    if (phi_hi < phi_lo) throw EmptyRange("phi range is empty");
    const Vector in = checked_state(state);
    DephasingStats stats;
    stats.phis.resize(n_samples);
    stats.per_sample.resize(n_samples);
    double sum = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double phi = sample_phase(seed, i, phi_lo, phi_hi);
        const double f = state_fidelity(in, apply_collective_dephasing(in, phi));
        stats.phis[i] = phi;
        stats.per_sample[i] = f;
        sum += f;
    }
    stats.mean_fidelity = sum / n_samples;
    return stats;
}

}  // namespace qcasim
