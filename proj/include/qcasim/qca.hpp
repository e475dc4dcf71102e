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

#include "qcasim/core.hpp"

// One QCA gate cycle: a four-dot cell holding two electrons evolves as a
// two-level charge system between the polarized configurations |+> (sites
// B,D) and |-> (sites A,C), while charge-conditioned single-spin pulses act
// on the two electron spins. Charge basis order is (|+>, |->); a cycle
// always starts in |->.

namespace qcasim {

struct QcaParams {
    double omega0 = 0.0;   // energy offset of |+> vs |->
    double gamma = 1.0;    // tunneling rate, > 0
    double duration = kPi / 2;  // >= 0

    void validate() const;
};

enum class ChargeBasis { Plus = 0, Minus = 1 };

struct PulseSpec {
    int target = 0;  // 0 = electron from dot i (site A/B), 1 = from dot j (C/D)
    Axis axis = Axis::X;
    double angle = 0.0;
};

struct GateCycle {
    QcaParams params;
    std::vector<PulseSpec> pulses_minus;  // forms U_AC, applied on |->
    std::vector<PulseSpec> pulses_plus;   // forms U_BD, applied on |+>
};

/// Eq.-of-motion generator in the (|+>, |->) basis:
/// [[omega0/2, gamma/2], [gamma/2, -omega0/2]].
Matrix charge_hamiltonian(const QcaParams& params);

/// exp(-i H_qca * duration).
Matrix charge_propagator(const QcaParams& params);

/// Ordered product of the pulse list as a two-spin (4x4) operator;
/// later pulses act after earlier ones.
Matrix pulse_product(const std::vector<PulseSpec>& pulses);

/// |-><-| (x) U_AC + |+><+| (x) U_BD, factor order charge (x) spin0 (x) spin1.
Matrix conditional_pulse_operator(const GateCycle& cycle);

/// alpha * U_AC + beta * U_BD with (alpha, beta) the amplitudes the charge
/// propagator sends |-> to (|->, |+>). No unitarity check.
Matrix merged_operator_unchecked(const GateCycle& cycle);

/// As above but verifies the merge is unitary within 1e-9; throws
/// NonUnitaryMerge for pulse programs that do not merge cleanly.
Matrix merged_operator(const GateCycle& cycle);

struct CycleResult {
    Vector spin_out;   // effective * spin_in, global phase kept
    Matrix effective;  // 4x4 merged spin operator
};

/// Runs one full cycle on a two-spin state via the shortcut formula.
CycleResult run_gate_cycle(const GateCycle& cycle, const Vector& spin_in);

/// Same cycle through the explicit 8-dim charge (x) spin pipeline:
/// tensor in the |-> charge state, evolve, apply conditional pulses,
/// merge the charge blocks back onto the dots.
Vector run_gate_cycle_full(const GateCycle& cycle, const Vector& spin_in);

inline constexpr double kMergeTol = 1e-9;

}  // namespace qcasim
