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

#include "qcasim/qca.hpp"

#include <cmath>

namespace qcasim {

void QcaParams::validate() const {
    if (!(gamma >= 0) || !std::isfinite(gamma))
        throw ValidationError("gamma must be non-negative and finite");
    if (!(duration >= 0) || !std::isfinite(duration))
        throw ValidationError("duration must be non-negative and finite");
    if (!std::isfinite(omega0))
        throw ValidationError("omega0 must be finite");
}

Matrix charge_hamiltonian(const QcaParams& params) {
    params.validate();
    Matrix h(2, 2);
    h << params.omega0 / 2, params.gamma / 2,
         params.gamma / 2, -params.omega0 / 2;
    return h;
}

Matrix charge_propagator(const QcaParams& params) {
    return expm_hermitian(charge_hamiltonian(params), params.duration);
}

Matrix pulse_product(const std::vector<PulseSpec>& pulses) {
    Matrix u = identity(4);
    for (const PulseSpec& p : pulses) {
        if (p.target != 0 && p.target != 1)
            throw ValidationError("pulse target must be 0 or 1");
        const Matrix r = rotation(p.axis, p.angle);
        const Matrix two_spin =
            p.target == 0 ? tensor(r, identity(2)) : tensor(identity(2), r);
        u = two_spin * u;
    }
    return u;
}

Matrix conditional_pulse_operator(const GateCycle& cycle) {
    cycle.params.validate();
    const Matrix u_ac = pulse_product(cycle.pulses_minus);
    const Matrix u_bd = pulse_product(cycle.pulses_plus);
    Matrix op = Matrix::Zero(8, 8);
    op.block(0, 0, 4, 4) = u_bd;  // |+> block, charge index 0
    op.block(4, 4, 4, 4) = u_ac;  // |-> block, charge index 1
    return op;
}

namespace {

// Amplitudes the charge propagator gives the |-> initial state:
// alpha on |->, beta on |+>.
void charge_amplitudes(const QcaParams& params, Complex& alpha, Complex& beta) {
    const Matrix v = charge_propagator(params);
    const int minus = static_cast<int>(ChargeBasis::Minus);
    const int plus = static_cast<int>(ChargeBasis::Plus);
    alpha = v(minus, minus);
    beta = v(plus, minus);
}

}  // namespace

Matrix merged_operator_unchecked(const GateCycle& cycle) {
    Complex alpha, beta;
    charge_amplitudes(cycle.params, alpha, beta);
    return alpha * pulse_product(cycle.pulses_minus) +
           beta * pulse_product(cycle.pulses_plus);
}

Matrix merged_operator(const GateCycle& cycle) {
    Matrix eff = merged_operator_unchecked(cycle);
    if (unitarity_defect(eff) > kMergeTol)
        throw NonUnitaryMerge(
            "pulse program does not merge to a unitary operator "
            "(U_AC^dag U_BD fails the Hermiticity condition)");
    return eff;
}

CycleResult run_gate_cycle(const GateCycle& cycle, const Vector& spin_in) {
    if (spin_in.size() != 4)
        throw DimensionMismatch("spin state must have dim 4");
    const Vector in = checked_state(spin_in);
    CycleResult r;
    r.effective = merged_operator(cycle);
    r.spin_out = r.effective * in;
    return r;
}

Vector run_gate_cycle_full(const GateCycle& cycle, const Vector& spin_in) {
    if (spin_in.size() != 4)
        throw DimensionMismatch("spin state must have dim 4");
    const Vector in = checked_state(spin_in);

    const Vector charge_minus =
        basis_state(2, static_cast<int>(ChargeBasis::Minus));
    Vector full = tensor(charge_minus, in);
    full = tensor(charge_propagator(cycle.params), identity(4)) * full;
    full = conditional_pulse_operator(cycle) * full;

    // Driving the electrons back to the dots identifies both charge blocks
    // with the final dot configuration; the spin state is their sum.
    Vector spin_out = full.segment(0, 4) + full.segment(4, 4);

    if (std::abs(spin_out.norm() - 1.0) > kMergeTol)
        throw NonUnitaryMerge("merged output state is not normalized");
    return spin_out;
}

}  // namespace qcasim
