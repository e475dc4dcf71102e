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

#include "qcasim/gates.hpp"
#include "qcasim/qca.hpp"

#include <doctest.h>

#include <random>

using namespace qcasim;

TEST_CASE("charge hamiltonian") {
    Matrix h = charge_hamiltonian({0.0, 2.0, 1.0});
    CHECK(h(0, 0) == Complex(0.0));
    CHECK(h(0, 1) == Complex(1.0));
    CHECK(h(1, 0) == Complex(1.0));
    CHECK(h(1, 1) == Complex(0.0));

    // pure offset term
    h = charge_hamiltonian({2.0, 0.0, 1.0});
    CHECK(h(0, 0) == Complex(1.0));
    CHECK(h(1, 1) == Complex(-1.0));
    CHECK(h(0, 1) == Complex(0.0));

    h = charge_hamiltonian({1.0, 1.0, 1.0});
    CHECK(h(0, 0) == Complex(0.5));
    CHECK(h(0, 1) == Complex(0.5));
    CHECK(h(1, 1) == Complex(-0.5));
}

TEST_CASE("charge propagator") {
    CHECK((charge_propagator({0.3, 1.0, 0.0}) - identity(2))
              .cwiseAbs().maxCoeff() < 1e-14);

    const double gamma = 2.3;
    const Matrix quarter = charge_propagator({0.0, gamma, kPi / (2 * gamma)});
    const Matrix expected =
        (identity(2) - Complex(0, 1) * sigma(Axis::X)) / std::sqrt(2.0);
    CHECK((quarter - expected).cwiseAbs().maxCoeff() < 1e-12);

    const Matrix half = charge_propagator({0.0, gamma, kPi / gamma});
    CHECK((half - Complex(0, -1) * sigma(Axis::X)).cwiseAbs().maxCoeff() <
          1e-12);

    // |-> -> (|-> - i|+>)/sqrt(2)
    const Vector out = quarter * basis_state(2, 1);
    CHECK(std::abs(out(1) - Complex(1 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(out(0) - Complex(0, -1 / std::sqrt(2.0))) < 1e-12);

    // additive composition in duration
    const Matrix a = charge_propagator({0.4, 1.1, 0.6});
    const Matrix b = charge_propagator({0.4, 1.1, 0.9});
    const Matrix ab = charge_propagator({0.4, 1.1, 1.5});
    CHECK((a * b - ab).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("conditional pulse operator") {
    GateCycle empty;
    CHECK((conditional_pulse_operator(empty) - identity(8))
              .cwiseAbs().maxCoeff() == 0.0);

    const GateCycle hl = hl_cycle();
    const Matrix op = conditional_pulse_operator(hl);
    const Matrix u_ac = tensor(sigma(Axis::X), sigma(Axis::X));
    const Matrix u_bd = tensor(Matrix(Complex(0, 1) * sigma(Axis::Z)), identity(2));
    CHECK((op.block(4, 4, 4, 4) - u_ac).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((op.block(0, 0, 4, 4) - u_bd).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(op.block(0, 4, 4, 4).cwiseAbs().maxCoeff() == 0.0);
    CHECK(op.block(4, 0, 4, 4).cwiseAbs().maxCoeff() == 0.0);

    // single pulse on target 1 lands in the tensor slot I (x) R
    GateCycle single;
    single.pulses_minus = {{1, Axis::Y, 0.7}};
    const Matrix s = conditional_pulse_operator(single);
    CHECK((s.block(4, 4, 4, 4) - tensor(identity(2), rotation(Axis::Y, 0.7)))
              .cwiseAbs().maxCoeff() < 1e-14);
    CHECK((s.block(0, 0, 4, 4) - identity(4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("run_gate_cycle HL and CPF") {
    const CycleResult hl = run_gate_cycle(hl_cycle(), basis_state(4, 1));
    Vector want(4);
    want << 0, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0;
    CHECK((hl.spin_out - want).cwiseAbs().maxCoeff() < 1e-12);

    // effective = (XX + ZI)/sqrt(2) exactly, and squares to identity
    const Matrix expected =
        (tensor(sigma(Axis::X), sigma(Axis::X)) +
         tensor(sigma(Axis::Z), identity(2))) / std::sqrt(2.0);
    CHECK((hl.effective - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((hl.effective * hl.effective - identity(4)).cwiseAbs().maxCoeff() <
          1e-12);

    const CycleResult cpf = run_gate_cycle(cpf_cycle(), basis_state(4, 3));
    const Complex prefactor = Complex(1, -1) / std::sqrt(2.0);
    CHECK(std::abs(cpf.spin_out(3) - (-prefactor)) < 1e-12);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(cpf.spin_out(i)) < 1e-12);
    CHECK(gate_similarity(cpf.effective, ideal_cpf()) ==
          doctest::Approx(1.0).epsilon(1e-10));

    // zero duration: alpha = 1, beta = 0, so effective is U_AC exactly
    GateCycle frozen = hl_cycle();
    frozen.params.duration = 0.0;
    const CycleResult still = run_gate_cycle(frozen, basis_state(4, 0));
    CHECK((still.effective - pulse_product(frozen.pulses_minus))
              .cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("full 8-dim pipeline matches shortcut") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    for (const GateCycle& cycle : {hl_cycle(), cpf_cycle()}) {
        Vector psi(4);
        for (int i = 0; i < 4; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
        psi /= psi.norm();
        const Vector full = run_gate_cycle_full(cycle, psi);
        const Vector shortcut = run_gate_cycle(cycle, psi).spin_out;
        CHECK((full - shortcut).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("non-unitary merges are detected, valid ones are not") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    std::uniform_int_distribution<int> axis(0, 2);
    std::uniform_int_distribution<int> target(0, 1);
    std::uniform_int_distribution<int> count(0, 3);

    int raised = 0;
    for (int trial = 0; trial < 200; ++trial) {
        GateCycle cycle;
        cycle.params = {0.0, 1.0, kPi / 2};
        const auto random_pulses = [&] {
            std::vector<PulseSpec> pulses;
            const int n = count(rng);
            for (int i = 0; i < n; ++i)
                pulses.push_back(
                    {target(rng), static_cast<Axis>(axis(rng)), angle(rng)});
            return pulses;
        };
        cycle.pulses_minus = random_pulses();
        cycle.pulses_plus = random_pulses();

        const double defect = unitarity_defect(merged_operator_unchecked(cycle));
        if (defect > kMergeTol) {
            CHECK_THROWS_AS((void)merged_operator(cycle), NonUnitaryMerge);
            ++raised;
        } else {
            CHECK_NOTHROW((void)merged_operator(cycle));
        }

        // when |alpha| = |beta|, unitarity is equivalent to U_AC^dag U_BD
        // being Hermitian
        const Matrix cross = pulse_product(cycle.pulses_minus).adjoint() *
                             pulse_product(cycle.pulses_plus);
        const bool hermitian_cross = is_hermitian(cross, 1e-9);
        CHECK(hermitian_cross == (defect <= kMergeTol));
    }
    CHECK(raised > 0);  // random pulses do hit the invalid regime
}
