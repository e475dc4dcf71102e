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

#include "qcasim/qca.hpp"

#include <string>

// Canonical gate-cycle programs, ideal logical targets, Euler-angle
// universality, and logical-circuit execution on encoded registers.
//
// Physical layout: logic qubit k occupies physical qubits (2k, 2k+1) =
// (top line, bottom line). CPF couples the top-line members of its two
// operand pairs; QL acts on the bottom-line member.

namespace qcasim {

struct QlSpec {
    double delta0 = 0.0;  // phase on physical |0>
    double delta1 = 0.0;  // phase on physical |1>

    double theta() const;  // delta0 - delta1, reported in (-pi, pi]
};

enum class GateKind { HL, QL, CPF };

std::string gate_name(GateKind kind);

struct CircuitInstruction {
    GateKind kind = GateKind::HL;
    int q0 = 0;
    int q1 = -1;   // CPF only
    QlSpec ql{};   // QL only
};

struct LogicCircuit {
    int n_logic = 1;  // <= 6
    std::vector<CircuitInstruction> instructions;

    void validate() const;
};

/// Cycle realizing the logical Hadamard: U_AC = R_x(pi) (x) R_x(3pi),
/// U_BD = R_z(3pi) (x) I, symmetric cell, duration pi/(2 gamma).
GateCycle hl_cycle(double gamma = 1.0);

/// Cycle realizing the controlled-phase flip on two top-line spins:
/// U_AC = R_z(pi/2)^(x2), U_BD = R_z(3pi/2)^(x2).
GateCycle cpf_cycle(double gamma = 1.0);

/// Faraday-rotation phase gate diag(e^{i delta0}, e^{i delta1}) on one
/// physical qubit.
Matrix ql_operator(const QlSpec& spec);

Matrix ideal_hl();                // (1/sqrt2) [[1,1],[1,-1]]
Matrix ideal_cpf();               // diag(1,1,1,-1)
Matrix ideal_ql(double theta);    // diag(1, e^{i theta})

struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma_angle = 0.0;
    double global_phase = 0.0;
};

/// Factors a 2x2 unitary as
///   e^{i global_phase} * QL(alpha) * HL * QL(beta) * HL * QL(gamma_angle),
/// angles in (-pi, pi]. Throws NonUnitaryInput.
EulerAngles euler_decompose(const Matrix& target);

/// The QL(alpha) HL QL(beta) HL QL(gamma) product (without the phase).
Matrix euler_reconstruct(const EulerAngles& a);

enum class RunMode { Ideal, Physical };

/// Runs a logical circuit on a physical-dim (4^n_logic) state. Ideal mode
/// decodes, applies the ideal logical matrices and re-encodes; Physical
/// mode applies gate-cycle effective operators on the physical qubits.
Vector run_circuit(const LogicCircuit& circuit, const Vector& input,
                   RunMode mode);

/// Circuit text format: one instruction per line, `HL q`, `QL q theta`,
/// `CPF q1 q2`; `#` starts a comment; blank lines ignored. QL theta sets
/// delta0 = theta, delta1 = 0.
LogicCircuit parse_circuit(int n_logic, const std::string& text);

/// Parses an angle in radians; accepts plain decimals and exact pi
/// fractions like "pi", "-pi/2", "3pi/4", "2*pi".
double parse_angle(const std::string& text);

/// Wraps an angle to (-pi, pi].
double principal_angle(double x);

}  // namespace qcasim
