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

#include "qcasim/dfs.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace qcasim {

double QlSpec::theta() const { return principal_angle(delta0 - delta1); }

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::HL: return "HL";
        case GateKind::QL: return "QL";
        case GateKind::CPF: return "CPF";
    }
    return "?";
}

void LogicCircuit::validate() const {
    if (n_logic < 1 || n_logic > kMaxLogicQubits)
        throw RegisterTooLarge("n_logic must be in [1, 6], got " +
                               std::to_string(n_logic));
    for (const CircuitInstruction& ins : instructions) {
        if (ins.q0 < 0 || ins.q0 >= n_logic)
            throw OperandOutOfRange("operand " + std::to_string(ins.q0));
        if (ins.kind == GateKind::CPF) {
            if (ins.q1 < 0 || ins.q1 >= n_logic)
                throw OperandOutOfRange("operand " + std::to_string(ins.q1));
            if (ins.q1 == ins.q0)
                throw OperandOutOfRange("CPF operands must be distinct");
        }
    }
}

GateCycle hl_cycle(double gamma) {
    if (!(gamma > 0)) throw ValidationError("cycle needs gamma > 0");
    GateCycle c;
    c.params = {0.0, gamma, kPi / (2 * gamma)};
    c.pulses_minus = {{0, Axis::X, kPi}, {1, Axis::X, 3 * kPi}};
    c.pulses_plus = {{0, Axis::Z, 3 * kPi}};
    return c;
}

GateCycle cpf_cycle(double gamma) {
    if (!(gamma > 0)) throw ValidationError("cycle needs gamma > 0");
    GateCycle c;
    c.params = {0.0, gamma, kPi / (2 * gamma)};
    c.pulses_minus = {{0, Axis::Z, kPi / 2}, {1, Axis::Z, kPi / 2}};
    c.pulses_plus = {{0, Axis::Z, 3 * kPi / 2}, {1, Axis::Z, 3 * kPi / 2}};
    return c;
}

Matrix ql_operator(const QlSpec& spec) {
    if (!std::isfinite(spec.delta0) || !std::isfinite(spec.delta1))
        throw ValidationError("QL phases must be finite");
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = std::exp(Complex(0, spec.delta0));
    u(1, 1) = std::exp(Complex(0, spec.delta1));
    return u;
}

Matrix ideal_hl() {
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

Matrix ideal_cpf() {
    Matrix c = identity(4);
    c(3, 3) = -1;
    return c;
}

Matrix ideal_ql(double theta) {
    Matrix q = identity(2);
    q(1, 1) = std::exp(Complex(0, theta));
    return q;
}

double principal_angle(double x) {
    double y = std::remainder(x, 2 * kPi);
    if (y <= -kPi) y += 2 * kPi;
    return y;
}

Matrix euler_reconstruct(const EulerAngles& a) {
    const Matrix h = ideal_hl();
    return ideal_ql(a.alpha) * h * ideal_ql(a.beta) * h *
           ideal_ql(a.gamma_angle);
}

EulerAngles euler_decompose(const Matrix& target) {
    if (target.rows() != 2 || target.cols() != 2)
        throw DimensionMismatch("euler_decompose expects a 2x2 operator");
    require_unitary(target);

    // Reduce to SU(2), then read off a ZXZ factorization; the QL/HL chain
    // QL(a) H QL(b) H QL(g) equals e^{i(a+b+g)/2} Rz(a) Rx(b) Rz(g).
    const Complex det = target.determinant();
    const double half_det_phase = std::arg(det) / 2;
    const Matrix v = std::exp(Complex(0, -half_det_phase)) * target;

    const double c = std::abs(v(0, 0));
    const double s = std::abs(v(0, 1));
    double beta = 2 * std::atan2(s, c);
    double alpha = 0.0;
    double gamma = 0.0;
    constexpr double kDegenerate = 1e-12;
    if (s < kDegenerate) {
        beta = 0.0;
        alpha = principal_angle(-2 * std::arg(v(0, 0)));
    } else if (c < kDegenerate) {
        beta = kPi;
        alpha = principal_angle(-2 * std::arg(v(0, 1)) - kPi);
    } else {
        const double sum = -2 * std::arg(v(0, 0));
        const double diff = -2 * std::arg(v(0, 1)) - kPi;
        alpha = principal_angle((sum + diff) / 2);
        gamma = principal_angle((sum - diff) / 2);
    }

    EulerAngles a{alpha, beta, gamma, 0.0};
    // The phase is recovered from the chain itself, which keeps it correct
    // after the angle wrapping above.
    const Matrix chain = euler_reconstruct(a);
    a.global_phase =
        principal_angle(std::arg((chain.adjoint() * target).trace()));
    return a;
}

namespace {

Vector run_ideal(const LogicCircuit& circuit, const Vector& input) {
    DecodeResult d = decode(input);
    if (d.leakage_weight > 1e-9)
        throw LeakageDetected("ideal-mode input leaves the code space");
    Vector logical = d.logical_amps;
    for (const CircuitInstruction& ins : circuit.instructions) {
        switch (ins.kind) {
            case GateKind::HL:
                logical = apply_on_qubits(logical, ideal_hl(), {ins.q0});
                break;
            case GateKind::QL:
                logical =
                    apply_on_qubits(logical, ideal_ql(ins.ql.theta()), {ins.q0});
                break;
            case GateKind::CPF:
                logical =
                    apply_on_qubits(logical, ideal_cpf(), {ins.q0, ins.q1});
                break;
        }
    }
    return encode_logical(logical);
}

Vector run_physical(const LogicCircuit& circuit, const Vector& input) {
    Vector state = input;
    const Matrix hl_eff = merged_operator(hl_cycle());
    const Matrix cpf_eff = merged_operator(cpf_cycle());
    for (const CircuitInstruction& ins : circuit.instructions) {
        switch (ins.kind) {
            case GateKind::HL:
                state = apply_on_qubits(state, hl_eff,
                                        {2 * ins.q0, 2 * ins.q0 + 1});
                break;
            case GateKind::QL:
                state = apply_on_qubits(state, ql_operator(ins.ql),
                                        {2 * ins.q0 + 1});
                break;
            case GateKind::CPF:
                // Top-line members of the two pairs.
                state = apply_on_qubits(state, cpf_eff,
                                        {2 * ins.q0, 2 * ins.q1});
                break;
        }
    }
    DecodeResult d = decode(state);
    if (d.leakage_weight > 1e-9)
        throw LeakageDetected("physical-mode output left the code space");
    return state;
}

}  // namespace

Vector run_circuit(const LogicCircuit& circuit, const Vector& input,
                   RunMode mode) {
    circuit.validate();
    const Eigen::Index dim = Eigen::Index{1} << (2 * circuit.n_logic);
    if (input.size() != dim)
        throw DimensionMismatch("input dim " + std::to_string(input.size()) +
                                ", expected " + std::to_string(dim));
    const Vector in = checked_state(input);
    return mode == RunMode::Ideal ? run_ideal(circuit, in)
                                  : run_physical(circuit, in);
}

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty angle");

    const std::size_t pos = s.find("pi");
    if (pos == std::string::npos) {
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(s, &used);
        } catch (const std::exception&) {
            throw ParseError("bad angle '" + text + "'");
        }
        if (used != s.size()) throw ParseError("bad angle '" + text + "'");
        return value;
    }

    std::string pre = s.substr(0, pos);
    std::string post = s.substr(pos + 2);
    double coef = 1.0;
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    if (pre == "-") {
        coef = -1.0;
    } else if (!pre.empty()) {
        std::size_t used = 0;
        try {
            coef = std::stod(pre, &used);
        } catch (const std::exception&) {
            throw ParseError("bad angle '" + text + "'");
        }
        if (used != pre.size()) throw ParseError("bad angle '" + text + "'");
    }
    double den = 1.0;
    if (!post.empty()) {
        if (post[0] != '/') throw ParseError("bad angle '" + text + "'");
        std::size_t used = 0;
        try {
            den = std::stod(post.substr(1), &used);
        } catch (const std::exception&) {
            throw ParseError("bad angle '" + text + "'");
        }
        if (used != post.size() - 1 || den == 0)
            throw ParseError("bad angle '" + text + "'");
    }
    return coef * kPi / den;
}

LogicCircuit parse_circuit(int n_logic, const std::string& text) {
    LogicCircuit circuit;
    circuit.n_logic = n_logic;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;

        CircuitInstruction ins;
        std::string tail;
        if (op == "HL") {
            ins.kind = GateKind::HL;
            if (!(ls >> ins.q0))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": HL expects one qubit index");
        } else if (op == "QL") {
            ins.kind = GateKind::QL;
            std::string angle;
            if (!(ls >> ins.q0 >> angle))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": QL expects qubit index and angle");
            ins.ql.delta0 = parse_angle(angle);
            ins.ql.delta1 = 0.0;
        } else if (op == "CPF") {
            ins.kind = GateKind::CPF;
            if (!(ls >> ins.q0 >> ins.q1))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": CPF expects two qubit indices");
        } else {
            throw ParseError("line " + std::to_string(line_no) +
                             ": unknown instruction '" + op + "'");
        }
        if (ls >> tail)
            throw ParseError("line " + std::to_string(line_no) +
                             ": trailing token '" + tail + "'");
        circuit.instructions.push_back(ins);
    }
    circuit.validate();
    return circuit;
}

}  // namespace qcasim
