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

#include "qcasim/pauli.hpp"

namespace qcasim {

namespace {

// Single-qubit table: sigma_a * sigma_b = phase * sigma_c.
struct MulEntry {
    Pauli result;
    Complex phase;
};

MulEntry mul1(Pauli a, Pauli b) {
    if (a == Pauli::I) return {b, 1.0};
    if (b == Pauli::I) return {a, 1.0};
    if (a == b) return {Pauli::I, 1.0};
    // XY=iZ, YZ=iX, ZX=iY; reversed order flips the sign.
    const auto cyc = [](Pauli x) { return (static_cast<int>(x) % 3) + 1; };
    const bool forward = cyc(a) == static_cast<int>(b);
    const Pauli third = static_cast<Pauli>(6 - static_cast<int>(a) -
                                           static_cast<int>(b));
    return {third, forward ? Complex(0, 1) : Complex(0, -1)};
}

}  // namespace

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
    if (p.factors.size() != q.factors.size())
        throw LengthMismatch("Pauli strings of length " +
                             std::to_string(p.factors.size()) + " and " +
                             std::to_string(q.factors.size()));
    PauliString out;
    out.factors.reserve(p.factors.size());
    out.coeff = p.coeff * q.coeff;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        const MulEntry e = mul1(p.factors[i], q.factors[i]);
        out.factors.push_back(e.result);
        out.coeff *= e.phase;
    }
    return out;
}

bool pauli_anticommutes(const PauliString& p, const PauliString& q) {
    if (p.factors.size() != q.factors.size())
        throw LengthMismatch("Pauli strings of different length");
    int differing = 0;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        const Pauli a = p.factors[i];
        const Pauli b = q.factors[i];
        if (a != Pauli::I && b != Pauli::I && a != b) ++differing;
    }
    return differing % 2 == 1;
}

Matrix pauli_to_matrix(const PauliString& p) {
    Matrix m = Matrix::Identity(1, 1);
    for (Pauli f : p.factors) {
        const Matrix factor =
            f == Pauli::I ? identity(2) : sigma(static_cast<Axis>(static_cast<int>(f) - 1));
        m = tensor(m, factor);
    }
    return p.coeff * m;
}

PauliString pauli_from_label(const std::string& label) {
    PauliString p;
    for (char c : label) {
        switch (c) {
            case 'I': p.factors.push_back(Pauli::I); break;
            case 'X': p.factors.push_back(Pauli::X); break;
            case 'Y': p.factors.push_back(Pauli::Y); break;
            case 'Z': p.factors.push_back(Pauli::Z); break;
            default:
                throw ParseError(std::string("bad Pauli letter '") + c + "'");
        }
    }
    return p;
}

std::string pauli_label(const PauliString& p) {
    std::string s;
    for (Pauli f : p.factors) s += "IXYZ"[static_cast<int>(f)];
    return s;
}

}  // namespace qcasim
