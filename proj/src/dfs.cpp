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

#include "qcasim/dfs.hpp"

#include <bit>
#include <cmath>

namespace qcasim {

std::string error_class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::IdentityOnCode: return "IdentityOnCode";
        case ErrorClass::LogicError: return "LogicError";
        case ErrorClass::Leakage: return "Leakage";
    }
    return "?";
}

namespace {

int logic_count_from_dim(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << (2 * n)) < dim) ++n;
    if ((Eigen::Index{1} << (2 * n)) != dim)
        throw DimensionNotPairEven("state dim " + std::to_string(dim) +
                                   " is not 4^n");
    return n;
}

// Physical basis index of the code word for logical basis index l.
Eigen::Index code_word_index(int n_logic, Eigen::Index l) {
    Eigen::Index phys = 0;
    for (int k = 0; k < n_logic; ++k) {
        const Eigen::Index b = (l >> (n_logic - 1 - k)) & 1;
        // pair (top, bottom) = (b, 1-b) at physical qubits 2k, 2k+1
        phys |= b << (2 * n_logic - 1 - 2 * k);
        phys |= (1 - b) << (2 * n_logic - 1 - (2 * k + 1));
    }
    return phys;
}

}  // namespace

EncodedRegister encode_basis(const std::vector<int>& bits) {
    const int n = static_cast<int>(bits.size());
    if (n < 1 || n > kMaxLogicQubits)
        throw RegisterTooLarge("register size must be in [1, 6], got " +
                               std::to_string(n));
    Eigen::Index l = 0;
    for (int k = 0; k < n; ++k) {
        if (bits[k] != 0 && bits[k] != 1)
            throw ValidationError("bits must be 0 or 1");
        l = (l << 1) | bits[k];
    }
    EncodedRegister reg;
    reg.n_logic = n;
    reg.state = basis_state(Eigen::Index{1} << (2 * n), code_word_index(n, l));
    return reg;
}

EncodedRegister init_register(int n) {
    if (n < 1 || n > kMaxLogicQubits)
        throw RegisterTooLarge("register size must be in [1, 6], got " +
                               std::to_string(n));
    return encode_basis(std::vector<int>(n, 0));
}

Vector encode_logical(const Vector& logical_amps) {
    int n = 0;
    while ((Eigen::Index{1} << n) < logical_amps.size()) ++n;
    if ((Eigen::Index{1} << n) != logical_amps.size())
        throw DimensionMismatch("logical dim is not a power of 2");
    if (n > kMaxLogicQubits)
        throw RegisterTooLarge("more than 6 logic qubits");
    Vector phys = Vector::Zero(Eigen::Index{1} << (2 * n));
    for (Eigen::Index l = 0; l < logical_amps.size(); ++l)
        phys(code_word_index(n, l)) = logical_amps(l);
    return phys;
}

DecodeResult decode(const Vector& state) {
    const int n = logic_count_from_dim(state.size());
    const Vector in = checked_state(state);
    DecodeResult r;
    r.logical_amps = Vector::Zero(Eigen::Index{1} << n);
    double code_norm2 = 0.0;
    for (Eigen::Index l = 0; l < r.logical_amps.size(); ++l) {
        const Complex a = in(code_word_index(n, l));
        r.logical_amps(l) = a;
        code_norm2 += std::norm(a);
    }
    r.leakage_weight = std::max(0.0, 1.0 - code_norm2);
    r.renormalized = r.leakage_weight <= 1e-9;
    if (r.renormalized && code_norm2 > 0)
        r.logical_amps /= std::sqrt(code_norm2);
    return r;
}

double leakage_weight(const Vector& state) {
    return decode(state).leakage_weight;
}

Matrix collective_z(int n_physical) {
    if (n_physical < 1 || n_physical > kMaxPhysicalQubits)
        throw RegisterTooLarge("physical qubit count must be in [1, 12]");
    const Eigen::Index dim = Eigen::Index{1} << n_physical;
    Matrix z = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const int ones = std::popcount(static_cast<unsigned long long>(i));
        z(i, i) = static_cast<double>(n_physical - 2 * ones);
    }
    return z;
}

Vector apply_collective_dephasing(const Vector& state, double phi) {
    const int n = logic_count_from_dim(state.size());
    const int n_physical = 2 * n;
    const Vector in = checked_state(state);
    Vector out(in.size());
    for (Eigen::Index i = 0; i < in.size(); ++i) {
        const int ones = std::popcount(static_cast<unsigned long long>(i));
        const int zval = n_physical - 2 * ones;
        // Z eigenvalue 0 on the code space: those amplitudes are untouched
        // exactly, not merely up to rounding.
        out(i) = zval == 0 ? in(i) : std::exp(Complex(0, -phi * zval)) * in(i);
    }
    return out;
}

ErrorClass classify_pauli(const PauliString& p) {
    if (p.factors.size() != 2)
        throw WrongQubitCount("classification needs exactly 2 qubits");
    const Matrix m = pauli_to_matrix(p);
    // Code basis: |01> -> index 1, |10> -> index 2.
    constexpr int kCode[2] = {1, 2};
    constexpr int kOutside[2] = {0, 3};
    Matrix restriction(2, 2);
    for (int col = 0; col < 2; ++col) {
        const Vector image = m.col(kCode[col]);
        for (int row : kOutside)
            if (std::abs(image(row)) > 1e-12) return ErrorClass::Leakage;
        restriction(0, col) = image(kCode[0]);
        restriction(1, col) = image(kCode[1]);
    }
    const bool diagonal = std::abs(restriction(0, 1)) <= 1e-12 &&
                          std::abs(restriction(1, 0)) <= 1e-12;
    if (diagonal &&
        std::abs(restriction(0, 0) - restriction(1, 1)) <= 1e-12)
        return ErrorClass::IdentityOnCode;
    return ErrorClass::LogicError;
}

}  // namespace qcasim
