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

#include "qcasim/pauli.hpp"

// Decoherence-free-subspace codec. Each logic qubit is one electron pair
// with code basis |0_L> = |01>, |1_L> = |10>; registers are laid out
// pair-major (i1, i1', i2, i2', ...). The collective dephasing generator
// (the sum of all single-spin sigma_z) annihilates the code space exactly.

namespace qcasim {

struct EncodedRegister {
    int n_logic = 0;
    Vector state;  // dim 4^n_logic
};

enum class ErrorClass { IdentityOnCode, LogicError, Leakage };

std::string error_class_name(ErrorClass c);

/// One pair per bit: 0 -> |01>, 1 -> |10>.
EncodedRegister encode_basis(const std::vector<int>& bits);

/// All-zeros register: top line spins up, bottom line spins down.
EncodedRegister init_register(int n);

/// Lifts a 2^n logical amplitude vector to the 4^n physical space.
Vector encode_logical(const Vector& logical_amps);

struct DecodeResult {
    Vector logical_amps;    // length 2^n
    double leakage_weight;  // 1 - |code-space projection|^2
    bool renormalized;      // amps rescaled (leakage <= 1e-9), else raw
};

DecodeResult decode(const Vector& state);

double leakage_weight(const Vector& state);

/// Sum of sigma_z over all physical qubits; diagonal integer entries.
Matrix collective_z(int n_physical);

/// exp(-i phi Z_total) applied entrywise on the diagonal.
Vector apply_collective_dephasing(const Vector& state, double phi);

/// Classifies a two-qubit Pauli by its action on span{|01>, |10>}.
ErrorClass classify_pauli(const PauliString& p);

inline constexpr int kMaxPhysicalQubits = 12;

}  // namespace qcasim
