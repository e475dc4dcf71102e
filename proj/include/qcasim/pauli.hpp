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

namespace qcasim {

enum class Pauli { I, X, Y, Z };

/// A tensor product of single-qubit Paulis with a complex coefficient.
/// Closed under multiplication: the product coefficient is a fourth root
/// of unity times the input coefficients.
struct PauliString {
    std::vector<Pauli> factors;
    Complex coeff{1.0, 0.0};
};

PauliString pauli_mul(const PauliString& p, const PauliString& q);

/// True when p and q anticommute (odd number of differing non-identity
/// factors at matching positions).
bool pauli_anticommutes(const PauliString& p, const PauliString& q);

Matrix pauli_to_matrix(const PauliString& p);

/// Parses labels like "XX", "ZI", "IY". Coefficient is +1.
PauliString pauli_from_label(const std::string& label);
std::string pauli_label(const PauliString& p);

}  // namespace qcasim
