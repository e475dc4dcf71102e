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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Dense complex linear algebra for small tensor-product Hilbert spaces
// (dim <= 4096). Qubit ordering convention, used everywhere in this
// project: the leftmost tensor factor is the most significant bit of the
// basis index.

namespace qcasim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNormDriftTol = 1e-6;
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr int kMaxLogicQubits = 6;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs from the caller (wrong dims, out-of-range values, parse
// failures). CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// A numerical contract was violated at runtime (non-unitary merge,
// non-Hermitian input on a trusted path). CLI maps these to exit code 3.
struct ContractError : Error {
    using Error::Error;
};

#define QCASIM_ERROR(Name, Base)                                              \
    struct Name : Base {                                                      \
        explicit Name(const std::string& what) : Base(#Name ": " + what) {}   \
    }

QCASIM_ERROR(DimensionMismatch, ValidationError);
QCASIM_ERROR(LengthMismatch, ValidationError);
QCASIM_ERROR(RegisterTooLarge, ValidationError);
QCASIM_ERROR(DimensionNotPairEven, ValidationError);
QCASIM_ERROR(WrongQubitCount, ValidationError);
QCASIM_ERROR(OperandOutOfRange, ValidationError);
QCASIM_ERROR(EmptyRange, ValidationError);
QCASIM_ERROR(ParseError, ValidationError);
QCASIM_ERROR(NonHermitianInput, ContractError);
QCASIM_ERROR(NonUnitaryInput, ContractError);
QCASIM_ERROR(NonUnitaryMerge, ContractError);
QCASIM_ERROR(NotAGroup, ContractError);
QCASIM_ERROR(LeakageDetected, ContractError);

#undef QCASIM_ERROR

enum class Axis { X, Y, Z };

Matrix sigma(Axis k);
Matrix identity(Eigen::Index dim);

/// Kronecker product; `a` is the more-significant factor.
Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& a, const Vector& b);

Vector basis_state(Eigen::Index dim, Eigen::Index index);

double unitarity_defect(const Matrix& u);
bool is_unitary(const Matrix& u, double tol = kUnitaryTol);
bool is_hermitian(const Matrix& h, double tol = kHermitianTol);
void require_unitary(const Matrix& u, double tol = kUnitaryTol);
void require_hermitian(const Matrix& h, double tol = kHermitianTol);

/// Normalizes `v` when its norm drifted by less than kNormDriftTol;
/// larger deviation is treated as a caller bug.
Vector checked_state(Vector v);

/// R_k(theta) = exp(-i theta sigma_k / 2) in closed form.
Matrix rotation(Axis axis, double theta);

/// exp(-i H t) by eigendecomposition. Throws NonHermitianInput.
Matrix expm_hermitian(const Matrix& h, double t);

/// |<psi|phi>|^2, global-phase invariant.
double state_fidelity(const Vector& psi, const Vector& phi);

/// |tr(U^dag V)| / dim; 1 iff V equals U up to a global phase.
double gate_similarity(const Matrix& u, const Matrix& v);

/// Applies a k-qubit operator on the listed qubits of an m-qubit state.
/// qubits[0] is the most significant factor of `u`; qubit 0 is the most
/// significant qubit of the state.
Vector apply_on_qubits(const Vector& state, const Matrix& u,
                       const std::vector<int>& qubits);

/// Nearest unitary in Frobenius norm (polar factor via SVD).
Matrix nearest_unitary(const Matrix& m);

}  // namespace qcasim
