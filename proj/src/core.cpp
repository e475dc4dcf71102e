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

#include "qcasim/core.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

namespace qcasim {

Matrix sigma(Axis k) {
    Matrix s(2, 2);
    switch (k) {
        case Axis::X:
            s << 0, 1, 1, 0;
            break;
        case Axis::Y:
            s << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case Axis::Z:
            s << 1, 0, 0, -1;
            break;
    }
    return s;
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix tensor(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

Vector tensor(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Vector basis_state(Eigen::Index dim, Eigen::Index index) {
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return v;
}

double unitarity_defect(const Matrix& u) {
    return (u.adjoint() * u - identity(u.rows())).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& u, double tol) {
    return u.rows() == u.cols() && unitarity_defect(u) <= tol;
}

bool is_hermitian(const Matrix& h, double tol) {
    return h.rows() == h.cols() &&
           (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_unitary(const Matrix& u, double tol) {
    if (!is_unitary(u, tol)) throw NonUnitaryInput("operator is not unitary");
}

void require_hermitian(const Matrix& h, double tol) {
    if (!is_hermitian(h, tol))
        throw NonHermitianInput("operator is not Hermitian");
}

Vector checked_state(Vector v) {
    const double n = v.norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) >= kNormDriftTol)
        throw ValidationError("state norm " + std::to_string(n) +
                              " deviates from 1 by more than 1e-6");
    return v / n;
}

Matrix rotation(Axis axis, double theta) {
    if (!std::isfinite(theta)) throw ValidationError("non-finite angle");
    return std::cos(theta / 2) * identity(2) -
           Complex(0, 1) * std::sin(theta / 2) * sigma(axis);
}

Matrix expm_hermitian(const Matrix& h, double t) {
    require_hermitian(h);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Eigen::VectorXd lambda = es.eigenvalues();
    Vector phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        phases(i) = std::exp(Complex(0, -lambda(i) * t));
    return es.eigenvectors() * phases.asDiagonal() *
           es.eigenvectors().adjoint();
}

double state_fidelity(const Vector& psi, const Vector& phi) {
    if (psi.size() != phi.size())
        throw DimensionMismatch("state dims " + std::to_string(psi.size()) +
                                " vs " + std::to_string(phi.size()));
    return std::norm(psi.dot(phi));
}

double gate_similarity(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw DimensionMismatch("operator dims differ");
    require_unitary(u);
    require_unitary(v);
    return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

Vector apply_on_qubits(const Vector& state, const Matrix& u,
                       const std::vector<int>& qubits) {
    Eigen::Index dim = state.size();
    int m = 0;
    while ((Eigen::Index{1} << m) < dim) ++m;
    if ((Eigen::Index{1} << m) != dim)
        throw DimensionMismatch("state dim is not a power of 2");
    const int k = static_cast<int>(qubits.size());
    if (u.rows() != (Eigen::Index{1} << k))
        throw DimensionMismatch("operator dim does not match qubit count");
    for (int q : qubits)
        if (q < 0 || q >= m) throw OperandOutOfRange("qubit index " + std::to_string(q));

    Vector out = Vector::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        Eigen::Index local = 0;
        for (int j = 0; j < k; ++j)
            local |= ((i >> (m - 1 - qubits[j])) & 1) << (k - 1 - j);
        for (Eigen::Index lp = 0; lp < (Eigen::Index{1} << k); ++lp) {
            Eigen::Index src = i;
            for (int j = 0; j < k; ++j) {
                const Eigen::Index bit = (lp >> (k - 1 - j)) & 1;
                const int pos = m - 1 - qubits[j];
                src = (src & ~(Eigen::Index{1} << pos)) | (bit << pos);
            }
            out(i) += u(local, lp) * state(src);
        }
    }
    return out;
}

Matrix nearest_unitary(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace qcasim
