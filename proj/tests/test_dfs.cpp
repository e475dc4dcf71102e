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
#include "qcasim/gates.hpp"

#include <doctest.h>

#include <random>

using namespace qcasim;

namespace {

// Brute-force classification: apply the 4x4 matrix to both code basis
// vectors and inspect the projections.
ErrorClass classify_by_matrix(const PauliString& p) {
    const Matrix m = pauli_to_matrix(p);
    const Vector c0 = basis_state(4, 1);
    const Vector c1 = basis_state(4, 2);
    const Vector i0 = m * c0;
    const Vector i1 = m * c1;
    const auto outside = [](const Vector& v) {
        return std::sqrt(std::norm(v(0)) + std::norm(v(3)));
    };
    if (outside(i0) > 1e-12 || outside(i1) > 1e-12) return ErrorClass::Leakage;
    Matrix r(2, 2);
    r << i0(1), i1(1), i0(2), i1(2);
    if ((r - r(0, 0) * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12)
        return ErrorClass::IdentityOnCode;
    return ErrorClass::LogicError;
}

}  // namespace

TEST_CASE("encoding") {
    CHECK((encode_basis({0}).state - basis_state(4, 1)).norm() == 0.0);
    CHECK((encode_basis({1}).state - basis_state(4, 2)).norm() == 0.0);
    // [0,1] -> |0110> in ordering (i1, i1', i2, i2')
    CHECK((encode_basis({0, 1}).state - basis_state(16, 0b0110)).norm() == 0.0);

    CHECK((init_register(1).state - basis_state(4, 1)).norm() == 0.0);
    CHECK((init_register(2).state - basis_state(16, 0b0101)).norm() == 0.0);
    CHECK_THROWS_AS(init_register(0), RegisterTooLarge);
    CHECK_THROWS_AS(init_register(7), RegisterTooLarge);

    CHECK(leakage_weight(init_register(3).state) <= 1e-12);
}

TEST_CASE("decode") {
    DecodeResult d = decode(basis_state(4, 1));
    CHECK(d.logical_amps(0) == Complex(1.0));
    CHECK(d.logical_amps(1) == Complex(0.0));
    CHECK(d.leakage_weight == 0.0);

    d = decode(basis_state(4, 0));
    CHECK(d.leakage_weight == doctest::Approx(1.0));
    CHECK(!d.renormalized);

    Vector half(4);
    half << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0, 0;
    d = decode(half);
    CHECK(d.leakage_weight == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(decode(basis_state(8, 0)), DimensionNotPairEven);

    // decode of encode is the identity on bit strings
    for (int bits = 0; bits < 8; ++bits) {
        const std::vector<int> b = {(bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
        d = decode(encode_basis(b).state);
        CHECK(d.leakage_weight == 0.0);
        CHECK(d.logical_amps(bits) == Complex(1.0));
    }
}

TEST_CASE("collective Z") {
    const Matrix z2 = collective_z(2);
    CHECK((z2 * basis_state(4, 1)).norm() == 0.0);          // Z|01> = 0
    CHECK((z2 * basis_state(4, 0))(0) == Complex(2.0));     // Z|00> = 2|00>
    const Matrix z4 = collective_z(4);
    CHECK((z4 * basis_state(16, 0b0110)).norm() == 0.0);    // two up, two down
    CHECK_THROWS_AS(collective_z(13), RegisterTooLarge);

    // Z annihilates every code basis state exactly
    for (int bits = 0; bits < 4; ++bits) {
        const Vector code = encode_basis({(bits >> 1) & 1, bits & 1}).state;
        CHECK((z4 * code).norm() == 0.0);
    }
}

TEST_CASE("collective dephasing") {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> gauss;
    Vector logical(2);
    logical << Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng));
    logical /= logical.norm();
    const Vector code = encode_logical(logical);
    // code-space states are exactly invariant, entrywise
    for (double phi : {0.1, 1.0, 2.7, 6.2}) {
        const Vector out = apply_collective_dephasing(code, phi);
        CHECK((out - code).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(std::abs(out.norm() - 1.0) < 1e-12);
    }

    // |00> picks up a pure global phase e^{-2 i phi}
    const Vector zz = apply_collective_dephasing(basis_state(4, 0), 0.8);
    CHECK(std::abs(zz(0) - std::exp(Complex(0, -1.6))) < 1e-14);

    // (|00> + |01>)/sqrt(2) at phi = pi/2: relative phase pi
    Vector mix(4);
    mix << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0, 0;
    const Vector normalized = mix / mix.norm();
    const Vector out = apply_collective_dephasing(mix, kPi / 2);
    CHECK(std::abs(out(0) - std::exp(Complex(0, -kPi)) / std::sqrt(2.0)) <
          1e-14);
    // the zero-eigenvalue amplitude is untouched bit for bit
    CHECK(out(1) == normalized(1));
}

TEST_CASE("pauli classification") {
    CHECK(classify_pauli(pauli_from_label("XI")) == ErrorClass::Leakage);
    CHECK(classify_pauli(pauli_from_label("XX")) == ErrorClass::LogicError);
    CHECK(classify_pauli(pauli_from_label("II")) == ErrorClass::IdentityOnCode);
    CHECK(classify_pauli(pauli_from_label("ZZ")) == ErrorClass::IdentityOnCode);

    const char* leakage[] = {"XI", "IX", "YI", "IY", "XZ", "ZX", "YZ", "ZY"};
    for (const char* l : leakage)
        CHECK(classify_pauli(pauli_from_label(l)) == ErrorClass::Leakage);
    CHECK(classify_pauli(pauli_from_label("YY")) == ErrorClass::LogicError);

    // agreement with the brute-force oracle on all 16 two-qubit Paulis
    const Pauli letters[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (Pauli a : letters)
        for (Pauli b : letters) {
            PauliString p;
            p.factors = {a, b};
            CHECK(classify_pauli(p) == classify_by_matrix(p));
        }

    CHECK_THROWS_AS(classify_pauli(pauli_from_label("XXX")), WrongQubitCount);
}

TEST_CASE("leakage weight is invariant under code-space unitaries") {
    // lift the ideal logical Hadamard to the physical pair space: G on the
    // code block, identity on the complement
    const Matrix g = ideal_hl();
    Matrix lifted = identity(4);
    const int code[2] = {1, 2};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) lifted(code[i], code[j]) = g(i, j);

    std::mt19937_64 rng(29);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 20; ++trial) {
        Vector psi(4);
        for (int i = 0; i < 4; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
        psi /= psi.norm();
        const double before = leakage_weight(psi);
        const double after = leakage_weight(Vector(lifted * psi));
        CHECK(after == doctest::Approx(before).epsilon(1e-10));
    }
}
