// Copyright 2026 The Eraser Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eraser/qcore.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

using namespace eraser;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void expect_matrix_near(const Eigen::MatrixXcd &actual, const Eigen::MatrixXcd &expected, double tol) {
    ASSERT_EQ(actual.rows(), expected.rows());
    ASSERT_EQ(actual.cols(), expected.cols());
    EXPECT_LE((actual - expected).cwiseAbs().maxCoeff(), tol) << "actual:\n" << actual << "\nexpected:\n" << expected;
}

Mat2 mat2(cd a, cd b, cd c, cd d) {
    Mat2 m;
    m << a, b, c, d;
    return m;
}

TwoQubitState random_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec4 v;
    for (int k = 0; k < 4; k++) {
        v[k] = cd(g(rng), g(rng));
    }
    return TwoQubitState(v / v.norm());
}

DensityMatrix random_qubit_dm(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Mat2 a;
    for (int k = 0; k < 4; k++) {
        a(k / 2, k % 2) = cd(g(rng), g(rng));
    }
    Mat2 m = a * a.adjoint();
    return DensityMatrix(m / m.trace());
}

}  // namespace

TEST(Gates, phase_examples) {
    expect_matrix_near(gate_phase(0).matrix(), Mat2::Identity(), 1e-15);
    expect_matrix_near(gate_phase(kPi).matrix(), mat2(1, 0, 0, -1), 1e-15);
    expect_matrix_near(gate_phase(kPi / 2).matrix(), mat2(1, 0, 0, cd(0, 1)), 1e-15);
}

TEST(Gates, ry_examples) {
    expect_matrix_near(gate_ry(0).matrix(), Mat2::Identity(), 1e-15);
    expect_matrix_near(gate_ry(kPi).matrix(), mat2(0, -1, 1, 0), 1e-15);
    expect_matrix_near(gate_ry(kPi / 2).matrix(), kInvSqrt2 * mat2(1, -1, 1, 1), 1e-15);
}

TEST(Gates, hadamard_examples) {
    Vec2 zero(1, 0), one(0, 1);
    auto h = gate_hadamard().matrix();
    expect_matrix_near(h * zero, Vec2(kInvSqrt2, kInvSqrt2), 1e-15);
    expect_matrix_near(h * one, Vec2(kInvSqrt2, -kInvSqrt2), 1e-15);
    expect_matrix_near(h * h, Mat2::Identity(), 1e-15);
}

TEST(Gates, non_finite_angles_rejected) {
    EXPECT_THROW(gate_phase(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    EXPECT_THROW(gate_ry(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(Gates, non_unitary_rejected) {
    EXPECT_THROW(SingleQubitGate(mat2(1, 1, 0, 1)), std::invalid_argument);
}

TEST(Gates, algebra_property) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-4 * kPi, 4 * kPi);
    for (int trial = 0; trial < 500; trial++) {
        double a = angle(rng), b = angle(rng);
        expect_matrix_near((gate_phase(a) * gate_phase(b)).matrix(), gate_phase(a + b).matrix(), 1e-12);
        expect_matrix_near((gate_ry(a) * gate_ry(b)).matrix(), gate_ry(a + b).matrix(), 1e-12);
    }
    expect_matrix_near((gate_hadamard() * gate_hadamard()).matrix(), Mat2::Identity(), 1e-12);
}

TEST(TwoQubitState, invariants) {
    EXPECT_THROW(TwoQubitState::from_amplitudes(1, 1, 0, 0), std::invalid_argument);
    EXPECT_THROW(
        TwoQubitState::from_amplitudes(std::numeric_limits<double>::quiet_NaN(), 0, 0, 0), std::invalid_argument);
    EXPECT_NO_THROW(TwoQubitState::from_amplitudes(kInvSqrt2, 0, 0, cd(0, kInvSqrt2)));
}

TEST(ApplyToQubit, examples) {
    auto s00 = TwoQubitState::basis(0, 0);
    auto h_on_i = apply_to_qubit(s00, gate_hadamard(), Wire::i);
    expect_matrix_near(h_on_i.amps(), TwoQubitState::from_amplitudes(kInvSqrt2, 0, kInvSqrt2, 0).amps(), 1e-15);

    for (auto w : {Wire::i, Wire::d}) {
        expect_matrix_near(apply_to_qubit(s00, gate_identity(), w).amps(), s00.amps(), 0);
    }

    double phi = 0.7;
    auto psi1 = apply_to_qubit(s00, gate_ry(phi), Wire::d);
    expect_matrix_near(
        psi1.amps(), TwoQubitState::from_amplitudes(std::cos(phi / 2), std::sin(phi / 2), 0, 0).amps(), 1e-15);
}

TEST(ApplyToQubit, norm_preserved_property) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 1000; trial++) {
        auto s = random_state(rng);
        auto w = trial % 2 ? Wire::i : Wire::d;
        auto out = apply_to_qubit(s, gate_ry(angle(rng)) * gate_phase(angle(rng)) * gate_hadamard(), w);
        EXPECT_NEAR(out.amps().norm(), 1.0, 1e-12);
    }
}

TEST(ApplyCnot, control_d_entangles_into_bell_pair) {
    auto psi1 = apply_to_qubit(TwoQubitState::basis(0, 0), gate_ry(kPi / 2), Wire::d);
    auto bell = apply_cnot(psi1, Wire::d);
    expect_matrix_near(bell.amps(), TwoQubitState::from_amplitudes(kInvSqrt2, 0, 0, kInvSqrt2).amps(), 1e-15);
}

TEST(ApplyCnot, control_i_permutation) {
    // |x, y> -> |x, y ^ x>
    auto out = apply_cnot(TwoQubitState::basis(1, 0), Wire::i);
    expect_matrix_near(out.amps(), TwoQubitState::basis(1, 1).amps(), 0);
    out = apply_cnot(TwoQubitState::basis(0, 1), Wire::i);
    expect_matrix_near(out.amps(), TwoQubitState::basis(0, 1).amps(), 0);
    // The same psi1 stays a product state with the i wire as control.
    auto psi1 = apply_to_qubit(TwoQubitState::basis(0, 0), gate_ry(kPi / 2), Wire::d);
    expect_matrix_near(apply_cnot(psi1, Wire::i).amps(), psi1.amps(), 0);
}

TEST(ApplyCnot, trivial_cases) {
    auto s00 = TwoQubitState::basis(0, 0);
    for (auto w : {Wire::i, Wire::d}) {
        expect_matrix_near(apply_cnot(s00, w).amps(), s00.amps(), 0);
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; trial++) {
        auto s = random_state(rng);
        for (auto w : {Wire::i, Wire::d}) {
            expect_matrix_near(apply_cnot(apply_cnot(s, w), w).amps(), s.amps(), 1e-15);
        }
    }
}

TEST(PartialTrace, examples) {
    auto bell = TwoQubitState::from_amplitudes(kInvSqrt2, 0, 0, kInvSqrt2);
    expect_matrix_near(partial_trace(bell, Wire::i).matrix(), 0.5 * Mat2::Identity(), 1e-15);

    auto rho = partial_trace(TwoQubitState::basis(0, 0), Wire::i);
    expect_matrix_near(rho.matrix(), mat2(1, 0, 0, 0), 0);

    // psi5 reduced onto the d wire.
    double phi = 0.9, phi_prime = -1.3;
    auto s = apply_to_qubit(TwoQubitState::basis(0, 0), gate_ry(phi), Wire::d);
    s = apply_cnot(s, Wire::d);
    s = apply_to_qubit(s, gate_hadamard(), Wire::i);
    s = apply_to_qubit(s, gate_phase(0.4), Wire::i);
    s = apply_to_qubit(s, gate_ry(phi_prime), Wire::d);
    double c = std::cos(phi);
    Mat2 expected = 0.5 * mat2(1 + c * std::cos(phi_prime), c * std::sin(phi_prime), c * std::sin(phi_prime),
                               1 - c * std::cos(phi_prime));
    expect_matrix_near(partial_trace(s, Wire::d).matrix(), expected, 1e-12);
}

TEST(PartialTrace, schmidt_spectra_agree_property) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; trial++) {
        auto s = random_state(rng);
        auto ri = partial_trace(s, Wire::i);
        auto rd = partial_trace(s, Wire::d);
        EXPECT_NEAR(std::abs(ri.matrix().trace() - cd(1)), 0.0, 1e-12);
        EXPECT_LE((ri.eigenvalues() - rd.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(DensityMatrix, invariants) {
    EXPECT_THROW(DensityMatrix(Eigen::MatrixXcd::Identity(3, 3) / 3.0), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(Mat2(mat2(1, 0, 0, 1))), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(Mat2(mat2(0.5, 1, 0, 0.5))), std::invalid_argument);
    // Hermitian, unit trace, but eigenvalues 1.5 and -0.5.
    EXPECT_THROW(DensityMatrix(Mat2(mat2(0.5, 1, 1, 0.5))), std::invalid_argument);
}

TEST(KrausChannel, completeness_enforced) {
    EXPECT_THROW(KrausChannel({Mat2::Identity(), Mat2::Identity()}), std::invalid_argument);
    EXPECT_THROW(KrausChannel::amplitude_damping(1.5), std::invalid_argument);
    EXPECT_THROW(KrausChannel::dephasing(-0.1), std::invalid_argument);
}

TEST(ApplyChannel, examples) {
    auto plus = DensityMatrix(Mat2(0.5 * mat2(1, 1, 1, 1)));
    expect_matrix_near(apply_channel(plus, KrausChannel::identity(), Wire::i).matrix(), plus.matrix(), 0);

    Mat2 z = mat2(1, 0, 0, -1);
    KrausChannel full_dephase({std::sqrt(0.5) * Mat2::Identity(), std::sqrt(0.5) * z});
    expect_matrix_near(apply_channel(plus, full_dephase, Wire::i).matrix(), 0.5 * Mat2::Identity(), 1e-15);
    expect_matrix_near(
        apply_channel(plus, KrausChannel::dephasing(0.0), Wire::i).matrix(), 0.5 * Mat2::Identity(), 1e-15);

    auto excited = DensityMatrix(Mat2(mat2(0, 0, 0, 1)));
    expect_matrix_near(
        apply_channel(excited, KrausChannel::amplitude_damping(1.0), Wire::i).matrix(), mat2(1, 0, 0, 0), 0);
}

TEST(ApplyChannel, acts_on_the_named_wire) {
    auto rho = DensityMatrix::from_state(TwoQubitState::basis(1, 1));
    auto out = apply_channel(rho, KrausChannel::amplitude_damping(1.0), Wire::d);
    expect_matrix_near(out.matrix(), DensityMatrix::from_state(TwoQubitState::basis(1, 0)).matrix(), 0);
    out = apply_channel(rho, KrausChannel::amplitude_damping(1.0), Wire::i);
    expect_matrix_near(out.matrix(), DensityMatrix::from_state(TwoQubitState::basis(0, 1)).matrix(), 0);
}

TEST(ApplyChannel, trace_preserved_property) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; trial++) {
        auto rho = random_qubit_dm(rng);
        auto out = apply_channel(rho, KrausChannel::amplitude_damping(unit(rng)), Wire::d);
        out = apply_channel(out, KrausChannel::dephasing(unit(rng)), Wire::d);
        EXPECT_NEAR(std::abs(out.matrix().trace() - cd(1)), 0.0, 1e-10);
        EXPECT_GE(out.eigenvalues().minCoeff(), -1e-10);

        auto pair = DensityMatrix::from_state(random_state(rng));
        auto pout = apply_channel(pair, KrausChannel::amplitude_damping(unit(rng)), trial % 2 ? Wire::i : Wire::d);
        pout = depolarize_pair(pout, unit(rng));
        EXPECT_NEAR(std::abs(pout.matrix().trace() - cd(1)), 0.0, 1e-10);
        EXPECT_GE(pout.eigenvalues().minCoeff(), -1e-10);
    }
}

TEST(DepolarizePair, full_strength_is_maximally_mixed) {
    auto rho = DensityMatrix::from_state(TwoQubitState::basis(0, 1));
    expect_matrix_near(depolarize_pair(rho, 1.0).matrix(), 0.25 * Mat4::Identity(), 1e-15);
    expect_matrix_near(depolarize_pair(rho, 0.0).matrix(), rho.matrix(), 0);
    EXPECT_THROW(depolarize_pair(rho, -0.01), std::invalid_argument);
}

TEST(Entropy, examples) {
    EXPECT_EQ(entropy_of_entanglement(DensityMatrix(Mat2(mat2(1, 0, 0, 0)))), 0.0);
    EXPECT_NEAR(entropy_of_entanglement(DensityMatrix(Mat2(0.5 * Mat2::Identity()))), 1.0, 1e-12);
    // Reduced psi2 at phi = pi/3 has eigenvalues cos^2(pi/6) = 0.75 and sin^2(pi/6) = 0.25.
    double phi = kPi / 3;
    auto psi2 = TwoQubitState::from_amplitudes(std::cos(phi / 2), 0, 0, std::sin(phi / 2));
    double expected = -0.75 * std::log2(0.75) - 0.25 * std::log2(0.25);
    EXPECT_NEAR(entropy_of_entanglement(partial_trace(psi2, Wire::i)), expected, 1e-12);
    EXPECT_NEAR(expected, 0.8113, 1e-4);
}

TEST(Purity, examples) {
    auto reduced = [](double phi) {
        return partial_trace(TwoQubitState::from_amplitudes(std::cos(phi / 2), 0, 0, std::sin(phi / 2)), Wire::i);
    };
    EXPECT_NEAR(purity(reduced(0)), 1.0, 1e-15);
    EXPECT_NEAR(purity(reduced(kPi / 2)), 0.5, 1e-15);
    EXPECT_NEAR(purity(reduced(kPi / 4)), 0.75, 1e-15);
}

TEST(Entropy, decreases_as_purity_increases) {
    double last_entropy = 2.0;
    double last_purity = 0.0;
    for (int k = 0; k <= 20; k++) {
        double phi = kPi / 2 * (1.0 - k / 20.0);
        auto rho = partial_trace(TwoQubitState::from_amplitudes(std::cos(phi / 2), 0, 0, std::sin(phi / 2)), Wire::i);
        EXPECT_LE(entropy_of_entanglement(rho), last_entropy + 1e-15);
        EXPECT_GE(purity(rho), last_purity - 1e-15);
        last_entropy = entropy_of_entanglement(rho);
        last_purity = purity(rho);
    }
}
