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

#ifndef ERASER_QCORE_H
#define ERASER_QCORE_H

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace eraser {

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

/// Tolerance for exact unitary algebra (norms, unitarity, hermiticity).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for channel completeness and eigenvalue positivity.
inline constexpr double kChannelTol = 1e-10;

/// The two wires of the eraser circuit. `i` is the interference qubit, `d` the delayed-choice qubit.
///
/// Joint basis index convention used everywhere: |i d> -> 2 * i + d, so the amplitude order is
/// |00>, |01>, |10>, |11> with the i qubit as the leftmost ket.
enum class Wire { i, d };

inline constexpr int joint_index(int i_bit, int d_bit) {
    return 2 * i_bit + d_bit;
}

/// Pure state of the (i, d) qubit pair.
class TwoQubitState {
   public:
    /// Throws std::invalid_argument on non-finite amplitudes or a norm off by more than kExactTol.
    explicit TwoQubitState(const Vec4 &amps);
    static TwoQubitState from_amplitudes(cd a, cd b, cd c, cd d);
    /// |i_bit d_bit>.
    static TwoQubitState basis(int i_bit, int d_bit);

    const Vec4 &amps() const {
        return amps_;
    }
    cd amp(int i_bit, int d_bit) const {
        return amps_[joint_index(i_bit, d_bit)];
    }
    /// Born probabilities in the computational basis, indexed by joint_index.
    std::array<double, 4> probabilities() const;
    Mat4 projector() const;

   private:
    Vec4 amps_;
};

class SingleQubitGate {
   public:
    /// Throws std::invalid_argument unless u u^dagger = 1 within kExactTol.
    explicit SingleQubitGate(const Mat2 &u);
    const Mat2 &matrix() const {
        return u_;
    }
    SingleQubitGate operator*(const SingleQubitGate &rhs) const;

   private:
    Mat2 u_;
};

SingleQubitGate gate_identity();
/// diag(1, e^{i theta}).
SingleQubitGate gate_phase(double theta);
/// exp(-i phi Y / 2).
SingleQubitGate gate_ry(double phi);
SingleQubitGate gate_hadamard();

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2 (one qubit) or 4 (the pair).
class DensityMatrix {
   public:
    /// Validates the invariants; throws std::invalid_argument when any fails.
    explicit DensityMatrix(const Eigen::MatrixXcd &m);
    static DensityMatrix from_state(const TwoQubitState &state);
    static DensityMatrix from_qubit_state(const Vec2 &psi);

    int dim() const {
        return static_cast<int>(m_.rows());
    }
    const Eigen::MatrixXcd &matrix() const {
        return m_;
    }
    cd operator()(int r, int c) const {
        return m_(r, c);
    }
    /// Ascending eigenvalues.
    Eigen::VectorXd eigenvalues() const;
    /// Diagonal, i.e. computational-basis Born probabilities.
    std::vector<double> diagonal_probabilities() const;

   private:
    Eigen::MatrixXcd m_;
};

/// Single-qubit channel rho -> sum_j K_j rho K_j^dagger.
class KrausChannel {
   public:
    /// Throws std::invalid_argument unless sum_j K_j^dagger K_j = 1 within kChannelTol.
    explicit KrausChannel(std::vector<Mat2> ops);
    const std::vector<Mat2> &ops() const {
        return ops_;
    }

    static KrausChannel identity();
    /// Decay |1> -> |0> with probability `gamma`.
    static KrausChannel amplitude_damping(double gamma);
    /// Scales the off-diagonal elements by `coherence_factor` in [0, 1].
    static KrausChannel dephasing(double coherence_factor);

   private:
    std::vector<Mat2> ops_;
};

/// Applies `g` to one wire: (g x 1)|state> for Wire::i, (1 x g)|state> for Wire::d.
TwoQubitState apply_to_qubit(const TwoQubitState &state, const SingleQubitGate &g, Wire which);
DensityMatrix apply_to_qubit(const DensityMatrix &rho, const SingleQubitGate &g, Wire which);

/// Controlled-NOT with the given control wire; the other wire is the target.
TwoQubitState apply_cnot(const TwoQubitState &state, Wire control);
DensityMatrix apply_cnot(const DensityMatrix &rho, Wire control);

/// Reduced state of the `keep` wire.
DensityMatrix partial_trace(const TwoQubitState &state, Wire keep);
DensityMatrix partial_trace(const DensityMatrix &rho, Wire keep);

/// Applies a single-qubit channel. For a 2x2 input `which` is ignored; for a 4x4 input the
/// channel acts on the named wire.
DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &ch, Wire which);

/// rho -> (1 - strength) rho + strength * 1/4 on the 4x4 pair state.
DensityMatrix depolarize_pair(const DensityMatrix &rho, double strength);

/// Von Neumann entropy in bits. Eigenvalues are clipped to [0, 1] first.
double entropy_of_entanglement(const DensityMatrix &rho);
/// Tr(rho^2).
double purity(const DensityMatrix &rho);

/// Embeds a single-qubit operator on one wire of the pair.
Mat4 embed(const Mat2 &op, Wire which);

}  // namespace eraser

#endif
