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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eraser {

namespace {

bool all_finite(const Eigen::MatrixXcd &m) {
    for (Eigen::Index k = 0; k < m.size(); k++) {
        if (!std::isfinite(m(k).real()) || !std::isfinite(m(k).imag())) {
            return false;
        }
    }
    return true;
}

void require_finite_angle(double angle, const char *name) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd &m) {
    return 0.5 * (m + m.adjoint());
}

// Output of an internal evolution step: hermitize away round-off, then validate as usual.
DensityMatrix evolved(const Eigen::MatrixXcd &m) {
    return DensityMatrix(hermitian_part(m));
}

}  // namespace

TwoQubitState::TwoQubitState(const Vec4 &amps) : amps_(amps) {
    if (!all_finite(amps_)) {
        throw std::invalid_argument("TwoQubitState: amplitudes must be finite");
    }
    double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kExactTol) {
        throw std::invalid_argument("TwoQubitState: squared norm " + std::to_string(norm2) + " is not 1");
    }
}

TwoQubitState TwoQubitState::from_amplitudes(cd a, cd b, cd c, cd d) {
    Vec4 v;
    v << a, b, c, d;
    return TwoQubitState(v);
}

TwoQubitState TwoQubitState::basis(int i_bit, int d_bit) {
    Vec4 v = Vec4::Zero();
    v[joint_index(i_bit, d_bit)] = 1.0;
    return TwoQubitState(v);
}

std::array<double, 4> TwoQubitState::probabilities() const {
    std::array<double, 4> p{};
    for (int k = 0; k < 4; k++) {
        p[k] = std::norm(amps_[k]);
    }
    return p;
}

Mat4 TwoQubitState::projector() const {
    return amps_ * amps_.adjoint();
}

SingleQubitGate::SingleQubitGate(const Mat2 &u) : u_(u) {
    if (!all_finite(u_)) {
        throw std::invalid_argument("SingleQubitGate: entries must be finite");
    }
    if (((u_ * u_.adjoint()) - Mat2::Identity()).cwiseAbs().maxCoeff() > kExactTol) {
        throw std::invalid_argument("SingleQubitGate: matrix is not unitary");
    }
}

SingleQubitGate SingleQubitGate::operator*(const SingleQubitGate &rhs) const {
    return SingleQubitGate(u_ * rhs.u_);
}

SingleQubitGate gate_identity() {
    return SingleQubitGate(Mat2::Identity());
}

SingleQubitGate gate_phase(double theta) {
    require_finite_angle(theta, "gate_phase: theta");
    Mat2 u;
    u << 1.0, 0.0, 0.0, std::polar(1.0, theta);
    return SingleQubitGate(u);
}

SingleQubitGate gate_ry(double phi) {
    require_finite_angle(phi, "gate_ry: phi");
    double c = std::cos(phi / 2);
    double s = std::sin(phi / 2);
    Mat2 u;
    u << c, -s, s, c;
    return SingleQubitGate(u);
}

SingleQubitGate gate_hadamard() {
    double h = 1.0 / std::sqrt(2.0);
    Mat2 u;
    u << h, h, h, -h;
    return SingleQubitGate(u);
}

DensityMatrix::DensityMatrix(const Eigen::MatrixXcd &m) : m_(m) {
    if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
        throw std::invalid_argument("DensityMatrix: dimension must be 2x2 or 4x4");
    }
    if (!all_finite(m_)) {
        throw std::invalid_argument("DensityMatrix: entries must be finite");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kExactTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - cd(1.0)) > kExactTol) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    if (eigenvalues().minCoeff() < -kChannelTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::from_state(const TwoQubitState &state) {
    return DensityMatrix(state.projector());
}

DensityMatrix DensityMatrix::from_qubit_state(const Vec2 &psi) {
    if (std::abs(psi.squaredNorm() - 1.0) > kExactTol) {
        throw std::invalid_argument("from_qubit_state: state is not normalized");
    }
    return DensityMatrix(psi * psi.adjoint());
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_part(m_), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

std::vector<double> DensityMatrix::diagonal_probabilities() const {
    std::vector<double> p(m_.rows());
    for (Eigen::Index k = 0; k < m_.rows(); k++) {
        p[k] = m_(k, k).real();
    }
    return p;
}

KrausChannel::KrausChannel(std::vector<Mat2> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw std::invalid_argument("KrausChannel: needs at least one operator");
    }
    Mat2 sum = Mat2::Zero();
    for (const auto &k : ops_) {
        if (!all_finite(k)) {
            throw std::invalid_argument("KrausChannel: operator entries must be finite");
        }
        sum += k.adjoint() * k;
    }
    if ((sum - Mat2::Identity()).cwiseAbs().maxCoeff() > kChannelTol) {
        throw std::invalid_argument("KrausChannel: operators violate completeness");
    }
}

KrausChannel KrausChannel::identity() {
    return KrausChannel({Mat2::Identity()});
}

KrausChannel KrausChannel::amplitude_damping(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("amplitude_damping: gamma must be in [0, 1]");
    }
    Mat2 k0, k1;
    k0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
    k1 << 0.0, std::sqrt(gamma), 0.0, 0.0;
    return KrausChannel({k0, k1});
}

KrausChannel KrausChannel::dephasing(double coherence_factor) {
    if (!(coherence_factor >= 0.0 && coherence_factor <= 1.0)) {
        throw std::invalid_argument("dephasing: coherence factor must be in [0, 1]");
    }
    Mat2 z;
    z << 1.0, 0.0, 0.0, -1.0;
    Mat2 k0 = std::sqrt((1.0 + coherence_factor) / 2) * Mat2::Identity();
    Mat2 k1 = std::sqrt((1.0 - coherence_factor) / 2) * z;
    return KrausChannel({k0, k1});
}

Mat4 embed(const Mat2 &op, Wire which) {
    Mat4 out = Mat4::Zero();
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            for (int k = 0; k < 2; k++) {
                if (which == Wire::i) {
                    out(joint_index(r, k), joint_index(c, k)) = op(r, c);
                } else {
                    out(joint_index(k, r), joint_index(k, c)) = op(r, c);
                }
            }
        }
    }
    return out;
}

namespace {

Mat4 cnot_matrix(Wire control) {
    Mat4 p = Mat4::Zero();
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            int out = control == Wire::i ? joint_index(x, y ^ x) : joint_index(x ^ y, y);
            p(out, joint_index(x, y)) = 1.0;
        }
    }
    return p;
}

}  // namespace

TwoQubitState apply_to_qubit(const TwoQubitState &state, const SingleQubitGate &g, Wire which) {
    return TwoQubitState(embed(g.matrix(), which) * state.amps());
}

DensityMatrix apply_to_qubit(const DensityMatrix &rho, const SingleQubitGate &g, Wire which) {
    if (rho.dim() == 2) {
        return evolved(g.matrix() * rho.matrix() * g.matrix().adjoint());
    }
    Mat4 u = embed(g.matrix(), which);
    return evolved(u * rho.matrix() * u.adjoint());
}

TwoQubitState apply_cnot(const TwoQubitState &state, Wire control) {
    return TwoQubitState(cnot_matrix(control) * state.amps());
}

DensityMatrix apply_cnot(const DensityMatrix &rho, Wire control) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("apply_cnot: needs a two-qubit density matrix");
    }
    Mat4 p = cnot_matrix(control);
    return evolved(p * rho.matrix() * p.transpose());
}

DensityMatrix partial_trace(const DensityMatrix &rho, Wire keep) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("partial_trace: needs a two-qubit density matrix");
    }
    Mat2 out = Mat2::Zero();
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            for (int k = 0; k < 2; k++) {
                out(r, c) += keep == Wire::i ? rho(joint_index(r, k), joint_index(c, k))
                                             : rho(joint_index(k, r), joint_index(k, c));
            }
        }
    }
    return evolved(out);
}

DensityMatrix partial_trace(const TwoQubitState &state, Wire keep) {
    return partial_trace(DensityMatrix::from_state(state), keep);
}

DensityMatrix apply_channel(const DensityMatrix &rho, const KrausChannel &ch, Wire which) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
    for (const auto &k : ch.ops()) {
        if (rho.dim() == 2) {
            out += k * rho.matrix() * k.adjoint();
        } else {
            Mat4 big = embed(k, which);
            out += big * rho.matrix() * big.adjoint();
        }
    }
    return evolved(out);
}

DensityMatrix depolarize_pair(const DensityMatrix &rho, double strength) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("depolarize_pair: needs a two-qubit density matrix");
    }
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw std::invalid_argument("depolarize_pair: strength must be in [0, 1]");
    }
    return evolved((1.0 - strength) * rho.matrix() + (strength / 4.0) * Eigen::MatrixXcd::Identity(4, 4));
}

double entropy_of_entanglement(const DensityMatrix &rho) {
    double s = 0.0;
    for (double lambda : rho.eigenvalues()) {
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

double purity(const DensityMatrix &rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace eraser
