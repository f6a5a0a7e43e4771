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

#include "eraser/circuit.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eraser {

std::string_view to_string(Configuration c) {
    return c == Configuration::closed ? "closed" : "open";
}

Configuration parse_configuration(std::string_view text) {
    if (text == "closed") {
        return Configuration::closed;
    }
    if (text == "open") {
        return Configuration::open;
    }
    throw std::invalid_argument("unknown configuration '" + std::string(text) + "'");
}

void CircuitConfig::validate() const {
    if (!std::isfinite(phi) || !std::isfinite(phi_prime) || !std::isfinite(theta)) {
        throw std::invalid_argument("CircuitConfig: angles must be finite");
    }
    if (noise.has_value()) {
        noise->validate();
    }
}

JointDistribution::JointDistribution(const std::array<double, 4> &p) : p_(p) {
    double total = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0)) {
            throw std::invalid_argument("JointDistribution: probabilities must be nonnegative");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > kExactTol) {
        throw std::invalid_argument("JointDistribution: probabilities must sum to 1");
    }
}

SliceStates build_slices(const CircuitConfig &cfg) {
    cfg.validate();
    if (cfg.noise.has_value()) {
        throw std::invalid_argument("build_slices: noisy configs need noisy_final_dm");
    }
    auto psi0 = TwoQubitState::basis(0, 0);
    auto psi1 = cfg.with_entangler_rotation ? apply_to_qubit(psi0, gate_ry(cfg.phi), Wire::d) : psi0;
    auto psi2 = cfg.with_cnot ? apply_cnot(psi1, Wire::d) : psi1;
    auto psi3 = apply_to_qubit(psi2, gate_hadamard(), Wire::i);
    auto psi4 = apply_to_qubit(psi3, gate_phase(cfg.theta), Wire::i);
    auto psi5 = apply_to_qubit(psi4, gate_ry(cfg.phi_prime), Wire::d);
    auto psi6 = apply_to_qubit(psi5, gate_hadamard(), Wire::i);
    return SliceStates{{psi1, psi2, psi3, psi4, psi5, psi6}};
}

DensityMatrix noisy_final_dm(const CircuitConfig &cfg) {
    cfg.validate();
    NoiseModel noise = cfg.noise.value_or(NoiseModel::noiseless());

    auto rho = DensityMatrix::from_state(TwoQubitState::basis(0, 0));
    if (cfg.with_entangler_rotation) {
        rho = apply_to_qubit(rho, gate_ry(cfg.phi), Wire::d);
    }
    if (cfg.with_cnot) {
        rho = apply_cnot(rho, Wire::d);
        if (noise.cnot_error > 0.0) {
            rho = depolarize_pair(rho, noise.cnot_error);
        }
    }
    rho = apply_to_qubit(rho, gate_hadamard(), Wire::i);
    rho = apply_to_qubit(rho, gate_phase(cfg.theta), Wire::i);
    rho = apply_to_qubit(rho, gate_ry(cfg.phi_prime), Wire::d);
    if (cfg.delay_dt > 0) {
        double t_us = delay_microseconds(cfg.delay_dt);
        rho = apply_channel(rho, delay_damping_channel(noise.d_qubit, t_us), Wire::d);
        rho = apply_channel(rho, delay_dephasing_channel(noise.d_qubit, t_us), Wire::d);
    }
    if (cfg.configuration == Configuration::closed) {
        rho = apply_to_qubit(rho, gate_hadamard(), Wire::i);
    }
    return rho;
}

namespace {

// Clamps the -1e-17 scale negatives a diagonal can pick up, then renormalizes.
JointDistribution from_raw(std::array<double, 4> p) {
    double total = 0.0;
    for (double &v : p) {
        v = std::max(v, 0.0);
        total += v;
    }
    for (double &v : p) {
        v /= total;
    }
    return JointDistribution(p);
}

}  // namespace

JointDistribution exact_joint(const CircuitConfig &cfg) {
    if (cfg.noise.has_value()) {
        auto diag = noisy_final_dm(cfg).diagonal_probabilities();
        return from_raw({diag[0], diag[1], diag[2], diag[3]});
    }
    auto slices = build_slices(cfg);
    const auto &final_state = cfg.configuration == Configuration::closed ? slices.at(6) : slices.at(5);
    return from_raw(final_state.probabilities());
}

}  // namespace eraser
