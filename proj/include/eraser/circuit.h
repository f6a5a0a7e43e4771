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

#ifndef ERASER_CIRCUIT_H
#define ERASER_CIRCUIT_H

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "eraser/noise.h"
#include "eraser/qcore.h"

namespace eraser {

/// Closed: the final Hadamard on the i wire is present and D_i sees interference.
/// Open: that Hadamard is removed and D_i reads the which-way bit directly.
enum class Configuration { closed, open };

std::string_view to_string(Configuration c);
/// Throws std::invalid_argument for anything but "closed" / "open".
Configuration parse_configuration(std::string_view text);

/// One point of the eraser circuit.
///
/// Wire layout, both qubits starting in |0>:
///   d: Ry(phi) -- CNOT control -- Ry(phi_prime) -- [idle delay] -- D_d
///   i: ---------- CNOT target --- H -- P(theta) -- [H if closed] -- D_i
struct CircuitConfig {
    double phi = 0.0;
    double phi_prime = 0.0;
    double theta = 0.0;
    Configuration configuration = Configuration::closed;
    std::uint64_t delay_dt = 0;
    std::optional<NoiseModel> noise;
    /// Ablation switches. Dropping the Ry(phi) preparation or the CNOT leaves the pair unentangled.
    bool with_entangler_rotation = true;
    bool with_cnot = true;

    /// Throws std::invalid_argument on non-finite angles or invalid noise.
    void validate() const;
};

/// The pure state after each of the six circuit slices.
struct SliceStates {
    std::array<TwoQubitState, 6> psi;

    /// 1-based, matching the slice numbering.
    const TwoQubitState &at(int slice) const {
        return psi.at(slice - 1);
    }
};

/// Joint probabilities of (outcome_i, outcome_d), indexed by joint_index.
class JointDistribution {
   public:
    /// Throws std::invalid_argument on negative entries or a total off by more than kExactTol.
    explicit JointDistribution(const std::array<double, 4> &p);

    double p(int i_bit, int d_bit) const {
        return p_[joint_index(i_bit, d_bit)];
    }
    const std::array<double, 4> &values() const {
        return p_;
    }
    double p_i(int i_bit) const {
        return p(i_bit, 0) + p(i_bit, 1);
    }
    double p_d(int d_bit) const {
        return p(0, d_bit) + p(1, d_bit);
    }

   private:
    std::array<double, 4> p_;
};

/// Gate-by-gate pure-state evolution through the six slices. Rejects configs carrying noise.
SliceStates build_slices(const CircuitConfig &cfg);

/// Density matrix just before the two measurements, with the noise model applied.
/// A config without noise is treated as noiseless.
DensityMatrix noisy_final_dm(const CircuitConfig &cfg);

/// Measurement distribution of the circuit. Uses psi_6 (closed) or psi_5 (open) when there is no
/// noise, and the diagonal of noisy_final_dm otherwise.
JointDistribution exact_joint(const CircuitConfig &cfg);

}  // namespace eraser

#endif
