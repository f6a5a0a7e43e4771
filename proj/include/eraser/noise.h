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

#ifndef ERASER_NOISE_H
#define ERASER_NOISE_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eraser/qcore.h"

namespace eraser {

/// Duration of one delay-gate sampling step, in nanoseconds.
inline constexpr double kDtNanoseconds = 0.22;

double delay_microseconds(std::uint64_t delay_dt);

/// Relaxation times of one physical qubit, in microseconds. Infinity means no decay.
struct QubitCalibration {
    double t1_us;
    double t2_us;
};

/// Hardware noise for the eraser circuit.
///
/// The CNOT is followed by a two-qubit depolarizing step of strength `cnot_error`. Idling on the
/// d wire for t_delay applies amplitude damping (1 - exp(-t/T1)) and then pure dephasing at rate
/// max(0, 1/T2 - 1/(2 T1)), so off-diagonals decay as exp(-t/T2) overall.
struct NoiseModel {
    std::string name;
    QubitCalibration i_qubit;
    QubitCalibration d_qubit;
    double cnot_error = 0.0;

    /// Throws std::invalid_argument on negative or NaN rates, or T2 > 2 T1 on either qubit.
    void validate() const;

    static NoiseModel noiseless();
    /// CNOT depolarizing only; no relaxation.
    static NoiseModel cnot_only(double cnot_error);
};

/// Presets built from the device calibration table. Names: "auckland-pair-i",
/// "auckland-pair-ii", "toronto-pair-iii".
const std::vector<NoiseModel> &noise_presets();
/// Throws std::invalid_argument for an unknown name.
const NoiseModel &noise_preset(std::string_view name);

/// Amplitude damping for the idle period.
KrausChannel delay_damping_channel(const QubitCalibration &q, double t_us);
/// Pure dephasing for the idle period (the part of T2 not explained by T1).
KrausChannel delay_dephasing_channel(const QubitCalibration &q, double t_us);

}  // namespace eraser

#endif
