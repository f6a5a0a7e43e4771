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

#include "eraser/noise.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace eraser {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_qubit(const QubitCalibration &q, const std::string &label) {
    if (std::isnan(q.t1_us) || std::isnan(q.t2_us) || q.t1_us <= 0.0 || q.t2_us <= 0.0) {
        throw std::invalid_argument(label + ": T1 and T2 must be positive");
    }
    if (q.t2_us > 2.0 * q.t1_us) {
        throw std::invalid_argument(label + ": T2 exceeds 2*T1");
    }
}

}  // namespace

double delay_microseconds(std::uint64_t delay_dt) {
    return static_cast<double>(delay_dt) * kDtNanoseconds * 1e-3;
}

void NoiseModel::validate() const {
    validate_qubit(i_qubit, "noise model '" + name + "' i qubit");
    validate_qubit(d_qubit, "noise model '" + name + "' d qubit");
    if (!(cnot_error >= 0.0 && cnot_error <= 1.0)) {
        throw std::invalid_argument("noise model '" + name + "': CNOT error must be in [0, 1]");
    }
}

NoiseModel NoiseModel::noiseless() {
    return NoiseModel{"noiseless", {kInf, kInf}, {kInf, kInf}, 0.0};
}

NoiseModel NoiseModel::cnot_only(double cnot_error) {
    return NoiseModel{"cnot-only", {kInf, kInf}, {kInf, kInf}, cnot_error};
}

const std::vector<NoiseModel> &noise_presets() {
    // Pairs are listed (i qubit, d qubit).
    static const std::vector<NoiseModel> presets{
        {"auckland-pair-i", {277.64, 359.54}, {221.56, 202.29}, 3.653e-3},
        {"auckland-pair-ii", {200.88, 203.58}, {250.98, 246.0}, 6.071e-3},
        {"toronto-pair-iii", {136.34, 113.5}, {117.56, 151.47}, 1.17e-2},
    };
    return presets;
}

const NoiseModel &noise_preset(std::string_view name) {
    for (const auto &p : noise_presets()) {
        if (p.name == name) {
            return p;
        }
    }
    throw std::invalid_argument("unknown noise preset '" + std::string(name) + "'");
}

KrausChannel delay_damping_channel(const QubitCalibration &q, double t_us) {
    if (!(t_us >= 0.0)) {
        throw std::invalid_argument("delay duration must be nonnegative");
    }
    double gamma = -std::expm1(-t_us / q.t1_us);
    return KrausChannel::amplitude_damping(gamma);
}

KrausChannel delay_dephasing_channel(const QubitCalibration &q, double t_us) {
    if (!(t_us >= 0.0)) {
        throw std::invalid_argument("delay duration must be nonnegative");
    }
    double rate = std::max(0.0, 1.0 / q.t2_us - 1.0 / (2.0 * q.t1_us));
    return KrausChannel::dephasing(std::exp(-t_us * rate));
}

}  // namespace eraser
