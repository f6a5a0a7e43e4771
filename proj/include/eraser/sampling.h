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

#ifndef ERASER_SAMPLING_H
#define ERASER_SAMPLING_H

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "eraser/circuit.h"

namespace eraser {

/// Shot counts of (outcome_i, outcome_d) for one circuit point, indexed by joint_index.
struct EnsembleCounts {
    std::array<std::uint64_t, 4> n{};
    std::uint64_t n_shots = 0;
    std::uint64_t seed = 0;
    CircuitConfig cfg;

    std::uint64_t count(int i_bit, int d_bit) const {
        return n[joint_index(i_bit, d_bit)];
    }
};

struct SweepRecord {
    std::vector<double> theta_grid;
    std::vector<EnsembleCounts> counts;
};

/// SplitMix64 finalizer over (seed, index). Grid point k of a sweep seeded with s samples with
/// derive_seed(s, k), so the result does not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
double uniform01(std::mt19937_64 &rng);

/// Theta values k * 2pi / m for k = 0..m, where m = 2pi / resolution must be an integer
/// (within 1e-9). Both endpoints are included.
std::vector<double> theta_grid(double resolution);

/// Draws `n_shots` i.i.d. outcomes from `dist`. Throws std::invalid_argument when n_shots == 0.
std::array<std::uint64_t, 4> sample_counts(const JointDistribution &dist, std::uint64_t n_shots, std::uint64_t seed);

/// Samples the circuit's (possibly noisy) exact distribution.
EnsembleCounts sample_shots(const CircuitConfig &cfg, std::uint64_t n_shots, std::uint64_t seed);

/// Samples every theta grid point in parallel. Bitwise identical to theta_sweep_serial.
SweepRecord theta_sweep(const CircuitConfig &cfg_base, double resolution, std::uint64_t n_shots, std::uint64_t seed);
SweepRecord theta_sweep_serial(
    const CircuitConfig &cfg_base, double resolution, std::uint64_t n_shots, std::uint64_t seed);

/// Relative frequencies n_xy / n_shots.
JointDistribution empirical_joint(const EnsembleCounts &counts);

/// Sums counts over grid points (used for the open configuration, where theta only averages noise).
EnsembleCounts pool_counts(std::span<const EnsembleCounts> counts);

}  // namespace eraser

#endif
