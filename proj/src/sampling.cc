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

#include "eraser/sampling.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eraser {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

std::vector<double> theta_grid(double resolution) {
    constexpr double two_pi = 2 * std::numbers::pi;
    if (!(resolution > 0.0) || !std::isfinite(resolution) || resolution > two_pi) {
        throw std::invalid_argument("theta_grid: resolution must be in (0, 2pi]");
    }
    double steps = two_pi / resolution;
    double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9 * rounded) {
        throw std::invalid_argument("theta_grid: resolution must divide 2pi");
    }
    auto m = static_cast<std::size_t>(rounded);
    std::vector<double> grid(m + 1);
    for (std::size_t k = 0; k <= m; k++) {
        grid[k] = two_pi * static_cast<double>(k) / static_cast<double>(m);
    }
    return grid;
}

std::array<std::uint64_t, 4> sample_counts(const JointDistribution &dist, std::uint64_t n_shots, std::uint64_t seed) {
    if (n_shots == 0) {
        throw std::invalid_argument("sample_shots: n_shots must be positive");
    }
    const auto &p = dist.values();
    std::array<double, 3> cumulative{p[0], p[0] + p[1], p[0] + p[1] + p[2]};
    std::array<std::uint64_t, 4> n{};
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < n_shots; s++) {
        double u = uniform01(rng);
        int k = 0;
        while (k < 3 && u >= cumulative[k]) {
            k++;
        }
        // Round-off can leave u above the last nonzero cell's cumulative bound.
        while (p[k] == 0.0) {
            k--;
        }
        n[k]++;
    }
    return n;
}

EnsembleCounts sample_shots(const CircuitConfig &cfg, std::uint64_t n_shots, std::uint64_t seed) {
    EnsembleCounts out;
    out.n = sample_counts(exact_joint(cfg), n_shots, seed);
    out.n_shots = n_shots;
    out.seed = seed;
    out.cfg = cfg;
    return out;
}

namespace {

EnsembleCounts sample_grid_point(
    const CircuitConfig &cfg_base, double theta, std::uint64_t n_shots, std::uint64_t seed, std::size_t k) {
    CircuitConfig cfg = cfg_base;
    cfg.theta = theta;
    return sample_shots(cfg, n_shots, derive_seed(seed, k));
}

}  // namespace

SweepRecord theta_sweep(const CircuitConfig &cfg_base, double resolution, std::uint64_t n_shots, std::uint64_t seed) {
    SweepRecord rec;
    rec.theta_grid = theta_grid(resolution);
    rec.counts.resize(rec.theta_grid.size());
    auto n = static_cast<std::ptrdiff_t>(rec.theta_grid.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; k++) {
        try {
            rec.counts[k] = sample_grid_point(cfg_base, rec.theta_grid[k], n_shots, seed, k);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rec;
}

SweepRecord theta_sweep_serial(
    const CircuitConfig &cfg_base, double resolution, std::uint64_t n_shots, std::uint64_t seed) {
    SweepRecord rec;
    rec.theta_grid = theta_grid(resolution);
    for (std::size_t k = 0; k < rec.theta_grid.size(); k++) {
        rec.counts.push_back(sample_grid_point(cfg_base, rec.theta_grid[k], n_shots, seed, k));
    }
    return rec;
}

JointDistribution empirical_joint(const EnsembleCounts &counts) {
    if (counts.n_shots == 0) {
        throw std::invalid_argument("empirical_joint: n_shots must be positive");
    }
    std::uint64_t total = counts.n[0] + counts.n[1] + counts.n[2] + counts.n[3];
    if (total != counts.n_shots) {
        throw std::invalid_argument("empirical_joint: counts do not add up to n_shots");
    }
    std::array<double, 4> p{};
    for (int k = 0; k < 4; k++) {
        p[k] = static_cast<double>(counts.n[k]) / static_cast<double>(counts.n_shots);
    }
    return JointDistribution(p);
}

EnsembleCounts pool_counts(std::span<const EnsembleCounts> counts) {
    if (counts.empty()) {
        throw std::invalid_argument("pool_counts: nothing to pool");
    }
    EnsembleCounts out;
    out.cfg = counts.front().cfg;
    out.seed = counts.front().seed;
    for (const auto &c : counts) {
        for (int k = 0; k < 4; k++) {
            out.n[k] += c.n[k];
        }
        out.n_shots += c.n_shots;
    }
    return out;
}

}  // namespace eraser
