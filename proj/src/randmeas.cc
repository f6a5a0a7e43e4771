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

#include "eraser/randmeas.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "eraser/circuit.h"
#include "eraser/sampling.h"

namespace eraser {

void RandMeasPlan::validate() const {
    if (n_unitaries < 2) {
        throw std::invalid_argument("RandMeasPlan: need at least 2 unitaries");
    }
    if (n_shots_per_unitary < 2) {
        throw std::invalid_argument("RandMeasPlan: the unbiased product estimator needs at least 2 shots per unitary");
    }
    if (n_bootstrap < 1) {
        throw std::invalid_argument("RandMeasPlan: need at least 1 bootstrap resample");
    }
}

namespace {

double standard_normal(std::mt19937_64 &rng) {
    double u1 = 1.0 - uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

// Bootstrap stream index, kept apart from the per-unitary indices.
constexpr std::uint64_t kBootstrapStream = 0xB005'7A9DULL << 32;

double single_setting_purity(const DensityMatrix &rho, std::uint64_t shots, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Mat2 u = haar_unitary(rng);
    Mat2 rotated = u * rho.matrix() * u.adjoint();
    double p0 = std::clamp(rotated(0, 0).real(), 0.0, 1.0);
    std::uint64_t n0 = 0;
    for (std::uint64_t s = 0; s < shots; s++) {
        if (uniform01(rng) < p0) {
            n0++;
        }
    }
    return purity_from_counts(n0, shots - n0);
}

PurityEstimate aggregate(const std::vector<double> &per_unitary, const RandMeasPlan &plan) {
    auto r = per_unitary.size();
    double sum = 0.0;
    for (double g : per_unitary) {
        sum += g;
    }
    PurityEstimate out;
    out.gamma_hat = sum / static_cast<double>(r);
    if (out.gamma_hat > 0.0) {
        out.s2_hat = -std::log2(out.gamma_hat);
    }

    std::mt19937_64 rng(derive_seed(plan.seed, kBootstrapStream));
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t b = 0; b < plan.n_bootstrap; b++) {
        double resample = 0.0;
        for (std::size_t j = 0; j < r; j++) {
            resample += per_unitary[rng() % r];
        }
        resample /= static_cast<double>(r);
        double delta = resample - mean;
        mean += delta / static_cast<double>(b + 1);
        m2 += delta * (resample - mean);
    }
    out.std_err = plan.n_bootstrap > 1 ? std::sqrt(m2 / static_cast<double>(plan.n_bootstrap - 1)) : 0.0;
    return out;
}

void require_qubit(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("randomized measurement: needs a single-qubit state");
    }
}

}  // namespace

Mat2 haar_unitary(std::mt19937_64 &rng) {
    double q[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double &x : q) {
            x = standard_normal(rng);
            norm += x * x;
        }
    } while (norm < 1e-300);
    norm = std::sqrt(norm);
    cd alpha(q[0] / norm, q[1] / norm);
    cd beta(q[2] / norm, q[3] / norm);
    Mat2 u;
    u << alpha, -std::conj(beta), beta, std::conj(alpha);
    return u;
}

double purity_cross_correlation(double p0, double p1) {
    return 2.0 * (p0 * p0 + p1 * p1 - p0 * p1);
}

double purity_from_counts(std::uint64_t n0, std::uint64_t n1) {
    auto n = static_cast<double>(n0 + n1);
    if (n < 2) {
        throw std::invalid_argument("purity_from_counts: need at least 2 shots");
    }
    auto a = static_cast<double>(n0);
    auto b = static_cast<double>(n1);
    double pairs = n * (n - 1.0);
    return 2.0 * ((a * (a - 1.0) + b * (b - 1.0)) / pairs - a * b / pairs);
}

PurityEstimate estimate_state_purity(const DensityMatrix &rho, const RandMeasPlan &plan) {
    plan.validate();
    require_qubit(rho);
    std::vector<double> per_unitary(plan.n_unitaries);
    auto n = static_cast<std::ptrdiff_t>(plan.n_unitaries);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < n; r++) {
        per_unitary[r] = single_setting_purity(rho, plan.n_shots_per_unitary, derive_seed(plan.seed, r));
    }
    return aggregate(per_unitary, plan);
}

PurityEstimate estimate_state_purity_serial(const DensityMatrix &rho, const RandMeasPlan &plan) {
    plan.validate();
    require_qubit(rho);
    std::vector<double> per_unitary;
    per_unitary.reserve(plan.n_unitaries);
    for (std::uint64_t r = 0; r < plan.n_unitaries; r++) {
        per_unitary.push_back(single_setting_purity(rho, plan.n_shots_per_unitary, derive_seed(plan.seed, r)));
    }
    return aggregate(per_unitary, plan);
}

PurityEstimate estimate_purity(double phi, const RandMeasPlan &plan) {
    CircuitConfig cfg;
    cfg.phi = phi;
    auto psi2 = build_slices(cfg).at(2);
    return estimate_state_purity(partial_trace(psi2, Wire::i), plan);
}

double theoretical_purity(double phi) {
    double c = std::cos(phi);
    return (1.0 + c * c) / 2.0;
}

}  // namespace eraser
