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

#ifndef ERASER_RANDMEAS_H
#define ERASER_RANDMEAS_H

#include <cstdint>
#include <optional>
#include <random>

#include "eraser/qcore.h"

namespace eraser {

/// Randomized-measurement settings for the slice-2 i qubit.
struct RandMeasPlan {
    std::uint64_t n_unitaries = 500;
    std::uint64_t n_shots_per_unitary = 512;
    std::uint64_t seed = 0;
    std::uint64_t n_bootstrap = 200;

    /// Throws std::invalid_argument when n_unitaries < 2 or n_shots_per_unitary < 2.
    void validate() const;
};

struct PurityEstimate {
    double gamma_hat = 0.0;
    /// -log2(gamma_hat); absent when gamma_hat <= 0.
    std::optional<double> s2_hat;
    /// Bootstrap standard error over the random unitaries.
    double std_err = 0.0;
};

/// Haar-random 2x2 unitary (uniform unit quaternion from four Box-Muller normals).
Mat2 haar_unitary(std::mt19937_64 &rng);

/// Single-qubit cross-correlation 2 * sum_{s,s'} (-2)^{-[s != s']} P(s) P(s') evaluated on
/// exact outcome probabilities.
double purity_cross_correlation(double p0, double p1);

/// The same quantity with the unbiased same-setting product estimators
/// n_s (n_s - 1) / (n (n - 1)) and n_0 n_1 / (n (n - 1)).
double purity_from_counts(std::uint64_t n0, std::uint64_t n1);

/// Estimates Tr(rho^2) of a single-qubit state by randomized measurements. Unitaries run in
/// parallel; each one owns a generator seeded with derive_seed(plan.seed, r).
PurityEstimate estimate_state_purity(const DensityMatrix &rho, const RandMeasPlan &plan);
/// Serial reference of estimate_state_purity. Bitwise identical output.
PurityEstimate estimate_state_purity_serial(const DensityMatrix &rho, const RandMeasPlan &plan);

/// Purity of the i qubit of psi_2 at the given preparation angle.
PurityEstimate estimate_purity(double phi, const RandMeasPlan &plan);

/// (1 + cos^2 phi) / 2.
double theoretical_purity(double phi);

}  // namespace eraser

#endif
