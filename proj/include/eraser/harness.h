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

#ifndef ERASER_HARNESS_H
#define ERASER_HARNESS_H

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "eraser/analysis.h"
#include "eraser/noise.h"
#include "eraser/randmeas.h"
#include "eraser/records.h"

namespace eraser {

enum class ConfigurationChoice { closed, open, both };
ConfigurationChoice parse_configuration_choice(std::string_view text);

/// Nominal shot count written for exact-mode rows.
inline constexpr std::uint64_t kExactNominalShots = 1000000;

/// A sweep request. `shots` absent means exact mode.
struct RunSpec {
    std::vector<double> phi_list;
    std::vector<double> phi_prime_list;
    double theta_resolution = 0.04 * std::numbers::pi;
    std::optional<std::uint64_t> shots = 5000;
    ConfigurationChoice configuration = ConfigurationChoice::both;
    std::uint64_t delay_dt = 0;
    std::optional<std::string> noise_preset;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on empty angle lists, a resolution outside (0, pi],
    /// zero shots or an unknown noise preset.
    void validate() const;
    std::optional<NoiseModel> noise() const;
};

/// Raw counts for every (phi_prime, phi, configuration, theta), in that nesting order.
///
/// Grid point j of the (phi_prime, phi) grid uses the seed stream derive_seed(seed, j) for both
/// configurations, and each row records the seed its counts were drawn with. Points run in
/// parallel; run_sweep_serial is the reference.
std::vector<CountsRow> run_sweep(const RunSpec &spec);
std::vector<CountsRow> run_sweep_serial(const RunSpec &spec);

struct AnalyzeOptions {
    std::vector<Perspective> perspectives{
        Perspective::total, Perspective::sub0d, Perspective::sub1d, Perspective::average};
    VisibilityEstimator estimator = VisibilityEstimator::max_min;
    bool with_theory = false;
};

/// Groups rows by (phi, phi_prime) and analyzes each group. Throws std::invalid_argument if a
/// group lacks closed or open rows, or if the rows mix several delays.
std::vector<AnalysisRow> analyze_counts(const std::vector<CountsRow> &rows, const AnalyzeOptions &options);

/// The analysis rows of a QuantifierSet for one (phi, phi_prime).
std::vector<AnalysisRow> quantifier_rows(
    double phi, double phi_prime, const QuantifierSet &q, const std::vector<Perspective> &perspectives);

std::vector<AnalysisRow> theory_rows(
    const std::vector<double> &phi_list,
    const std::vector<double> &phi_prime_list,
    const std::vector<Perspective> &perspectives);

std::vector<PurityRow> renyi_rows(const std::vector<double> &phi_list, const RandMeasPlan &plan);

/// Sub-1d quantifiers versus phi_prime with the Ry(phi) preparation removed, with or without the
/// CNOT. `shots` absent means exact distributions.
struct AblationSpec {
    std::vector<double> phi_prime_list;
    bool with_cnot = true;
    std::optional<NoiseModel> noise;
    std::optional<std::uint64_t> shots;
    double theta_resolution = 0.04 * std::numbers::pi;
    std::uint64_t seed = 0;
};

std::vector<AnalysisRow> cnot_ablation_rows(const AblationSpec &spec);

}  // namespace eraser

#endif
