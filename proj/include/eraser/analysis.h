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

#ifndef ERASER_ANALYSIS_H
#define ERASER_ANALYSIS_H

#include <optional>
#include <string_view>
#include <vector>

#include "eraser/circuit.h"
#include "eraser/sampling.h"

namespace eraser {

/// A subensemble whose conditioning probability is at or below this is treated as empty.
inline constexpr double kZeroWeight = 1e-14;

enum class Perspective { total, sub0d, sub1d, average };

std::string_view to_string(Perspective p);
Perspective parse_perspective(std::string_view text);

enum class VisibilityEstimator {
    /// (max - min) / (max + min) over the theta grid.
    max_min,
    /// Least-squares fit of A + B cos(theta) + C sin(theta); visibility sqrt(B^2 + C^2) / A.
    cosine_fit,
};

VisibilityEstimator parse_estimator(std::string_view text);

/// Measurement distributions along a theta grid for fixed (phi, phi_prime).
///
/// `weight` holds the number of shots behind each point (1 for exact distributions) and is used
/// when pooling.
struct ThetaPattern {
    double phi = 0.0;
    double phi_prime = 0.0;
    std::vector<double> theta;
    std::vector<JointDistribution> dist;
    std::vector<double> weight;

    bool empty() const {
        return dist.empty();
    }
};

ThetaPattern pattern_from_sweep(const SweepRecord &sweep);
/// Noise-free or noisy exact distributions on the theta grid of `resolution`.
ThetaPattern exact_pattern(const CircuitConfig &cfg_base, double resolution);
/// Weighted mean distribution over the grid.
JointDistribution pooled(const ThetaPattern &pattern);

/// p(0_i) - p(1_i).
double contrast_total(const JointDistribution &jd);

/// p(0_i) for the total perspective, p(0_i | x_d) for a subensemble. Undefined for a subensemble
/// when p(x_d) vanishes.
std::optional<double> interference_probability(const JointDistribution &jd, Perspective perspective);

/// Visibility of the theta pattern from one perspective (total, sub0d or sub1d).
///
/// A subensemble visibility is undefined when its conditioning outcome is empty at any grid
/// point; nothing is interpolated. Throws std::invalid_argument on an empty pattern or on the
/// average perspective.
std::optional<double> visibility_from_pattern(
    const ThetaPattern &pattern,
    Perspective perspective,
    VisibilityEstimator estimator = VisibilityEstimator::max_min);
std::optional<double> visibility_from_sweep(
    const SweepRecord &sweep,
    Perspective perspective,
    VisibilityEstimator estimator = VisibilityEstimator::max_min);

/// Signed coefficient of cos(theta) in the fitted contrast 2 p - 1. Unlike the visibility this
/// keeps the sign, e.g. (cos phi + cos phi') / (1 + cos phi cos phi') for sub0d.
std::optional<double> signed_contrast_coefficient(const ThetaPattern &pattern, Perspective perspective);

/// 2 (p(0_i,0_d) + p(1_i,1_d)) - 1 of an open-configuration distribution. Keeps its sign.
double distinguishability_total(const JointDistribution &open_jd);

struct SubensembleQuantifiers {
    std::optional<double> V0d;
    std::optional<double> D0d;
    std::optional<double> V1d;
    std::optional<double> D1d;
    /// d-outcome probabilities of the open data.
    double p0d = 0.0;
    double p1d = 0.0;
};

/// Distinguishabilities from the pooled open pattern, visibilities from the closed pattern.
/// Throws std::invalid_argument when the two patterns belong to different (phi, phi_prime).
SubensembleQuantifiers subensemble_quantifiers(
    const ThetaPattern &open,
    const ThetaPattern &closed,
    VisibilityEstimator estimator = VisibilityEstimator::max_min);

/// w0 * a + w1 * b, where an undefined term is allowed only with zero weight (it then
/// contributes nothing). Throws std::invalid_argument otherwise.
double weighted_subensemble_average(std::optional<double> a, std::optional<double> b, double w0, double w1);

struct AverageQuantifiers {
    double Vavg;
    double Davg;
};

AverageQuantifiers average_quantifiers(const SubensembleQuantifiers &sub, double p0d, double p1d);

/// Every quantifier from the three perspectives.
struct QuantifierSet {
    std::optional<double> V;
    double D = 0.0;
    std::optional<double> V0d;
    std::optional<double> V1d;
    std::optional<double> D0d;
    std::optional<double> D1d;
    std::optional<double> Vavg;
    double Davg = 0.0;
    double p0d = 0.0;
    double p1d = 0.0;
};

/// Full analysis of one (phi, phi_prime) point from its open and closed patterns.
///
/// Vavg is weighted by the d marginal of the closed data and Davg by that of the open data, so
/// Davg equals D identically. Vavg is reported undefined when a subensemble visibility is
/// missing while its weight is not zero.
QuantifierSet summarize(
    const ThetaPattern &open,
    const ThetaPattern &closed,
    VisibilityEstimator estimator = VisibilityEstimator::max_min);

/// Closed-form quantifiers of the noiseless circuit.
QuantifierSet theoretical_quantifiers(double phi, double phi_prime);

struct TrialityTriple {
    double C;
    double Vk;
    double Pk;
    int k;
};

/// Concurrence 2|ad - bc|, coherence and predictability of qubit k (1 = i, 2 = d).
TrialityTriple triality(const TwoQubitState &state, int k);

struct AmplitudeSubensemble {
    /// (a* b + a b*) / (|a|^2 + |b|^2), the theta-independent part of the 0_d contrast.
    double contrast_coefficient;
    double V0d;
    double D0d;
};

/// 0_d subensemble quantifiers of a generic slice-5 state. `a` and `b` are the amplitudes of
/// |0_i 0_d> and |1_i 0_d>; `c` and `d` those of |0_i 1_d> and |1_i 1_d>. Undefined when
/// |a|^2 + |b|^2 vanishes.
std::optional<AmplitudeSubensemble> subensemble_from_amplitudes(cd a, cd b, cd c, cd d);

}  // namespace eraser

#endif
