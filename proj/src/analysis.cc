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

#include "eraser/analysis.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eraser {

std::string_view to_string(Perspective p) {
    switch (p) {
        case Perspective::total:
            return "total";
        case Perspective::sub0d:
            return "sub0d";
        case Perspective::sub1d:
            return "sub1d";
        case Perspective::average:
            return "average";
    }
    return "?";
}

Perspective parse_perspective(std::string_view text) {
    for (auto p : {Perspective::total, Perspective::sub0d, Perspective::sub1d, Perspective::average}) {
        if (to_string(p) == text) {
            return p;
        }
    }
    throw std::invalid_argument("unknown perspective '" + std::string(text) + "'");
}

VisibilityEstimator parse_estimator(std::string_view text) {
    if (text == "max-min") {
        return VisibilityEstimator::max_min;
    }
    if (text == "cosine-fit") {
        return VisibilityEstimator::cosine_fit;
    }
    throw std::invalid_argument("unknown visibility estimator '" + std::string(text) + "'");
}

ThetaPattern pattern_from_sweep(const SweepRecord &sweep) {
    if (sweep.counts.empty()) {
        throw std::invalid_argument("pattern_from_sweep: empty sweep");
    }
    if (sweep.counts.size() != sweep.theta_grid.size()) {
        throw std::invalid_argument("pattern_from_sweep: counts and theta grid differ in length");
    }
    ThetaPattern out;
    out.phi = sweep.counts.front().cfg.phi;
    out.phi_prime = sweep.counts.front().cfg.phi_prime;
    out.theta = sweep.theta_grid;
    for (const auto &c : sweep.counts) {
        out.dist.push_back(empirical_joint(c));
        out.weight.push_back(static_cast<double>(c.n_shots));
    }
    return out;
}

ThetaPattern exact_pattern(const CircuitConfig &cfg_base, double resolution) {
    ThetaPattern out;
    out.phi = cfg_base.phi;
    out.phi_prime = cfg_base.phi_prime;
    out.theta = theta_grid(resolution);
    for (double theta : out.theta) {
        CircuitConfig cfg = cfg_base;
        cfg.theta = theta;
        out.dist.push_back(exact_joint(cfg));
        out.weight.push_back(1.0);
    }
    return out;
}

JointDistribution pooled(const ThetaPattern &pattern) {
    if (pattern.empty()) {
        throw std::invalid_argument("pooled: empty pattern");
    }
    std::array<double, 4> acc{};
    double total = 0.0;
    for (std::size_t k = 0; k < pattern.dist.size(); k++) {
        double w = pattern.weight.empty() ? 1.0 : pattern.weight[k];
        for (int j = 0; j < 4; j++) {
            acc[j] += w * pattern.dist[k].values()[j];
        }
        total += w;
    }
    for (double &v : acc) {
        v /= total;
    }
    return JointDistribution(acc);
}

double contrast_total(const JointDistribution &jd) {
    return jd.p_i(0) - jd.p_i(1);
}

std::optional<double> interference_probability(const JointDistribution &jd, Perspective perspective) {
    switch (perspective) {
        case Perspective::total:
            return jd.p_i(0);
        case Perspective::sub0d:
        case Perspective::sub1d: {
            int d_bit = perspective == Perspective::sub0d ? 0 : 1;
            double weight = jd.p_d(d_bit);
            if (weight <= kZeroWeight) {
                return std::nullopt;
            }
            return jd.p(0, d_bit) / weight;
        }
        case Perspective::average:
            break;
    }
    throw std::invalid_argument("interference_probability: the average perspective has no single pattern");
}

namespace {

// Returns the conditional pattern, or nullopt if any grid point is undefined.
std::optional<std::vector<double>> conditional_series(const ThetaPattern &pattern, Perspective perspective) {
    if (pattern.empty()) {
        throw std::invalid_argument("visibility: empty pattern");
    }
    if (perspective == Perspective::average) {
        throw std::invalid_argument("visibility: the average perspective is a weighted combination");
    }
    std::vector<double> series;
    series.reserve(pattern.dist.size());
    for (const auto &jd : pattern.dist) {
        auto p = interference_probability(jd, perspective);
        if (!p.has_value()) {
            return std::nullopt;
        }
        series.push_back(*p);
    }
    return series;
}

struct CosineFit {
    double offset;
    double cos_coeff;
    double sin_coeff;
};

CosineFit fit_cosine(const std::vector<double> &theta, const std::vector<double> &y) {
    Eigen::MatrixXd design(theta.size(), 3);
    Eigen::VectorXd rhs(theta.size());
    for (std::size_t k = 0; k < theta.size(); k++) {
        design(k, 0) = 1.0;
        design(k, 1) = std::cos(theta[k]);
        design(k, 2) = std::sin(theta[k]);
        rhs(k) = y[k];
    }
    Eigen::VectorXd coeff = design.completeOrthogonalDecomposition().solve(rhs);
    return {coeff(0), coeff(1), coeff(2)};
}

}  // namespace

std::optional<double> visibility_from_pattern(
    const ThetaPattern &pattern, Perspective perspective, VisibilityEstimator estimator) {
    auto series = conditional_series(pattern, perspective);
    if (!series.has_value()) {
        return std::nullopt;
    }
    if (estimator == VisibilityEstimator::max_min) {
        auto [lo, hi] = std::minmax_element(series->begin(), series->end());
        if (*hi + *lo <= 0.0) {
            return std::nullopt;
        }
        return (*hi - *lo) / (*hi + *lo);
    }
    auto fit = fit_cosine(pattern.theta, *series);
    if (fit.offset <= 0.0) {
        return std::nullopt;
    }
    return std::hypot(fit.cos_coeff, fit.sin_coeff) / fit.offset;
}

std::optional<double> visibility_from_sweep(
    const SweepRecord &sweep, Perspective perspective, VisibilityEstimator estimator) {
    if (sweep.counts.empty()) {
        throw std::invalid_argument("visibility_from_sweep: empty sweep");
    }
    return visibility_from_pattern(pattern_from_sweep(sweep), perspective, estimator);
}

std::optional<double> signed_contrast_coefficient(const ThetaPattern &pattern, Perspective perspective) {
    auto series = conditional_series(pattern, perspective);
    if (!series.has_value()) {
        return std::nullopt;
    }
    for (double &p : *series) {
        p = 2.0 * p - 1.0;
    }
    return fit_cosine(pattern.theta, *series).cos_coeff;
}

double distinguishability_total(const JointDistribution &open_jd) {
    return 2.0 * (open_jd.p(0, 0) + open_jd.p(1, 1)) - 1.0;
}

namespace {

std::optional<double> subensemble_distinguishability(const JointDistribution &open_jd, int d_bit) {
    double weight = open_jd.p_d(d_bit);
    if (weight <= kZeroWeight) {
        return std::nullopt;
    }
    // The guess is "i = d", so success within x_d means reading i = x.
    return 2.0 * open_jd.p(d_bit, d_bit) / weight - 1.0;
}

void require_same_point(const ThetaPattern &a, const ThetaPattern &b) {
    if (std::abs(a.phi - b.phi) > kExactTol || std::abs(a.phi_prime - b.phi_prime) > kExactTol) {
        throw std::invalid_argument("open and closed data belong to different (phi, phi_prime)");
    }
}

}  // namespace

SubensembleQuantifiers subensemble_quantifiers(
    const ThetaPattern &open, const ThetaPattern &closed, VisibilityEstimator estimator) {
    require_same_point(open, closed);
    auto open_jd = pooled(open);
    SubensembleQuantifiers out;
    out.p0d = open_jd.p_d(0);
    out.p1d = open_jd.p_d(1);
    out.D0d = subensemble_distinguishability(open_jd, 0);
    out.D1d = subensemble_distinguishability(open_jd, 1);
    out.V0d = visibility_from_pattern(closed, Perspective::sub0d, estimator);
    out.V1d = visibility_from_pattern(closed, Perspective::sub1d, estimator);
    return out;
}

double weighted_subensemble_average(std::optional<double> a, std::optional<double> b, double w0, double w1) {
    double out = 0.0;
    for (auto [value, weight] : {std::pair{a, w0}, std::pair{b, w1}}) {
        if (value.has_value()) {
            out += weight * *value;
        } else if (weight > kZeroWeight) {
            throw std::invalid_argument("undefined subensemble quantifier carries nonzero weight");
        }
    }
    return out;
}

AverageQuantifiers average_quantifiers(const SubensembleQuantifiers &sub, double p0d, double p1d) {
    return {
        weighted_subensemble_average(sub.V0d, sub.V1d, p0d, p1d),
        weighted_subensemble_average(sub.D0d, sub.D1d, p0d, p1d),
    };
}

QuantifierSet summarize(const ThetaPattern &open, const ThetaPattern &closed, VisibilityEstimator estimator) {
    auto sub = subensemble_quantifiers(open, closed, estimator);
    auto open_jd = pooled(open);
    auto closed_jd = pooled(closed);

    QuantifierSet q;
    q.V = visibility_from_pattern(closed, Perspective::total, estimator);
    q.D = distinguishability_total(open_jd);
    q.V0d = sub.V0d;
    q.V1d = sub.V1d;
    q.D0d = sub.D0d;
    q.D1d = sub.D1d;
    q.p0d = sub.p0d;
    q.p1d = sub.p1d;
    q.Davg = weighted_subensemble_average(sub.D0d, sub.D1d, sub.p0d, sub.p1d);
    try {
        q.Vavg = weighted_subensemble_average(sub.V0d, sub.V1d, closed_jd.p_d(0), closed_jd.p_d(1));
    } catch (const std::invalid_argument &) {
        q.Vavg = std::nullopt;
    }
    return q;
}

QuantifierSet theoretical_quantifiers(double phi, double phi_prime) {
    double c = std::cos(phi);
    double cp = std::cos(phi_prime);
    double s = std::sin(phi);
    double sp = std::sin(phi_prime);

    QuantifierSet q;
    q.V = std::abs(c);
    q.D = -s * sp;
    q.p0d = (1.0 + c * cp) / 2.0;
    q.p1d = (1.0 - c * cp) / 2.0;
    if (q.p0d > kZeroWeight) {
        q.V0d = std::abs(c + cp) / (1.0 + c * cp);
        q.D0d = -s * sp / (1.0 + c * cp);
    }
    if (q.p1d > kZeroWeight) {
        q.V1d = std::abs(cp - c) / (1.0 - c * cp);
        // Sign follows 2 p(1_i|1_d) - 1 on the slice-5 state, which keeps Davg equal to D.
        q.D1d = -s * sp / (1.0 - c * cp);
    }
    q.Vavg = std::max(std::abs(c), std::abs(cp));
    q.Davg = q.D;
    return q;
}

TrialityTriple triality(const TwoQubitState &state, int k) {
    if (k != 1 && k != 2) {
        throw std::invalid_argument("triality: k must be 1 or 2");
    }
    // Coefficients of a|00> + b|01> + c|10> + d|11>, first ket = qubit 1.
    cd a = state.amp(0, 0);
    cd b = state.amp(0, 1);
    cd c = state.amp(1, 0);
    cd d = state.amp(1, 1);
    TrialityTriple t{};
    t.k = k;
    t.C = 2.0 * std::abs(a * d - b * c);
    if (k == 1) {
        t.Vk = 2.0 * std::abs(a * std::conj(c) + b * std::conj(d));
        t.Pk = std::abs((std::norm(c) + std::norm(d)) - (std::norm(a) + std::norm(b)));
    } else {
        t.Vk = 2.0 * std::abs(a * std::conj(b) + c * std::conj(d));
        t.Pk = std::abs((std::norm(b) + std::norm(d)) - (std::norm(a) + std::norm(c)));
    }
    return t;
}

std::optional<AmplitudeSubensemble> subensemble_from_amplitudes(cd a, cd b, cd c, cd d) {
    double total = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    if (std::abs(total - 1.0) > kExactTol) {
        throw std::invalid_argument("subensemble_from_amplitudes: amplitudes are not normalized");
    }
    double weight = std::norm(a) + std::norm(b);
    if (weight <= kZeroWeight) {
        return std::nullopt;
    }
    AmplitudeSubensemble out{};
    out.contrast_coefficient = 2.0 * (std::conj(a) * b).real() / weight;
    out.V0d = 2.0 * std::abs(a) * std::abs(b) / weight;
    out.D0d = (std::norm(a) - std::norm(b)) / weight;
    return out;
}

}  // namespace eraser
