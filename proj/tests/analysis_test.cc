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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"

using namespace eraser;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRes = 0.04 * kPi;

CircuitConfig make(double phi, double phi_prime, Configuration conf) {
    CircuitConfig cfg;
    cfg.phi = phi;
    cfg.phi_prime = phi_prime;
    cfg.configuration = conf;
    return cfg;
}

ThetaPattern exact_closed(double phi, double phi_prime) {
    return exact_pattern(make(phi, phi_prime, Configuration::closed), kRes);
}

ThetaPattern exact_open(double phi, double phi_prime) {
    return exact_pattern(make(phi, phi_prime, Configuration::open), kRes);
}

QuantifierSet exact_summary(double phi, double phi_prime) {
    return summarize(exact_open(phi, phi_prime), exact_closed(phi, phi_prime));
}

TwoQubitState random_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec4 v;
    for (int k = 0; k < 4; k++) {
        v[k] = cd(g(rng), g(rng));
    }
    return TwoQubitState(v / v.norm());
}

}  // namespace

TEST(ContrastTotal, examples) {
    EXPECT_NEAR(contrast_total(exact_joint(make(0, 0.3, Configuration::closed))), 1.0, 1e-12);
    for (double theta : {0.0, 1.0, 2.5}) {
        auto cfg = make(kPi / 2, 0.3, Configuration::closed);
        cfg.theta = theta;
        EXPECT_NEAR(contrast_total(exact_joint(cfg)), 0.0, 1e-12);
    }
    EXPECT_EQ(contrast_total(JointDistribution({0.25, 0.25, 0.25, 0.25})), 0.0);
}

TEST(Visibility, total_example) {
    for (double phi_prime : {0.0, 0.3, kPi / 2, 2.0}) {
        EXPECT_NEAR(*visibility_from_pattern(exact_closed(kPi / 3, phi_prime), Perspective::total), 0.5, 1e-12);
    }
}

TEST(Visibility, eraser_restores_unity) {
    EXPECT_NEAR(*visibility_from_pattern(exact_closed(kPi / 2, 0), Perspective::sub0d), 1.0, 1e-12);
}

TEST(Visibility, sub0d_vanishes_at_quarter_turns) {
    auto q = exact_summary(kPi / 2, kPi / 2);
    EXPECT_NEAR(*q.V0d, 0.0, 1e-12);
    EXPECT_NEAR(*q.D0d, -1.0, 1e-12);
}

TEST(Visibility, matches_brute_force_scan) {
    for (double phi : {0.4, 1.3, 2.2}) {
        for (double phi_prime : {0.2, 1.0, 2.9}) {
            auto total = oracle::scanned_visibility([&](double t) { return oracle::p0_i_closed(phi, t); });
            auto v0 = oracle::scanned_visibility([&](double t) { return oracle::p0i_given_0d(phi, phi_prime, t); });
            auto v1 = oracle::scanned_visibility([&](double t) { return oracle::p0i_given_1d(phi, phi_prime, t); });
            auto pattern = exact_closed(phi, phi_prime);
            EXPECT_NEAR(*visibility_from_pattern(pattern, Perspective::total), total, 1e-9);
            EXPECT_NEAR(*visibility_from_pattern(pattern, Perspective::sub0d), v0, 1e-9);
            EXPECT_NEAR(*visibility_from_pattern(pattern, Perspective::sub1d), v1, 1e-9);
        }
    }
}

TEST(Visibility, cosine_fit_agrees_on_exact_patterns) {
    for (double phi : {0.0, 0.7, kPi / 3, 2.0}) {
        auto pattern = exact_closed(phi, 0.6);
        for (auto p : {Perspective::total, Perspective::sub0d, Perspective::sub1d}) {
            auto mm = visibility_from_pattern(pattern, p, VisibilityEstimator::max_min);
            auto fit = visibility_from_pattern(pattern, p, VisibilityEstimator::cosine_fit);
            ASSERT_EQ(mm.has_value(), fit.has_value());
            if (mm) {
                EXPECT_NEAR(*mm, *fit, 1e-10);
            }
        }
    }
}

TEST(Visibility, empty_subensemble_is_undefined) {
    auto pattern = exact_closed(0, 0);
    EXPECT_FALSE(visibility_from_pattern(pattern, Perspective::sub1d).has_value());
    EXPECT_TRUE(visibility_from_pattern(pattern, Perspective::sub0d).has_value());
}

TEST(Visibility, empty_sweep_rejected) {
    EXPECT_THROW(visibility_from_pattern(ThetaPattern{}, Perspective::total), std::invalid_argument);
    EXPECT_THROW(visibility_from_sweep(SweepRecord{}, Perspective::total), std::invalid_argument);
}

TEST(Visibility, sampled_estimate_close_to_theory) {
    for (double phi : {0.0, 0.2 * kPi, 0.4 * kPi, 0.6 * kPi, kPi}) {
        auto sweep = theta_sweep(make(phi, 0, Configuration::closed), kRes, 40000, 17);
        auto v = visibility_from_sweep(sweep, Perspective::total);
        ASSERT_TRUE(v.has_value());
        EXPECT_LT(std::abs(*v - std::abs(std::cos(phi))), 0.02) << phi;
    }
}

TEST(Distinguishability, examples) {
    EXPECT_NEAR(distinguishability_total(exact_joint(make(kPi / 2, kPi / 2, Configuration::open))), -1.0, 1e-12);
    for (double phi_prime : {0.0, 0.5, 2.0}) {
        EXPECT_NEAR(distinguishability_total(exact_joint(make(0, phi_prime, Configuration::open))), 0.0, 1e-12);
    }
    EXPECT_NEAR(distinguishability_total(exact_joint(make(kPi / 2, 0, Configuration::open))), 0.0, 1e-12);
    EXPECT_NEAR(distinguishability_total(exact_joint(make(1.0, 2.0, Configuration::open))),
                2 * oracle::p_succ(1.0, 2.0) - 1, 1e-12);
}

TEST(Subensemble, empty_1d_undefined) {
    auto q = subensemble_quantifiers(exact_open(0, 0), exact_closed(0, 0));
    EXPECT_FALSE(q.V1d.has_value());
    EXPECT_FALSE(q.D1d.has_value());
    EXPECT_NEAR(*q.V0d, 1.0, 1e-12);
    EXPECT_NEAR(q.p1d, 0.0, 1e-14);
}

TEST(Subensemble, p1d_example) {
    auto q = subensemble_quantifiers(exact_open(0, 0.25 * kPi), exact_closed(0, 0.25 * kPi));
    EXPECT_NEAR(q.p1d, (1 - std::cos(0.25 * kPi)) / 2, 1e-12);
}

TEST(Subensemble, saturated_example) {
    auto q = subensemble_quantifiers(exact_open(kPi / 2, kPi / 4), exact_closed(kPi / 2, kPi / 4));
    EXPECT_NEAR(*q.V0d, std::cos(kPi / 4), 1e-12);
    EXPECT_NEAR(*q.D0d, -std::sin(kPi / 4), 1e-12);
    EXPECT_NEAR(*q.V0d * *q.V0d + *q.D0d * *q.D0d, 1.0, 1e-12);
}

TEST(Subensemble, mismatched_inputs_rejected) {
    EXPECT_THROW(subensemble_quantifiers(exact_open(0.5, 0.1), exact_closed(0.5, 0.2)), std::invalid_argument);
    EXPECT_THROW(subensemble_quantifiers(exact_open(0.5, 0.1), exact_closed(0.6, 0.1)), std::invalid_argument);
}

TEST(Subensemble, saturation_everywhere_defined) {
    for (int a = 0; a <= 10; a++) {
        for (int b = 0; b <= 4; b++) {
            double phi = 0.2 * kPi * a, phi_prime = 0.25 * kPi * b;
            auto q = exact_summary(phi, phi_prime);
            if (q.V0d) {
                EXPECT_NEAR(*q.V0d * *q.V0d + *q.D0d * *q.D0d, 1.0, 1e-12) << phi << " " << phi_prime;
            }
            if (q.V1d) {
                EXPECT_NEAR(*q.V1d * *q.V1d + *q.D1d * *q.D1d, 1.0, 1e-12) << phi << " " << phi_prime;
            }
        }
    }
}

TEST(Subensemble, saturation_within_sampling_error) {
    double phi = 0.3 * kPi, phi_prime = 0.25 * kPi;
    auto closed = pattern_from_sweep(theta_sweep(make(phi, phi_prime, Configuration::closed), kRes, 5000, 1));
    auto open = pattern_from_sweep(theta_sweep(make(phi, phi_prime, Configuration::open), kRes, 5000, 2));
    auto q = summarize(open, closed, VisibilityEstimator::cosine_fit);
    // Pooled open data has 51 * 5000 shots; each visibility point has ~5000 * p_d shots.
    double n_open = 51 * 5000.0;
    for (int d = 0; d < 2; d++) {
        auto v = d == 0 ? q.V0d : q.V1d;
        auto dd = d == 0 ? q.D0d : q.D1d;
        ASSERT_TRUE(v && dd);
        double p = d == 0 ? q.p0d : q.p1d;
        double se_d = std::sqrt((1 - *dd * *dd) / (n_open * p));
        double se_v = std::sqrt(2.0 / (5000.0 * p * 51));
        double se = 2 * std::sqrt(std::pow(*dd * se_d, 2) + std::pow(*v * se_v, 2));
        EXPECT_LT(std::abs(*v * *v + *dd * *dd - 1.0), 3 * se) << d;
    }
}

TEST(Average, closed_form_example) {
    auto q = exact_summary(kPi / 3, kPi / 6);
    ASSERT_TRUE(q.Vavg);
    EXPECT_NEAR(*q.Vavg, std::cos(kPi / 6), 1e-12);
    EXPECT_NEAR(*q.Vavg, 0.8660, 1e-4);
}

TEST(Average, zero_weight_convention) {
    auto q = exact_summary(0, 0);
    ASSERT_TRUE(q.Vavg);
    EXPECT_NEAR(*q.Vavg, 1.0, 1e-12);
    EXPECT_NEAR(q.Davg, 0.0, 1e-12);
}

TEST(Average, undefined_term_with_weight_rejected) {
    EXPECT_THROW(weighted_subensemble_average(0.5, std::nullopt, 0.7, 0.3), std::invalid_argument);
    EXPECT_DOUBLE_EQ(weighted_subensemble_average(0.5, std::nullopt, 1.0, 0.0), 0.5);
    EXPECT_DOUBLE_EQ(weighted_subensemble_average(0.5, 0.25, 0.5, 0.5), 0.375);
}

TEST(Average, identities_on_grid) {
    for (int a = 0; a <= 20; a++) {
        for (int b = 0; b <= 8; b++) {
            double phi = 0.1 * kPi * a, phi_prime = 0.25 * kPi * b;
            auto q = exact_summary(phi, phi_prime);
            ASSERT_TRUE(q.Vavg && q.V);
            EXPECT_NEAR(q.Davg, q.D, 1e-12);
            EXPECT_NEAR(*q.Vavg, std::max(std::abs(std::cos(phi)), std::abs(std::cos(phi_prime))), 1e-12);
            EXPECT_GE(*q.Vavg, *q.V - 1e-12);
        }
    }
}

TEST(Theory, eraser_point) {
    auto t = theoretical_quantifiers(kPi / 2, 0);
    EXPECT_NEAR(*t.V, 0.0, 1e-12);
    EXPECT_NEAR(t.D, 0.0, 1e-12);
    EXPECT_NEAR(*t.V0d, 1.0, 1e-12);
    EXPECT_NEAR(*t.V1d, 1.0, 1e-12);
    EXPECT_NEAR(*t.D0d, 0.0, 1e-12);
    EXPECT_NEAR(*t.D1d, 0.0, 1e-12);
    EXPECT_NEAR(*t.Vavg, 1.0, 1e-12);
}

TEST(Theory, saturation_point) {
    auto t = theoretical_quantifiers(kPi / 2, kPi / 2);
    EXPECT_NEAR(*t.V, 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t.D), 1.0, 1e-12);
    EXPECT_NEAR(*t.Vavg, 0.0, 1e-12);
    EXPECT_NEAR(*t.V * *t.V + t.D * t.D, 1.0, 1e-12);
}

TEST(Theory, generic_point) {
    auto t = theoretical_quantifiers(kPi / 3, kPi / 6);
    EXPECT_NEAR(*t.V, 0.5, 1e-12);
    EXPECT_NEAR(t.D, -std::sin(kPi / 3) * std::sin(kPi / 6), 1e-12);
    EXPECT_NEAR(t.D, -0.4330, 1e-4);
    EXPECT_NEAR(*t.V * *t.V + t.D * t.D, 0.4375, 1e-12);
}

TEST(Theory, duality_bound_on_grid) {
    for (int a = 0; a < 50; a++) {
        for (int b = 0; b < 50; b++) {
            double phi = 2 * kPi * a / 50, phi_prime = 2 * kPi * b / 50;
            auto t = theoretical_quantifiers(phi, phi_prime);
            double lhs = *t.V * *t.V + t.D * t.D;
            double expected = std::pow(std::cos(phi), 2) + std::pow(std::sin(phi) * std::sin(phi_prime), 2);
            EXPECT_NEAR(lhs, expected, 1e-12);
            EXPECT_LE(lhs, 1.0 + 1e-12);
        }
    }
    for (double phi_prime : {kPi / 2, 3 * kPi / 2}) {
        for (double phi : {0.3, 1.4, 4.0}) {
            auto t = theoretical_quantifiers(phi, phi_prime);
            EXPECT_NEAR(*t.V * *t.V + t.D * t.D, 1.0, 1e-12);
        }
    }
}

TEST(Theory, agrees_with_exact_sweeps) {
    for (int a = 0; a <= 10; a++) {
        for (double phi_prime : {0.0, 0.25 * kPi, 0.5 * kPi, 1.3}) {
            double phi = 0.2 * kPi * a;
            auto t = theoretical_quantifiers(phi, phi_prime);
            auto q = exact_summary(phi, phi_prime);
            EXPECT_NEAR(*t.V, *q.V, 1e-12);
            EXPECT_NEAR(t.D, q.D, 1e-12);
            ASSERT_EQ(t.V0d.has_value(), q.V0d.has_value());
            ASSERT_EQ(t.V1d.has_value(), q.V1d.has_value()) << phi << " " << phi_prime;
            if (t.V0d) {
                EXPECT_NEAR(*t.V0d, *q.V0d, 1e-12);
                EXPECT_NEAR(*t.D0d, *q.D0d, 1e-12);
            }
            if (t.V1d) {
                EXPECT_NEAR(*t.V1d, *q.V1d, 1e-12);
                EXPECT_NEAR(*t.D1d, *q.D1d, 1e-12);
            }
            EXPECT_NEAR(t.p1d, q.p1d, 1e-12);
        }
    }
}

TEST(Triality, rotated_state) {
    for (double phi : {0.0, 0.5, kPi / 2, 2.4, 4.0}) {
        for (double phi_prime : {0.0, 0.7, kPi / 2, -1.1}) {
            auto s = TwoQubitState::from_amplitudes(
                oracle::psi(5, phi, phi_prime, 0)[0], oracle::psi(5, phi, phi_prime, 0)[1],
                oracle::psi(5, phi, phi_prime, 0)[2], oracle::psi(5, phi, phi_prime, 0)[3]);
            auto t = triality(s, 1);
            EXPECT_NEAR(t.C, std::abs(std::sin(phi)), 1e-12);
            EXPECT_NEAR(t.Vk, std::abs(std::cos(phi)), 1e-12);
            EXPECT_NEAR(t.Pk, 0.0, 1e-12);
            if (std::abs(std::sin(phi_prime)) == 1.0) {
                EXPECT_NEAR(t.C, std::abs(theoretical_quantifiers(phi, phi_prime).D), 1e-12);
            }
        }
    }
}

TEST(Triality, product_state) {
    auto t = triality(TwoQubitState::basis(0, 0), 1);
    EXPECT_EQ(t.C, 0.0);
    EXPECT_EQ(t.Vk, 0.0);
    EXPECT_EQ(t.Pk, 1.0);
    EXPECT_THROW(triality(TwoQubitState::basis(0, 0), 3), std::invalid_argument);
}

TEST(Triality, collapsed_state_reproduces_subensemble) {
    double phi = 1.1, phi_prime = 0.6;
    auto amps = oracle::psi(5, phi, phi_prime, 0);
    double w = std::norm(amps[0]) + std::norm(amps[2]);
    auto collapsed = TwoQubitState::from_amplitudes(amps[0] / std::sqrt(w), 0, amps[2] / std::sqrt(w), 0);
    auto t = triality(collapsed, 1);
    auto theory = theoretical_quantifiers(phi, phi_prime);
    EXPECT_NEAR(t.C, 0.0, 1e-12);
    EXPECT_NEAR(t.Vk, *theory.V0d, 1e-12);
    EXPECT_NEAR(t.Pk, std::abs(*theory.D0d), 1e-12);
}

TEST(Triality, relation_holds_for_random_states) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10000; trial++) {
        auto s = random_state(rng);
        for (int k : {1, 2}) {
            auto t = triality(s, k);
            EXPECT_NEAR(t.C * t.C + t.Vk * t.Vk + t.Pk * t.Pk, 1.0, 1e-10);
        }
    }
}

TEST(AmplitudeSubensemble, examples) {
    const double r = 1 / std::sqrt(2.0);
    auto balanced = subensemble_from_amplitudes(r, r, 0, 0);
    ASSERT_TRUE(balanced);
    EXPECT_NEAR(balanced->V0d, 1.0, 1e-15);
    EXPECT_NEAR(balanced->D0d, 0.0, 1e-15);
    auto definite = subensemble_from_amplitudes(1, 0, 0, 0);
    ASSERT_TRUE(definite);
    EXPECT_EQ(definite->V0d, 0.0);
    EXPECT_EQ(definite->D0d, 1.0);
    EXPECT_FALSE(subensemble_from_amplitudes(0, 0, r, r).has_value());
    EXPECT_THROW(subensemble_from_amplitudes(1, 1, 0, 0), std::invalid_argument);
}

TEST(AmplitudeSubensemble, saturates_for_random_states) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10000; trial++) {
        auto s = random_state(rng);
        auto q = subensemble_from_amplitudes(s.amp(0, 0), s.amp(1, 0), s.amp(0, 1), s.amp(1, 1));
        ASSERT_TRUE(q);
        EXPECT_NEAR(q->V0d * q->V0d + q->D0d * q->D0d, 1.0, 1e-12);
    }
}

TEST(AmplitudeSubensemble, matches_circuit_quantifiers) {
    double phi = 0.8, phi_prime = 2.1;
    for (double theta : {0.0, 1.0}) {
        auto s = build_slices([&] {
                     auto cfg = make(phi, phi_prime, Configuration::closed);
                     cfg.theta = theta;
                     return cfg;
                 }())
                     .at(5);
        auto q = subensemble_from_amplitudes(s.amp(0, 0), s.amp(1, 0), s.amp(0, 1), s.amp(1, 1));
        auto t = theoretical_quantifiers(phi, phi_prime);
        EXPECT_NEAR(q->V0d, *t.V0d, 1e-12);
        EXPECT_NEAR(q->D0d, *t.D0d, 1e-12);
        EXPECT_NEAR(q->contrast_coefficient, *t.V0d * std::cos(theta), 1e-12);
    }
}

TEST(Parsing, perspectives_and_estimators) {
    for (auto p : {Perspective::total, Perspective::sub0d, Perspective::sub1d, Perspective::average}) {
        EXPECT_EQ(parse_perspective(to_string(p)), p);
    }
    EXPECT_THROW(parse_perspective("sideways"), std::invalid_argument);
    EXPECT_EQ(parse_estimator("cosine-fit"), VisibilityEstimator::cosine_fit);
    EXPECT_THROW(parse_estimator("guess"), std::invalid_argument);
}
