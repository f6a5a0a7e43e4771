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

#include "eraser/harness.h"

#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "eraser/sampling.h"

namespace eraser {

ConfigurationChoice parse_configuration_choice(std::string_view text) {
    if (text == "closed") {
        return ConfigurationChoice::closed;
    }
    if (text == "open") {
        return ConfigurationChoice::open;
    }
    if (text == "both") {
        return ConfigurationChoice::both;
    }
    throw std::invalid_argument("unknown configuration '" + std::string(text) + "'");
}

void RunSpec::validate() const {
    if (phi_list.empty() || phi_prime_list.empty()) {
        throw std::invalid_argument("RunSpec: angle lists must be nonempty");
    }
    if (!(theta_resolution > 0.0) || theta_resolution > std::numbers::pi + 1e-12) {
        throw std::invalid_argument("RunSpec: theta resolution must be in (0, pi]");
    }
    if (shots.has_value() && *shots == 0) {
        throw std::invalid_argument("RunSpec: shots must be positive");
    }
    theta_grid(theta_resolution);
    if (auto n = this->noise(); n.has_value()) {
        n->validate();
    }
}

std::optional<NoiseModel> RunSpec::noise() const {
    if (!noise_preset.has_value()) {
        return std::nullopt;
    }
    return eraser::noise_preset(*noise_preset);
}

namespace {

std::vector<Configuration> configurations(ConfigurationChoice choice) {
    switch (choice) {
        case ConfigurationChoice::closed:
            return {Configuration::closed};
        case ConfigurationChoice::open:
            return {Configuration::open};
        case ConfigurationChoice::both:
            break;
    }
    return {Configuration::closed, Configuration::open};
}

CountsRow row_for(const CircuitConfig &cfg, std::uint64_t n_shots, std::uint64_t seed, const std::array<double, 4> &n) {
    CountsRow row;
    row.phi = cfg.phi;
    row.phi_prime = cfg.phi_prime;
    row.theta = cfg.theta;
    row.configuration = cfg.configuration;
    row.delay_dt = cfg.delay_dt;
    row.n_shots = n_shots;
    row.seed = seed;
    row.n = n;
    return row;
}

std::vector<CountsRow> sweep_point(
    const RunSpec &spec, const std::optional<NoiseModel> &noise, double phi, double phi_prime, std::uint64_t seed) {
    std::vector<CountsRow> rows;
    for (auto configuration : configurations(spec.configuration)) {
        CircuitConfig cfg;
        cfg.phi = phi;
        cfg.phi_prime = phi_prime;
        cfg.configuration = configuration;
        cfg.delay_dt = spec.delay_dt;
        cfg.noise = noise;
        auto grid = theta_grid(spec.theta_resolution);
        if (spec.shots.has_value()) {
            auto sweep = theta_sweep_serial(cfg, spec.theta_resolution, *spec.shots, seed);
            for (const auto &c : sweep.counts) {
                std::array<double, 4> n{};
                for (int k = 0; k < 4; k++) {
                    n[k] = static_cast<double>(c.n[k]);
                }
                rows.push_back(row_for(c.cfg, c.n_shots, c.seed, n));
            }
        } else {
            for (std::size_t k = 0; k < grid.size(); k++) {
                cfg.theta = grid[k];
                auto p = exact_joint(cfg).values();
                std::array<double, 4> n{};
                for (int j = 0; j < 4; j++) {
                    n[j] = p[j] * static_cast<double>(kExactNominalShots);
                }
                rows.push_back(row_for(cfg, kExactNominalShots, derive_seed(seed, k), n));
            }
        }
    }
    return rows;
}

}  // namespace

std::vector<CountsRow> run_sweep(const RunSpec &spec) {
    spec.validate();
    auto noise = spec.noise();
    auto n_phi = spec.phi_list.size();
    auto n_points = static_cast<std::ptrdiff_t>(n_phi * spec.phi_prime_list.size());
    std::vector<std::vector<CountsRow>> per_point(n_points);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t j = 0; j < n_points; j++) {
        try {
            per_point[j] = sweep_point(
                spec, noise, spec.phi_list[j % n_phi], spec.phi_prime_list[j / n_phi], derive_seed(spec.seed, j));
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<CountsRow> rows;
    for (auto &p : per_point) {
        rows.insert(rows.end(), p.begin(), p.end());
    }
    return rows;
}

std::vector<CountsRow> run_sweep_serial(const RunSpec &spec) {
    spec.validate();
    auto noise = spec.noise();
    std::vector<CountsRow> rows;
    std::uint64_t j = 0;
    for (double phi_prime : spec.phi_prime_list) {
        for (double phi : spec.phi_list) {
            auto p = sweep_point(spec, noise, phi, phi_prime, derive_seed(spec.seed, j++));
            rows.insert(rows.end(), p.begin(), p.end());
        }
    }
    return rows;
}

std::vector<AnalysisRow> quantifier_rows(
    double phi, double phi_prime, const QuantifierSet &q, const std::vector<Perspective> &perspectives) {
    std::vector<AnalysisRow> rows;
    for (auto perspective : perspectives) {
        AnalysisRow r;
        r.phi = phi;
        r.phi_prime = phi_prime;
        r.perspective = perspective;
        switch (perspective) {
            case Perspective::total:
                r.V = q.V;
                r.D = q.D;
                break;
            case Perspective::sub0d:
                r.V = q.V0d;
                r.D = q.D0d;
                break;
            case Perspective::sub1d:
                r.V = q.V1d;
                r.D = q.D1d;
                break;
            case Perspective::average:
                r.V = q.Vavg;
                r.D = q.Davg;
                break;
        }
        rows.push_back(r);
    }
    return rows;
}

namespace {

void attach_theory(std::vector<AnalysisRow> &rows, double phi, double phi_prime) {
    auto theory = quantifier_rows(phi, phi_prime, theoretical_quantifiers(phi, phi_prime), {
        Perspective::total, Perspective::sub0d, Perspective::sub1d, Perspective::average});
    for (auto &r : rows) {
        const auto &t = theory[static_cast<int>(r.perspective)];
        r.V_theory = t.V;
        r.D_theory = t.D;
    }
}

}  // namespace

std::vector<AnalysisRow> analyze_counts(const std::vector<CountsRow> &rows, const AnalyzeOptions &options) {
    if (rows.empty()) {
        throw std::invalid_argument("analyze: no rows");
    }
    std::set<std::uint64_t> delays;
    std::vector<std::pair<double, double>> order;
    std::map<std::pair<double, double>, std::pair<ThetaPattern, ThetaPattern>> groups;
    for (const auto &r : rows) {
        delays.insert(r.delay_dt);
        std::pair key{r.phi, r.phi_prime};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            order.push_back(key);
            for (auto *pattern : {&it->second.first, &it->second.second}) {
                pattern->phi = r.phi;
                pattern->phi_prime = r.phi_prime;
            }
        }
        auto &pattern = r.configuration == Configuration::closed ? it->second.first : it->second.second;
        pattern.theta.push_back(r.theta);
        pattern.dist.push_back(r.distribution());
        pattern.weight.push_back(static_cast<double>(r.n_shots));
    }
    if (delays.size() > 1) {
        throw std::invalid_argument("analyze: rows mix several delay_dt values; analyze one delay per file");
    }

    std::vector<AnalysisRow> out;
    for (const auto &key : order) {
        const auto &[closed, open] = groups.at(key);
        if (closed.empty()) {
            throw std::invalid_argument("analyze: missing closed-configuration rows for phi=" +
                                        format_real(key.first) + ", phi_prime=" + format_real(key.second));
        }
        if (open.empty()) {
            throw std::invalid_argument("analyze: missing open-configuration rows for phi=" +
                                        format_real(key.first) + ", phi_prime=" + format_real(key.second));
        }
        auto q = summarize(open, closed, options.estimator);
        auto group_rows = quantifier_rows(key.first, key.second, q, options.perspectives);
        if (options.with_theory) {
            attach_theory(group_rows, key.first, key.second);
        }
        out.insert(out.end(), group_rows.begin(), group_rows.end());
    }
    return out;
}

std::vector<AnalysisRow> theory_rows(
    const std::vector<double> &phi_list,
    const std::vector<double> &phi_prime_list,
    const std::vector<Perspective> &perspectives) {
    if (phi_list.empty() || phi_prime_list.empty()) {
        throw std::invalid_argument("theory: angle lists must be nonempty");
    }
    std::vector<AnalysisRow> out;
    for (double phi_prime : phi_prime_list) {
        for (double phi : phi_list) {
            auto rows = quantifier_rows(phi, phi_prime, theoretical_quantifiers(phi, phi_prime), perspectives);
            out.insert(out.end(), rows.begin(), rows.end());
        }
    }
    return out;
}

std::vector<PurityRow> renyi_rows(const std::vector<double> &phi_list, const RandMeasPlan &plan) {
    plan.validate();
    if (phi_list.empty()) {
        throw std::invalid_argument("renyi: phi list must be nonempty");
    }
    std::vector<PurityRow> out;
    for (std::size_t k = 0; k < phi_list.size(); k++) {
        RandMeasPlan point_plan = plan;
        point_plan.seed = derive_seed(plan.seed, k);
        auto est = estimate_purity(phi_list[k], point_plan);
        out.push_back({phi_list[k], plan.n_unitaries, plan.n_shots_per_unitary, est.gamma_hat, est.s2_hat,
                       est.std_err, point_plan.seed});
    }
    return out;
}

std::vector<AnalysisRow> cnot_ablation_rows(const AblationSpec &spec) {
    if (spec.phi_prime_list.empty()) {
        throw std::invalid_argument("cnot-ablation: phi_prime list must be nonempty");
    }
    if (spec.shots.has_value() && *spec.shots == 0) {
        throw std::invalid_argument("cnot-ablation: shots must be positive");
    }
    std::vector<AnalysisRow> out;
    for (std::size_t j = 0; j < spec.phi_prime_list.size(); j++) {
        ThetaPattern patterns[2];
        for (auto configuration : {Configuration::closed, Configuration::open}) {
            CircuitConfig cfg;
            cfg.phi_prime = spec.phi_prime_list[j];
            cfg.configuration = configuration;
            cfg.noise = spec.noise;
            cfg.with_entangler_rotation = false;
            cfg.with_cnot = spec.with_cnot;
            auto &pattern = patterns[configuration == Configuration::closed ? 0 : 1];
            if (spec.shots.has_value()) {
                pattern = pattern_from_sweep(
                    theta_sweep(cfg, spec.theta_resolution, *spec.shots, derive_seed(spec.seed, j)));
            } else {
                pattern = exact_pattern(cfg, spec.theta_resolution);
            }
        }
        auto q = summarize(patterns[1], patterns[0]);
        auto rows = quantifier_rows(0.0, spec.phi_prime_list[j], q, {Perspective::sub1d});
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

}  // namespace eraser
