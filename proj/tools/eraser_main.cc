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

// Command-line front end: sweep, analyze, theory, renyi, cnot-ablation.
//
// Exit codes: 0 success, 2 invalid input, 3 I/O failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eraser/angles.h"
#include "eraser/harness.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;
constexpr const char *kOutputDirEnv = "ERASER_OUTPUT_DIR";

struct CommonFlags {
    std::string phi = "0";
    std::string phi_prime = "0";
    std::string theta_step = "0.04pi";
    std::string shots = "5000";
    std::string configuration = "both";
    std::uint64_t delay_dt = 0;
    std::string noise_preset;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
};

void add_output_flags(CLI::App *cmd, CommonFlags &f) {
    cmd->add_option("--out", f.out, "Output file (default: $" + std::string(kOutputDirEnv) + "/<command>.<format>, else stdout)");
    cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

std::optional<std::uint64_t> parse_shots(const std::string &text) {
    if (text == "exact") {
        return std::nullopt;
    }
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-' || v == 0) {
        throw std::invalid_argument("--shots must be a positive integer or 'exact'");
    }
    return v;
}

// Resolves where output goes; empty means stdout.
std::string output_path(const CommonFlags &f, const std::string &command) {
    if (!f.out.empty()) {
        return f.out;
    }
    if (const char *dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            throw eraser::IoError("cannot create output directory '" + std::string(dir) + "': " + ec.message());
        }
        return (std::filesystem::path(dir) / (command + "." + f.format)).string();
    }
    return "";
}

template <typename Writer>
void emit(const std::string &path, Writer &&write) {
    // Render fully first so a failed run never leaves a half-written file.
    std::ostringstream buffer;
    write(buffer);
    if (path.empty()) {
        std::cout << buffer.str();
        std::cout.flush();
        if (!std::cout) {
            throw eraser::IoError("failed writing to stdout");
        }
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw eraser::IoError("cannot open '" + path + "' for writing");
    }
    file << buffer.str();
    file.close();
    if (!file) {
        throw eraser::IoError("failed writing '" + path + "'");
    }
}

std::vector<eraser::Perspective> parse_perspectives(const std::vector<std::string> &names) {
    std::vector<eraser::Perspective> out;
    for (const auto &n : names) {
        out.push_back(eraser::parse_perspective(n));
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Delayed-choice quantum eraser circuit simulator"};
    app.require_subcommand(1);

    CommonFlags sweep_flags;
    auto *sweep = app.add_subcommand("sweep", "Sample theta sweeps and write raw counts");
    sweep->add_option("--phi", sweep_flags.phi, "Preparation angles, e.g. '0:2pi:0.1pi'");
    sweep->add_option("--phi-prime", sweep_flags.phi_prime, "d-wire analysis angles, e.g. '0,0.25pi,0.5pi'");
    sweep->add_option("--theta-step", sweep_flags.theta_step, "Theta grid resolution");
    sweep->add_option("--shots", sweep_flags.shots, "Shots per grid point, or 'exact'");
    sweep->add_option("--configuration", sweep_flags.configuration, "closed, open or both")
        ->check(CLI::IsMember({"closed", "open", "both"}));
    sweep->add_option("--delay-dt", sweep_flags.delay_dt, "Idle before the d measurement, in units of dt = 0.22 ns");
    sweep->add_option("--noise-preset", sweep_flags.noise_preset, "auckland-pair-i, auckland-pair-ii or toronto-pair-iii");
    sweep->add_option("--seed", sweep_flags.seed, "Master seed");
    add_output_flags(sweep, sweep_flags);

    CommonFlags analyze_flags;
    std::string analyze_in;
    std::vector<std::string> analyze_perspectives{"total", "sub0d", "sub1d", "average"};
    std::string estimator = "max-min";
    bool with_theory = false;
    auto *analyze = app.add_subcommand("analyze", "Compute visibility and distinguishability from raw counts");
    analyze->add_option("--in", analyze_in, "Raw counts CSV written by 'sweep'")->required();
    analyze->add_option("--perspective", analyze_perspectives, "Any of total, sub0d, sub1d, average")
        ->check(CLI::IsMember({"total", "sub0d", "sub1d", "average"}))
        ->delimiter(',');
    analyze->add_option("--estimator", estimator, "Visibility estimator: max-min or cosine-fit")
        ->check(CLI::IsMember({"max-min", "cosine-fit"}));
    analyze->add_flag("--theory", with_theory, "Append V_theory and D_theory columns");
    add_output_flags(analyze, analyze_flags);

    CommonFlags theory_flags;
    std::vector<std::string> theory_perspectives{"total", "sub0d", "sub1d", "average"};
    auto *theory = app.add_subcommand("theory", "Write closed-form quantifiers");
    theory->add_option("--phi", theory_flags.phi, "Preparation angles");
    theory->add_option("--phi-prime", theory_flags.phi_prime, "d-wire analysis angles");
    theory->add_option("--perspective", theory_perspectives, "Any of total, sub0d, sub1d, average")
        ->check(CLI::IsMember({"total", "sub0d", "sub1d", "average"}))
        ->delimiter(',');
    add_output_flags(theory, theory_flags);

    CommonFlags renyi_flags;
    renyi_flags.phi = "0:pi:0.1pi";
    eraser::RandMeasPlan plan;
    auto *renyi = app.add_subcommand("renyi", "Estimate slice-2 purity and Renyi-2 entropy by randomized measurements");
    renyi->add_option("--phi", renyi_flags.phi, "Preparation angles");
    renyi->add_option("--unitaries", plan.n_unitaries, "Random unitaries per angle");
    renyi->add_option("--shots", plan.n_shots_per_unitary, "Shots per unitary");
    renyi->add_option("--bootstrap", plan.n_bootstrap, "Bootstrap resamples for the standard error");
    renyi->add_option("--seed", renyi_flags.seed, "Master seed");
    add_output_flags(renyi, renyi_flags);

    CommonFlags ablation_flags;
    ablation_flags.phi_prime = "0:2pi:0.1pi";
    ablation_flags.shots = "exact";
    ablation_flags.noise_preset = "auckland-pair-ii";
    bool with_cnot = false;
    auto *ablation = app.add_subcommand("cnot-ablation", "Sub-1d visibility versus phi' without the Ry(phi) gate");
    ablation->add_option("--phi-prime", ablation_flags.phi_prime, "d-wire analysis angles");
    ablation->add_flag("--with-cnot", with_cnot, "Keep the (noisy) CNOT");
    ablation->add_option("--noise-preset", ablation_flags.noise_preset, "Noise preset for the CNOT error");
    ablation->add_option("--shots", ablation_flags.shots, "Shots per grid point, or 'exact'");
    ablation->add_option("--theta-step", ablation_flags.theta_step, "Theta grid resolution");
    ablation->add_option("--seed", ablation_flags.seed, "Master seed");
    add_output_flags(ablation, ablation_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (sweep->parsed()) {
            eraser::RunSpec spec;
            spec.phi_list = eraser::parse_angle_list(sweep_flags.phi);
            spec.phi_prime_list = eraser::parse_angle_list(sweep_flags.phi_prime);
            spec.theta_resolution = eraser::parse_angle(sweep_flags.theta_step);
            spec.shots = parse_shots(sweep_flags.shots);
            spec.configuration = eraser::parse_configuration_choice(sweep_flags.configuration);
            spec.delay_dt = sweep_flags.delay_dt;
            if (!sweep_flags.noise_preset.empty()) {
                spec.noise_preset = sweep_flags.noise_preset;
            }
            spec.seed = sweep_flags.seed;
            auto rows = eraser::run_sweep(spec);
            auto format = eraser::parse_format(sweep_flags.format);
            emit(output_path(sweep_flags, "sweep"), [&](std::ostream &os) { eraser::write_counts(os, rows, format); });
        } else if (analyze->parsed()) {
            std::ifstream in(analyze_in);
            if (!in) {
                throw eraser::IoError("cannot open '" + analyze_in + "'");
            }
            auto counts = eraser::read_counts_csv(in);
            eraser::AnalyzeOptions options;
            options.perspectives = parse_perspectives(analyze_perspectives);
            options.estimator = eraser::parse_estimator(estimator);
            options.with_theory = with_theory;
            auto rows = eraser::analyze_counts(counts, options);
            auto format = eraser::parse_format(analyze_flags.format);
            emit(output_path(analyze_flags, "analyze"),
                 [&](std::ostream &os) { eraser::write_analysis(os, rows, format, with_theory); });
        } else if (theory->parsed()) {
            auto rows = eraser::theory_rows(
                eraser::parse_angle_list(theory_flags.phi),
                eraser::parse_angle_list(theory_flags.phi_prime),
                parse_perspectives(theory_perspectives));
            auto format = eraser::parse_format(theory_flags.format);
            emit(output_path(theory_flags, "theory"),
                 [&](std::ostream &os) { eraser::write_analysis(os, rows, format, false); });
        } else if (renyi->parsed()) {
            plan.seed = renyi_flags.seed;
            auto rows = eraser::renyi_rows(eraser::parse_angle_list(renyi_flags.phi), plan);
            auto format = eraser::parse_format(renyi_flags.format);
            emit(output_path(renyi_flags, "renyi"), [&](std::ostream &os) { eraser::write_purity(os, rows, format); });
        } else if (ablation->parsed()) {
            eraser::AblationSpec spec;
            spec.phi_prime_list = eraser::parse_angle_list(ablation_flags.phi_prime);
            spec.with_cnot = with_cnot;
            spec.noise = eraser::noise_preset(ablation_flags.noise_preset);
            spec.shots = parse_shots(ablation_flags.shots);
            spec.theta_resolution = eraser::parse_angle(ablation_flags.theta_step);
            spec.seed = ablation_flags.seed;
            auto rows = eraser::cnot_ablation_rows(spec);
            auto format = eraser::parse_format(ablation_flags.format);
            emit(output_path(ablation_flags, "cnot-ablation"),
                 [&](std::ostream &os) { eraser::write_analysis(os, rows, format, false); });
        }
    } catch (const eraser::IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
