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

#include "eraser/records.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace eraser {

namespace {

const std::vector<std::string> kCountsHeader{
    "phi", "phi_prime", "theta", "configuration", "delay_dt", "n_shots", "seed", "n00", "n01", "n10", "n11"};
const std::vector<std::string> kAnalysisHeader{"phi", "phi_prime", "perspective", "V", "D", "V2_plus_D2", "defined_flag"};
const std::vector<std::string> kTheoryColumns{"V_theory", "D_theory"};
const std::vector<std::string> kPurityHeader{"phi", "n_unitaries", "n_shots", "gamma_hat", "s2_hat", "std_err", "seed"};

std::string join(const std::vector<std::string> &fields) {
    std::string out;
    for (std::size_t k = 0; k < fields.size(); k++) {
        if (k) {
            out += ',';
        }
        out += fields[k];
    }
    return out;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::string format_count(double v) {
    char buf[64];
    if (v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", v);
    }
    return buf;
}

std::string format_optional(const std::optional<double> &v) {
    return v.has_value() ? format_real(*v) : std::string();
}

double parse_real(const std::string &field, const char *column) {
    char *end = nullptr;
    double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size() || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("bad value '") + field + "' in column " + column);
    }
    return v;
}

std::optional<double> parse_optional_real(const std::string &field, const char *column) {
    if (field.empty()) {
        return std::nullopt;
    }
    return parse_real(field, column);
}

std::uint64_t parse_uint(const std::string &field, const char *column) {
    char *end = nullptr;
    if (field.empty() || field.front() == '-') {
        throw std::invalid_argument(std::string("bad value '") + field + "' in column " + column);
    }
    unsigned long long v = std::strtoull(field.c_str(), &end, 10);
    if (end != field.c_str() + field.size()) {
        throw std::invalid_argument(std::string("bad value '") + field + "' in column " + column);
    }
    return v;
}

nlohmann::ordered_json optional_json(const std::optional<double> &v) {
    return v.has_value() ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::optional<double> squares_sum(const AnalysisRow &row) {
    if (!row.defined()) {
        return std::nullopt;
    }
    return *row.V * *row.V + *row.D * *row.D;
}

void require_header(std::istream &in, const std::vector<std::string> &expected, std::vector<std::string> *extra) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("missing CSV header");
    }
    auto header = split(line);
    if (header.size() < expected.size() ||
        !std::equal(expected.begin(), expected.end(), header.begin())) {
        throw std::invalid_argument("unexpected CSV header '" + line + "', want '" + join(expected) + "'");
    }
    if (extra != nullptr) {
        extra->assign(header.begin() + static_cast<std::ptrdiff_t>(expected.size()), header.end());
    } else if (header.size() != expected.size()) {
        throw std::invalid_argument("unexpected extra CSV columns in '" + line + "'");
    }
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::csv;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

JointDistribution CountsRow::distribution() const {
    if (n_shots == 0) {
        throw std::invalid_argument("counts row has n_shots = 0");
    }
    double total = n[0] + n[1] + n[2] + n[3];
    if (std::abs(total - static_cast<double>(n_shots)) > 1e-9 * static_cast<double>(n_shots)) {
        throw std::invalid_argument("counts row does not add up to n_shots");
    }
    std::array<double, 4> p{};
    for (int k = 0; k < 4; k++) {
        if (n[k] < 0.0) {
            throw std::invalid_argument("counts row has a negative count");
        }
        p[k] = n[k] / total;
    }
    return JointDistribution(p);
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

void write_counts(std::ostream &out, const std::vector<CountsRow> &rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
            arr.push_back({
                {"phi", r.phi},
                {"phi_prime", r.phi_prime},
                {"theta", r.theta},
                {"configuration", std::string(to_string(r.configuration))},
                {"delay_dt", r.delay_dt},
                {"n_shots", r.n_shots},
                {"seed", r.seed},
                {"n00", r.n[0]},
                {"n01", r.n[1]},
                {"n10", r.n[2]},
                {"n11", r.n[3]},
            });
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << join(kCountsHeader) << '\n';
    for (const auto &r : rows) {
        out << join({
                   format_real(r.phi),
                   format_real(r.phi_prime),
                   format_real(r.theta),
                   std::string(to_string(r.configuration)),
                   std::to_string(r.delay_dt),
                   std::to_string(r.n_shots),
                   std::to_string(r.seed),
                   format_count(r.n[0]),
                   format_count(r.n[1]),
                   format_count(r.n[2]),
                   format_count(r.n[3]),
               })
            << '\n';
    }
}

std::vector<CountsRow> read_counts_csv(std::istream &in) {
    require_header(in, kCountsHeader, nullptr);
    std::vector<CountsRow> rows;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        auto f = split(line);
        if (f.size() != kCountsHeader.size()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 11 columns");
        }
        CountsRow r;
        r.phi = parse_real(f[0], "phi");
        r.phi_prime = parse_real(f[1], "phi_prime");
        r.theta = parse_real(f[2], "theta");
        r.configuration = parse_configuration(f[3]);
        r.delay_dt = parse_uint(f[4], "delay_dt");
        r.n_shots = parse_uint(f[5], "n_shots");
        r.seed = parse_uint(f[6], "seed");
        for (int k = 0; k < 4; k++) {
            r.n[k] = parse_real(f[7 + k], kCountsHeader[7 + k].c_str());
        }
        r.distribution();
        rows.push_back(r);
    }
    return rows;
}

void write_analysis(std::ostream &out, const std::vector<AnalysisRow> &rows, OutputFormat format, bool with_theory) {
    if (format == OutputFormat::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
            nlohmann::ordered_json obj{
                {"phi", r.phi},
                {"phi_prime", r.phi_prime},
                {"perspective", std::string(to_string(r.perspective))},
                {"V", optional_json(r.V)},
                {"D", optional_json(r.D)},
                {"V2_plus_D2", optional_json(squares_sum(r))},
                {"defined_flag", r.defined() ? 1 : 0},
            };
            if (with_theory) {
                obj["V_theory"] = optional_json(r.V_theory);
                obj["D_theory"] = optional_json(r.D_theory);
            }
            arr.push_back(obj);
        }
        out << arr.dump(2) << '\n';
        return;
    }
    auto header = kAnalysisHeader;
    if (with_theory) {
        header.insert(header.end(), kTheoryColumns.begin(), kTheoryColumns.end());
    }
    out << join(header) << '\n';
    for (const auto &r : rows) {
        std::vector<std::string> fields{
            format_real(r.phi),
            format_real(r.phi_prime),
            std::string(to_string(r.perspective)),
            format_optional(r.V),
            format_optional(r.D),
            format_optional(squares_sum(r)),
            r.defined() ? "1" : "0",
        };
        if (with_theory) {
            fields.push_back(format_optional(r.V_theory));
            fields.push_back(format_optional(r.D_theory));
        }
        out << join(fields) << '\n';
    }
}

std::vector<AnalysisRow> read_analysis_csv(std::istream &in) {
    std::vector<std::string> extra;
    require_header(in, kAnalysisHeader, &extra);
    bool with_theory = extra == kTheoryColumns;
    if (!extra.empty() && !with_theory) {
        throw std::invalid_argument("unexpected extra analysis columns");
    }
    std::vector<AnalysisRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto f = split(line);
        if (f.size() != kAnalysisHeader.size() + extra.size()) {
            throw std::invalid_argument("analysis row has the wrong number of columns: '" + line + "'");
        }
        AnalysisRow r;
        r.phi = parse_real(f[0], "phi");
        r.phi_prime = parse_real(f[1], "phi_prime");
        r.perspective = parse_perspective(f[2]);
        r.V = parse_optional_real(f[3], "V");
        r.D = parse_optional_real(f[4], "D");
        if (f[6] != (r.defined() ? "1" : "0")) {
            throw std::invalid_argument("defined_flag disagrees with the V and D fields: '" + line + "'");
        }
        if (with_theory) {
            r.V_theory = parse_optional_real(f[7], "V_theory");
            r.D_theory = parse_optional_real(f[8], "D_theory");
        }
        rows.push_back(r);
    }
    return rows;
}

void write_purity(std::ostream &out, const std::vector<PurityRow> &rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
            arr.push_back({
                {"phi", r.phi},
                {"n_unitaries", r.n_unitaries},
                {"n_shots", r.n_shots},
                {"gamma_hat", r.gamma_hat},
                {"s2_hat", optional_json(r.s2_hat)},
                {"std_err", r.std_err},
                {"seed", r.seed},
            });
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << join(kPurityHeader) << '\n';
    for (const auto &r : rows) {
        out << join({
                   format_real(r.phi),
                   std::to_string(r.n_unitaries),
                   std::to_string(r.n_shots),
                   format_real(r.gamma_hat),
                   format_optional(r.s2_hat),
                   format_real(r.std_err),
                   std::to_string(r.seed),
               })
            << '\n';
    }
}

}  // namespace eraser
