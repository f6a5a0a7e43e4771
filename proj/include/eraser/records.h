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

#ifndef ERASER_RECORDS_H
#define ERASER_RECORDS_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eraser/analysis.h"
#include "eraser/circuit.h"

namespace eraser {

/// Raised for unreadable or unwritable files, as opposed to invalid input (std::invalid_argument).
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };
OutputFormat parse_format(std::string_view text);

/// One row of the raw counts file:
///   phi,phi_prime,theta,configuration,delay_dt,n_shots,seed,n00,n01,n10,n11
///
/// Counts are integers for sampled rows. Exact-mode rows carry p * n_shots as reals.
struct CountsRow {
    double phi = 0.0;
    double phi_prime = 0.0;
    double theta = 0.0;
    Configuration configuration = Configuration::closed;
    std::uint64_t delay_dt = 0;
    std::uint64_t n_shots = 0;
    std::uint64_t seed = 0;
    std::array<double, 4> n{};

    JointDistribution distribution() const;
};

/// One row of the analysis file: phi,phi_prime,perspective,V,D,V2_plus_D2,defined_flag
/// with optional trailing V_theory,D_theory columns. Undefined values are written as empty
/// CSV fields (null in JSON); defined_flag is 1 only when both V and D are defined.
struct AnalysisRow {
    double phi = 0.0;
    double phi_prime = 0.0;
    Perspective perspective = Perspective::total;
    std::optional<double> V;
    std::optional<double> D;
    std::optional<double> V_theory;
    std::optional<double> D_theory;

    bool defined() const {
        return V.has_value() && D.has_value();
    }
};

/// phi,n_unitaries,n_shots,gamma_hat,s2_hat,std_err,seed
struct PurityRow {
    double phi = 0.0;
    std::uint64_t n_unitaries = 0;
    std::uint64_t n_shots = 0;
    double gamma_hat = 0.0;
    std::optional<double> s2_hat;
    double std_err = 0.0;
    std::uint64_t seed = 0;
};

/// Reals in 12 significant digits, the column contract for angles and quantifiers.
std::string format_real(double v);

void write_counts(std::ostream &out, const std::vector<CountsRow> &rows, OutputFormat format);
/// Reads the CSV form. Throws std::invalid_argument on schema violations.
std::vector<CountsRow> read_counts_csv(std::istream &in);

void write_analysis(std::ostream &out, const std::vector<AnalysisRow> &rows, OutputFormat format, bool with_theory);
std::vector<AnalysisRow> read_analysis_csv(std::istream &in);

void write_purity(std::ostream &out, const std::vector<PurityRow> &rows, OutputFormat format);

}  // namespace eraser

#endif
