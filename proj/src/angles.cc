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

#include "eraser/angles.h"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eraser {

namespace {

struct AngleLiteral {
    double value;
    // True when `value` is a coefficient of pi.
    bool in_pi;

    double radians() const {
        return in_pi ? value * std::numbers::pi : value;
    }
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view text, std::string_view whole) {
    std::string buf(text);
    char *end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
        throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
    }
    return v;
}

AngleLiteral parse_literal(std::string_view raw) {
    auto text = trim(raw);
    if (text.empty()) {
        throw std::invalid_argument("empty angle");
    }
    auto pi_pos = text.find("pi");
    if (pi_pos == std::string_view::npos) {
        return {parse_number(text, raw), false};
    }
    auto coeff_text = text.substr(0, pi_pos);
    auto rest = text.substr(pi_pos + 2);
    double coeff = 1.0;
    if (coeff_text == "-") {
        coeff = -1.0;
    } else if (coeff_text == "+") {
        coeff = 1.0;
    } else if (!coeff_text.empty()) {
        if (coeff_text.back() == '*') {
            coeff_text.remove_suffix(1);
        }
        coeff = parse_number(coeff_text, raw);
    }
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw std::invalid_argument("cannot parse angle '" + std::string(raw) + "'");
        }
        double denom = parse_number(rest.substr(1), raw);
        if (denom == 0.0) {
            throw std::invalid_argument("zero denominator in angle '" + std::string(raw) + "'");
        }
        coeff /= denom;
    }
    return {coeff, true};
}

}  // namespace

double parse_angle(std::string_view text) {
    return parse_literal(text).radians();
}

std::vector<double> parse_angle_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (item.find(':') == std::string_view::npos) {
            out.push_back(parse_angle(item));
        } else {
            auto c1 = item.find(':');
            auto c2 = item.find(':', c1 + 1);
            if (c2 == std::string_view::npos) {
                throw std::invalid_argument("range '" + std::string(item) + "' needs start:stop:step");
            }
            auto lo = parse_literal(item.substr(0, c1));
            auto hi = parse_literal(item.substr(c1 + 1, c2 - c1 - 1));
            auto step = parse_literal(item.substr(c2 + 1));
            bool pi_units = lo.in_pi && hi.in_pi && step.in_pi;
            double a = pi_units ? lo.value : lo.radians();
            double b = pi_units ? hi.value : hi.radians();
            double h = pi_units ? step.value : step.radians();
            if (!(h > 0.0) || b < a) {
                throw std::invalid_argument("range '" + std::string(item) + "' must have step > 0 and stop >= start");
            }
            auto n = static_cast<long>(std::floor((b - a) / h + 1e-9));
            for (long k = 0; k <= n; k++) {
                double v = a + static_cast<double>(k) * h;
                out.push_back(pi_units ? v * std::numbers::pi : v);
            }
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

}  // namespace eraser
