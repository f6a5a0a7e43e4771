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

#ifndef ERASER_ANGLES_H
#define ERASER_ANGLES_H

#include <string_view>
#include <vector>

namespace eraser {

/// Parses one angle in radians. Accepts plain numbers ("1.5707963"), multiples of pi
/// ("0.25pi", "-pi", "pi") and pi fractions ("pi/2", "3pi/4").
double parse_angle(std::string_view text);

/// Comma-separated angles or inclusive ranges "start:stop:step", e.g. "0:2pi:0.1pi".
/// Ranges whose three parts are all pi multiples are stepped in units of pi, so
/// "0:2pi:0.1pi" yields exactly k * 0.1 * pi.
std::vector<double> parse_angle_list(std::string_view text);

}  // namespace eraser

#endif
