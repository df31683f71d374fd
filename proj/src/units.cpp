// Copyright 2026 The Zonex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zonex/units.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include "zonex/error.hpp"
#include "zonex/ingest.hpp"
#include "zonex/sphere.hpp"

namespace zonex {

double parse_angle(std::string_view text) {
  static constexpr std::pair<std::string_view, double> kUnits[] = {
      {"arcmin", kArcminDeg}, {"arcsec", kArcsecDeg}, {"deg", 1.0}};
  for (const auto& [suffix, scale] : kUnits) {
    if (!text.ends_with(suffix)) continue;
    auto number = text.substr(0, text.size() - suffix.size());
    if (!number.empty() && number.front() == '+') number.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), v);
    if (number.empty() || ec != std::errc{} || ptr != number.data() + number.size() || !std::isfinite(v)) {
      throw DomainError("bad angle '" + std::string(text) + "'");
    }
    return v * scale;
  }
  throw DomainError("angle '" + std::string(text) + "' needs a unit suffix: deg, arcmin or arcsec");
}

std::string format_angle(double deg) { return format_shortest(deg) + "deg"; }

}  // namespace zonex
