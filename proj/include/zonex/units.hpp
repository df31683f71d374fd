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

#pragma once

#include <string>
#include <string_view>

namespace zonex {

/// "4arcmin" -> 0.0666... degrees. Accepts deg, arcmin and arcsec suffixes;
/// a bare number is rejected with DomainError to avoid silent unit slips.
double parse_angle(std::string_view text);

/// Degrees as the shortest round-tripping number with a "deg" suffix.
std::string format_angle(double deg);

}  // namespace zonex
