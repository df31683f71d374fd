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
// CSV forms of query results.
//   matches: leading_id,other_id,separation_deg   (12 significant digits)
//   scan:    id,mag                               (shortest round-trip)
//   cone:    id,separation_deg                    (12 significant digits)

#include <iosfwd>
#include <span>
#include <vector>

#include "zonex/query.hpp"

namespace zonex {

void write_matches_csv(std::ostream& out, std::span<const MatchPair> pairs);
void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows);
void write_cone_csv(std::ostream& out, std::span<const ConeRow> rows);

/// Readers throw DataError on a wrong header or malformed row.
std::vector<MatchPair> read_matches_csv(std::istream& in);
std::vector<ScanRow> read_scan_csv(std::istream& in);
std::vector<ConeRow> read_cone_csv(std::istream& in);

}  // namespace zonex
