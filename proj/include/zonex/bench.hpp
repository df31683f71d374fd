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
// Cross-match scaling benchmark: the same join at several worker counts,
// repeated, reported as median elapsed time and speedup.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "zonex/executor.hpp"
#include "zonex/partition.hpp"
#include "zonex/query.hpp"

namespace zonex {

struct BenchRun {
  std::size_t workers = 0;
  std::vector<double> elapsed_s;
  double median_s = 0.0;
  double speedup = 0.0;  // baseline median / this median

  friend bool operator==(const BenchRun&, const BenchRun&) = default;
};

struct BenchReport {
  double radius_deg = 0.0;
  std::vector<std::size_t> worker_counts;
  std::vector<BenchRun> runs;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Median; the mean of the two middle values for even sizes. Throws
/// DomainError on an empty input.
double median(std::vector<double> values);

/// Fills median_s and speedup from elapsed_s. The baseline is the run with
/// the fewest workers.
void finalize(BenchReport& report);

/// Runs run_xmatch `repeat` times per worker count (total coordinator
/// elapsed). Plans come from `strategy` over the leading histogram. The pair
/// sets of all runs must agree, otherwise DataError is thrown.
BenchReport bench_xmatch(const ZoneIndex& leading, const ZoneIndex& other, const MatchSpec& spec, Strategy strategy,
                         std::span<const std::size_t> worker_counts, std::size_t repeat);

void to_json(nlohmann::json& j, const BenchReport& report);
BenchReport bench_from_json(const nlohmann::json& j);

/// `worker_count,elapsed_s,speedup` rows, one per worker count.
void write_speedup_csv(std::ostream& out, const BenchReport& report);

std::string format_table(const BenchReport& report);

}  // namespace zonex
