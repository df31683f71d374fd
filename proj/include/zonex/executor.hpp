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
// Fans a query out over the workers of a PartitionPlan. Each worker is an
// in-process thread that reads only its own zones of the leading catalog
// (and, for cross-matches, the whole shared other catalog). Results are
// concatenated and put in canonical order, so they do not depend on the
// worker count or strategy.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zonex/catalog.hpp"
#include "zonex/partition.hpp"
#include "zonex/query.hpp"

namespace zonex {

struct WorkerStats {
  std::size_t worker = 0;
  double elapsed_s = 0.0;
  std::optional<double> cpu_s;  // thread CPU time where the platform reports it
  std::uint64_t rows_scanned = 0;
  std::uint64_t rows_returned = 0;
  std::uint64_t bytes_read = 0;

  friend bool operator==(const WorkerStats&, const WorkerStats&) = default;
};

/// A MAX or AVG row over workers.
struct AggregateRow {
  double elapsed_s = 0.0;
  std::optional<double> cpu_s;
  double rows_scanned = 0.0;
  double rows_returned = 0.0;
  double bytes_read = 0.0;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct Aggregates {
  AggregateRow max;
  AggregateRow avg;
};

/// Component-wise maximum and arithmetic mean. cpu_s is aggregated only when
/// every worker reports it. Throws DomainError on an empty input.
Aggregates aggregate(std::span<const WorkerStats> stats);

struct ExecutionReport {
  std::string query;     // "scan", "cone" or "xmatch"
  std::string strategy;  // partition strategy name
  std::size_t worker_count = 0;
  std::vector<WorkerStats> workers;
  AggregateRow max;
  AggregateRow avg;
  double total_elapsed_s = 0.0;  // coordinator wall clock, merge included

  friend bool operator==(const ExecutionReport&, const ExecutionReport&) = default;
};

template <class Row>
struct Execution {
  std::vector<Row> results;
  ExecutionReport report;
};

/// Throws DataError when the plan and the index disagree on the zone count.
Execution<ScanRow> run_scan(const ZoneIndex& index, const ScanFilter& filter, const PartitionPlan& plan);
Execution<ConeRow> run_cone(const ZoneIndex& index, const ConeQuery& q, const PartitionPlan& plan);
Execution<MatchPair> run_xmatch(const ZoneIndex& leading, const ZoneIndex& other, const MatchSpec& spec,
                                const PartitionPlan& plan);

/// Max worker elapsed divided by mean worker elapsed (1 when the mean is 0).
double elapsed_imbalance(const ExecutionReport& report);

void to_json(nlohmann::json& j, const ExecutionReport& report);
ExecutionReport report_from_json(const nlohmann::json& j);

/// Aligned table in the layout of a per-server timing table: one row per
/// worker, then MAX and AVG rows.
std::string format_table(const ExecutionReport& report);

}  // namespace zonex
