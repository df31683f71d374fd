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
// Assignment of zones to parallel workers and the workload skew it implies.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zonex/catalog.hpp"
#include "zonex/sphere.hpp"

namespace zonex {

enum class Strategy { contiguous, round_robin, density };

/// "contiguous", "round-robin", "density".
std::string_view to_string(Strategy s);
/// Accepts the names above, plus "round_robin". Throws DomainError otherwise.
Strategy parse_strategy(std::string_view name);

/// Total map from zone to worker.
class PartitionPlan {
 public:
  /// Throws DomainError if worker_count is 0 or any entry is out of range.
  PartitionPlan(Strategy strategy, std::size_t worker_count, std::vector<std::uint32_t> assignment);

  Strategy strategy() const { return strategy_; }
  std::size_t worker_count() const { return worker_count_; }
  std::int32_t zone_count() const { return static_cast<std::int32_t>(assignment_.size()); }
  const std::vector<std::uint32_t>& assignment() const { return assignment_; }

  std::size_t worker_of(ZoneId z) const { return assignment_.at(static_cast<std::size_t>(z.index)); }
  std::vector<ZoneId> zones_of(std::size_t worker) const;

  friend bool operator==(const PartitionPlan&, const PartitionPlan&) = default;

 private:
  Strategy strategy_;
  std::size_t worker_count_;
  std::vector<std::uint32_t> assignment_;
};

/// Consecutive runs of zones, run sizes differing by at most one; the first
/// zone_count % worker_count workers get the longer runs.
PartitionPlan plan_contiguous(std::int32_t zone_count, std::size_t worker_count);

/// zone z -> worker z mod worker_count.
PartitionPlan plan_round_robin(std::int32_t zone_count, std::size_t worker_count);

/// Longest-processing-time greedy: zones by descending count (lower zone id
/// first on ties), each to the currently lightest worker (lower index first).
PartitionPlan plan_density(const ZoneHistogram& hist, std::size_t worker_count);

PartitionPlan make_plan(Strategy strategy, const ZoneHistogram& hist, std::size_t worker_count);

struct WorkloadReport {
  std::vector<std::uint64_t> counts;  // objects per worker
  std::uint64_t max_count = 0;
  double avg_count = 0.0;
  double imbalance = 1.0;  // max / avg, 1 when avg is 0
};

WorkloadReport workload_report(const PartitionPlan& plan, const ZoneHistogram& hist);

/// Aligned text table: one row per worker, then MAX / AVG / imbalance.
std::string format_table(const WorkloadReport& report, std::string_view title = {});

// JSON: {"strategy", "worker_count", "zone_count", and either "runs"
// ([[first, last], ...] per worker, contiguous only) or "assignment"}.
void to_json(nlohmann::json& j, const PartitionPlan& plan);
PartitionPlan plan_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const WorkloadReport& report);
WorkloadReport workload_from_json(const nlohmann::json& j);

}  // namespace zonex
