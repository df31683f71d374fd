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

#include "zonex/partition.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <queue>
#include <sstream>

#include "zonex/error.hpp"

namespace zonex {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::contiguous: return "contiguous";
    case Strategy::round_robin: return "round-robin";
    case Strategy::density: return "density";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "contiguous") return Strategy::contiguous;
  if (name == "round-robin" || name == "round_robin") return Strategy::round_robin;
  if (name == "density") return Strategy::density;
  throw DomainError("unknown partition strategy '" + std::string(name) + "'");
}

PartitionPlan::PartitionPlan(Strategy strategy, std::size_t worker_count, std::vector<std::uint32_t> assignment)
    : strategy_(strategy), worker_count_(worker_count), assignment_(std::move(assignment)) {
  if (worker_count_ < 1) throw DomainError("worker count must be at least 1");
  for (auto w : assignment_) {
    if (w >= worker_count_) throw DomainError("zone assigned to worker " + std::to_string(w) + " out of range");
  }
}

std::vector<ZoneId> PartitionPlan::zones_of(std::size_t worker) const {
  std::vector<ZoneId> zones;
  for (std::size_t z = 0; z < assignment_.size(); ++z) {
    if (assignment_[z] == worker) zones.push_back(ZoneId{static_cast<std::int32_t>(z)});
  }
  return zones;
}

namespace {

void require_workers(std::size_t worker_count) {
  if (worker_count < 1) throw DomainError("worker count must be at least 1");
}

void require_zones(std::int32_t zone_count) {
  if (zone_count < 1) throw DomainError("zone count must be at least 1");
}

}  // namespace

PartitionPlan plan_contiguous(std::int32_t zone_count, std::size_t worker_count) {
  require_workers(worker_count);
  require_zones(zone_count);
  const auto n = static_cast<std::size_t>(zone_count);
  const std::size_t base = n / worker_count;
  const std::size_t extra = n % worker_count;
  std::vector<std::uint32_t> assignment;
  assignment.reserve(n);
  for (std::size_t w = 0; w < worker_count; ++w) {
    const std::size_t run = base + (w < extra ? 1 : 0);
    assignment.insert(assignment.end(), run, static_cast<std::uint32_t>(w));
  }
  return PartitionPlan(Strategy::contiguous, worker_count, std::move(assignment));
}

PartitionPlan plan_round_robin(std::int32_t zone_count, std::size_t worker_count) {
  require_workers(worker_count);
  require_zones(zone_count);
  std::vector<std::uint32_t> assignment(static_cast<std::size_t>(zone_count));
  for (std::size_t z = 0; z < assignment.size(); ++z) assignment[z] = static_cast<std::uint32_t>(z % worker_count);
  return PartitionPlan(Strategy::round_robin, worker_count, std::move(assignment));
}

PartitionPlan plan_density(const ZoneHistogram& hist, std::size_t worker_count) {
  require_workers(worker_count);
  require_zones(hist.zone_count());
  std::vector<std::uint32_t> order(hist.counts.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return hist.counts[a] > hist.counts[b]; });

  // Min-heap on (load, worker index).
  using Slot = std::pair<std::uint64_t, std::uint32_t>;
  std::priority_queue<Slot, std::vector<Slot>, std::greater<>> lightest;
  for (std::uint32_t w = 0; w < worker_count; ++w) lightest.emplace(0, w);

  std::vector<std::uint32_t> assignment(hist.counts.size());
  for (auto z : order) {
    auto [load, w] = lightest.top();
    lightest.pop();
    assignment[z] = w;
    lightest.emplace(load + hist.counts[z], w);
  }
  return PartitionPlan(Strategy::density, worker_count, std::move(assignment));
}

PartitionPlan make_plan(Strategy strategy, const ZoneHistogram& hist, std::size_t worker_count) {
  switch (strategy) {
    case Strategy::contiguous: return plan_contiguous(hist.zone_count(), worker_count);
    case Strategy::round_robin: return plan_round_robin(hist.zone_count(), worker_count);
    case Strategy::density: return plan_density(hist, worker_count);
  }
  throw DomainError("unknown partition strategy");
}

WorkloadReport workload_report(const PartitionPlan& plan, const ZoneHistogram& hist) {
  if (plan.zone_count() != hist.zone_count()) {
    throw DataError("plan covers " + std::to_string(plan.zone_count()) + " zones, histogram has " +
                    std::to_string(hist.zone_count()));
  }
  WorkloadReport r;
  r.counts.assign(plan.worker_count(), 0);
  for (std::size_t z = 0; z < hist.counts.size(); ++z) r.counts[plan.assignment()[z]] += hist.counts[z];
  r.max_count = *std::max_element(r.counts.begin(), r.counts.end());
  const auto total = std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0});
  r.avg_count = static_cast<double>(total) / static_cast<double>(r.counts.size());
  r.imbalance = r.avg_count > 0.0 ? static_cast<double>(r.max_count) / r.avg_count : 1.0;
  return r;
}

std::string format_table(const WorkloadReport& report, std::string_view title) {
  std::ostringstream out;
  char line[128];
  if (!title.empty()) out << title << '\n';
  std::snprintf(line, sizeof(line), "%-8s %14s\n", "Worker", "Objects");
  out << line;
  for (std::size_t w = 0; w < report.counts.size(); ++w) {
    std::snprintf(line, sizeof(line), "%-8zu %14llu\n", w, static_cast<unsigned long long>(report.counts[w]));
    out << line;
  }
  std::snprintf(line, sizeof(line), "%-8s %14llu\n", "MAX", static_cast<unsigned long long>(report.max_count));
  out << line;
  std::snprintf(line, sizeof(line), "%-8s %14.1f\n", "AVG", report.avg_count);
  out << line;
  std::snprintf(line, sizeof(line), "%-8s %14.3f\n", "MAX/AVG", report.imbalance);
  out << line;
  return out.str();
}

void to_json(nlohmann::json& j, const PartitionPlan& plan) {
  j = nlohmann::json{{"strategy", to_string(plan.strategy())},
                     {"worker_count", plan.worker_count()},
                     {"zone_count", plan.zone_count()}};
  const auto& a = plan.assignment();
  if (plan.strategy() == Strategy::contiguous) {
    auto runs = nlohmann::json::array();
    std::size_t z = 0;
    for (std::size_t w = 0; w < plan.worker_count(); ++w) {
      const std::size_t start = z;
      while (z < a.size() && a[z] == w) ++z;
      // Empty runs (more workers than zones) are written as [start, start - 1].
      runs.push_back({static_cast<std::int64_t>(start), static_cast<std::int64_t>(z) - 1});
    }
    j["runs"] = std::move(runs);
  } else {
    j["assignment"] = a;
  }
}

PartitionPlan plan_from_json(const nlohmann::json& j) {
  try {
    const auto strategy = parse_strategy(j.at("strategy").get<std::string>());
    const auto workers = j.at("worker_count").get<std::size_t>();
    const auto zones = j.at("zone_count").get<std::int32_t>();
    std::vector<std::uint32_t> assignment;
    if (j.contains("runs")) {
      const auto& runs = j.at("runs");
      if (runs.size() != workers) throw DataError("plan JSON: runs do not match worker_count");
      assignment.assign(static_cast<std::size_t>(zones), 0);
      std::int64_t expected = 0;
      for (std::size_t w = 0; w < runs.size(); ++w) {
        const auto first = runs[w].at(0).get<std::int64_t>();
        const auto last = runs[w].at(1).get<std::int64_t>();
        if (first != expected || last < first - 1 || last >= zones) throw DataError("plan JSON: runs are not contiguous");
        for (auto z = first; z <= last; ++z) assignment[static_cast<std::size_t>(z)] = static_cast<std::uint32_t>(w);
        expected = last + 1;
      }
      if (expected != zones) throw DataError("plan JSON: runs do not cover every zone");
    } else {
      assignment = j.at("assignment").get<std::vector<std::uint32_t>>();
      if (assignment.size() != static_cast<std::size_t>(zones)) throw DataError("plan JSON: assignment size mismatch");
    }
    return PartitionPlan(strategy, workers, std::move(assignment));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("plan JSON: ") + e.what());
  }
}

void to_json(nlohmann::json& j, const WorkloadReport& report) {
  j = nlohmann::json{{"counts", report.counts},
                     {"max_count", report.max_count},
                     {"avg_count", report.avg_count},
                     {"imbalance", report.imbalance}};
}

WorkloadReport workload_from_json(const nlohmann::json& j) {
  try {
    WorkloadReport r;
    r.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    r.max_count = j.at("max_count").get<std::uint64_t>();
    r.avg_count = j.at("avg_count").get<double>();
    r.imbalance = j.at("imbalance").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("workload JSON: ") + e.what());
  }
}

}  // namespace zonex
