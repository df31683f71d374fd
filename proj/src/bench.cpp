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

#include "zonex/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "zonex/error.hpp"
#include "zonex/ingest.hpp"

namespace zonex {

double median(std::vector<double> values) {
  if (values.empty()) throw DomainError("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

void finalize(BenchReport& report) {
  if (report.runs.empty()) return;
  for (auto& run : report.runs) run.median_s = median(run.elapsed_s);
  const auto baseline = std::min_element(report.runs.begin(), report.runs.end(),
                                         [](const BenchRun& a, const BenchRun& b) { return a.workers < b.workers; });
  const double base = baseline->median_s;
  for (auto& run : report.runs) run.speedup = run.median_s > 0.0 ? base / run.median_s : 0.0;
}

BenchReport bench_xmatch(const ZoneIndex& leading, const ZoneIndex& other, const MatchSpec& spec, Strategy strategy,
                         std::span<const std::size_t> worker_counts, std::size_t repeat) {
  if (worker_counts.empty()) throw DomainError("bench needs at least one worker count");
  if (repeat < 1) throw DomainError("bench needs --repeat >= 1");
  const auto hist = histogram(leading);
  BenchReport report;
  report.radius_deg = spec.radius_deg;
  report.worker_counts.assign(worker_counts.begin(), worker_counts.end());

  std::vector<MatchPair> reference;
  bool have_reference = false;
  for (const auto workers : worker_counts) {
    const auto plan = make_plan(strategy, hist, workers);
    BenchRun run;
    run.workers = workers;
    for (std::size_t i = 0; i < repeat; ++i) {
      auto exec = run_xmatch(leading, other, spec, plan);
      run.elapsed_s.push_back(exec.report.total_elapsed_s);
      if (!have_reference) {
        reference = std::move(exec.results);
        have_reference = true;
      } else if (exec.results != reference) {
        throw DataError("cross-match result changed with " + std::to_string(workers) + " workers");
      }
    }
    report.runs.push_back(std::move(run));
  }
  finalize(report);
  return report;
}

void to_json(nlohmann::json& j, const BenchReport& report) {
  auto runs = nlohmann::json::array();
  for (const auto& r : report.runs) {
    runs.push_back({{"workers", r.workers}, {"elapsed_s", r.elapsed_s}, {"median_s", r.median_s}, {"speedup", r.speedup}});
  }
  j = nlohmann::json{{"radius", report.radius_deg}, {"worker_counts", report.worker_counts}, {"runs", std::move(runs)}};
}

BenchReport bench_from_json(const nlohmann::json& j) {
  try {
    BenchReport report;
    report.radius_deg = j.at("radius").get<double>();
    report.worker_counts = j.at("worker_counts").get<std::vector<std::size_t>>();
    for (const auto& r : j.at("runs")) {
      report.runs.push_back(BenchRun{r.at("workers").get<std::size_t>(), r.at("elapsed_s").get<std::vector<double>>(),
                                     r.at("median_s").get<double>(), r.at("speedup").get<double>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bench JSON: ") + e.what());
  }
}

void write_speedup_csv(std::ostream& out, const BenchReport& report) {
  out << "worker_count,elapsed_s,speedup\n";
  for (const auto& r : report.runs) out << r.workers << ',' << format_shortest(r.median_s) << ',' << format_shortest(r.speedup) << '\n';
}

std::string format_table(const BenchReport& report) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof(line), "radius %.6g deg\n%-8s %8s %14s %10s\n", report.radius_deg, "Workers", "Repeats",
                "Median (s)", "Speedup");
  out << line;
  for (const auto& r : report.runs) {
    std::snprintf(line, sizeof(line), "%-8zu %8zu %14.4f %10.3f\n", r.workers, r.elapsed_s.size(), r.median_s, r.speedup);
    out << line;
  }
  return out.str();
}

}  // namespace zonex
