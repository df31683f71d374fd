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

#include "zonex/executor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#if defined(__unix__) || defined(__APPLE__)
#include <time.h>
#define ZONEX_HAVE_THREAD_CPUTIME 1
#endif

#include "zonex/error.hpp"

namespace zonex {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::optional<double> thread_cpu_seconds() {
#ifdef ZONEX_HAVE_THREAD_CPUTIME
  timespec ts{};
  if (clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts) == 0) return static_cast<double>(ts.tv_sec) + 1e-9 * ts.tv_nsec;
#endif
  return std::nullopt;
}

void require_plan_fits(const PartitionPlan& plan, const ZoneIndex& index) {
  if (plan.zone_count() != index.config().zone_count()) {
    throw DataError("partition plan covers " + std::to_string(plan.zone_count()) + " zones but catalog '" +
                    index.catalog_name() + "' has " + std::to_string(index.config().zone_count()));
  }
}

// What one worker produced.
template <class Row>
struct WorkerOutput {
  std::vector<Row> rows;
  std::uint64_t rows_scanned = 0;
};

// Runs `work(worker)` on one thread per worker, then merges. `work` returns
// a WorkerOutput<Row>.
template <class Row, class Work>
Execution<Row> fan_out(std::string query, const PartitionPlan& plan, double row_bytes, Work&& work) {
  const auto start = Clock::now();
  const std::size_t n = plan.worker_count();
  std::vector<WorkerOutput<Row>> outputs(n);
  std::vector<WorkerStats> stats(n);
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> threads;
    threads.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
      threads.emplace_back([&, w] {
        const auto t0 = Clock::now();
        const auto cpu0 = thread_cpu_seconds();
        try {
          outputs[w] = work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
        auto& s = stats[w];
        s.worker = w;
        s.elapsed_s = seconds_since(t0);
        if (const auto cpu1 = thread_cpu_seconds(); cpu0 && cpu1) s.cpu_s = std::max(0.0, *cpu1 - *cpu0);
        s.rows_scanned = outputs[w].rows_scanned;
        s.rows_returned = outputs[w].rows.size();
        s.bytes_read = static_cast<std::uint64_t>(std::llround(static_cast<double>(s.rows_scanned) * row_bytes));
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Execution<Row> exec;
  std::size_t total = 0;
  for (const auto& o : outputs) total += o.rows.size();
  exec.results.reserve(total);
  for (auto& o : outputs) exec.results.insert(exec.results.end(), o.rows.begin(), o.rows.end());
  canonical_sort(exec.results);

  auto& r = exec.report;
  r.query = std::move(query);
  r.strategy = std::string(to_string(plan.strategy()));
  r.worker_count = n;
  const auto agg = aggregate(stats);
  r.max = agg.max;
  r.avg = agg.avg;
  r.workers = std::move(stats);
  r.total_elapsed_s = seconds_since(start);
  return exec;
}

}  // namespace

Aggregates aggregate(std::span<const WorkerStats> stats) {
  if (stats.empty()) throw DomainError("cannot aggregate zero workers");
  Aggregates a;
  const bool all_cpu = std::all_of(stats.begin(), stats.end(), [](const WorkerStats& s) { return s.cpu_s.has_value(); });
  double cpu_max = 0.0;
  double cpu_sum = 0.0;
  for (const auto& s : stats) {
    a.max.elapsed_s = std::max(a.max.elapsed_s, s.elapsed_s);
    a.max.rows_scanned = std::max(a.max.rows_scanned, static_cast<double>(s.rows_scanned));
    a.max.rows_returned = std::max(a.max.rows_returned, static_cast<double>(s.rows_returned));
    a.max.bytes_read = std::max(a.max.bytes_read, static_cast<double>(s.bytes_read));
    a.avg.elapsed_s += s.elapsed_s;
    a.avg.rows_scanned += static_cast<double>(s.rows_scanned);
    a.avg.rows_returned += static_cast<double>(s.rows_returned);
    a.avg.bytes_read += static_cast<double>(s.bytes_read);
    if (all_cpu) {
      cpu_max = std::max(cpu_max, *s.cpu_s);
      cpu_sum += *s.cpu_s;
    }
  }
  const auto n = static_cast<double>(stats.size());
  a.avg.elapsed_s /= n;
  a.avg.rows_scanned /= n;
  a.avg.rows_returned /= n;
  a.avg.bytes_read /= n;
  if (all_cpu) {
    a.max.cpu_s = cpu_max;
    a.avg.cpu_s = cpu_sum / n;
  }
  return a;
}

Execution<ScanRow> run_scan(const ZoneIndex& index, const ScanFilter& filter, const PartitionPlan& plan) {
  require_plan_fits(plan, index);
  index.band_column(filter.band);  // unknown band fails before any thread starts
  return fan_out<ScanRow>("scan", plan, index.row_bytes(), [&](std::size_t w) {
    const auto zones = plan.zones_of(w);
    const auto slices = slices_for(index, zones);
    auto out = scan_filter(index, slices, filter);
    return WorkerOutput<ScanRow>{std::move(out.rows), out.rows_scanned};
  });
}

Execution<ConeRow> run_cone(const ZoneIndex& index, const ConeQuery& q, const PartitionPlan& plan) {
  require_plan_fits(plan, index);
  return fan_out<ConeRow>("cone", plan, index.row_bytes(), [&](std::size_t w) {
    auto out = cone_search(index, q, [&](ZoneId z) { return plan.worker_of(z) == w; });
    return WorkerOutput<ConeRow>{std::move(out.rows), out.rows_scanned};
  });
}

Execution<MatchPair> run_xmatch(const ZoneIndex& leading, const ZoneIndex& other, const MatchSpec& spec,
                                const PartitionPlan& plan) {
  require_plan_fits(plan, leading);
  if (!(leading.config() == other.config())) {
    throw DataError("catalogs '" + leading.catalog_name() + "' and '" + other.catalog_name() +
                    "' use different zone heights");
  }
  return fan_out<MatchPair>("xmatch", plan, leading.row_bytes(), [&](std::size_t w) {
    const auto zones = plan.zones_of(w);
    const auto slices = slices_for(leading, zones);
    auto out = zone_crossmatch(leading, slices, other, spec);
    return WorkerOutput<MatchPair>{std::move(out.pairs), out.rows_scanned};
  });
}

double elapsed_imbalance(const ExecutionReport& report) {
  return report.avg.elapsed_s > 0.0 ? report.max.elapsed_s / report.avg.elapsed_s : 1.0;
}

namespace {

nlohmann::json optional_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

std::optional<double> optional_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

nlohmann::json row_json(const AggregateRow& r) {
  return {{"elapsed_s", r.elapsed_s},
          {"cpu_s", optional_json(r.cpu_s)},
          {"rows_scanned", r.rows_scanned},
          {"rows_returned", r.rows_returned},
          {"bytes_read", r.bytes_read}};
}

AggregateRow row_from(const nlohmann::json& j) {
  AggregateRow r;
  r.elapsed_s = j.at("elapsed_s").get<double>();
  r.cpu_s = optional_from(j.at("cpu_s"));
  r.rows_scanned = j.at("rows_scanned").get<double>();
  r.rows_returned = j.at("rows_returned").get<double>();
  r.bytes_read = j.at("bytes_read").get<double>();
  return r;
}

}  // namespace

void to_json(nlohmann::json& j, const ExecutionReport& report) {
  auto workers = nlohmann::json::array();
  for (const auto& s : report.workers) {
    workers.push_back({{"worker", s.worker},
                       {"elapsed_s", s.elapsed_s},
                       {"cpu_s", optional_json(s.cpu_s)},
                       {"rows_scanned", s.rows_scanned},
                       {"rows_returned", s.rows_returned},
                       {"bytes_read", s.bytes_read}});
  }
  j = nlohmann::json{{"query", report.query},
                     {"strategy", report.strategy},
                     {"worker_count", report.worker_count},
                     {"workers", std::move(workers)},
                     {"max", row_json(report.max)},
                     {"avg", row_json(report.avg)},
                     {"total_elapsed_s", report.total_elapsed_s}};
}

ExecutionReport report_from_json(const nlohmann::json& j) {
  try {
    ExecutionReport r;
    r.query = j.at("query").get<std::string>();
    r.strategy = j.at("strategy").get<std::string>();
    r.worker_count = j.at("worker_count").get<std::size_t>();
    for (const auto& w : j.at("workers")) {
      WorkerStats s;
      s.worker = w.at("worker").get<std::size_t>();
      s.elapsed_s = w.at("elapsed_s").get<double>();
      s.cpu_s = optional_from(w.at("cpu_s"));
      s.rows_scanned = w.at("rows_scanned").get<std::uint64_t>();
      s.rows_returned = w.at("rows_returned").get<std::uint64_t>();
      s.bytes_read = w.at("bytes_read").get<std::uint64_t>();
      r.workers.push_back(s);
    }
    r.max = row_from(j.at("max"));
    r.avg = row_from(j.at("avg"));
    r.total_elapsed_s = j.at("total_elapsed_s").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("execution report JSON: ") + e.what());
  }
}

std::string format_table(const ExecutionReport& report) {
  const bool cpu = report.max.cpu_s.has_value();
  std::ostringstream out;
  char line[160];
  auto cpu_cell = [&](const std::optional<double>& v) {
    char cell[32];
    std::snprintf(cell, sizeof(cell), "%10.3f", v.value_or(0.0));
    return std::string(cpu ? cell : "");
  };
  std::snprintf(line, sizeof(line), "%-8s %12s%s %14s %14s %14s\n", "Worker", "Elapsed (s)", cpu ? "    CPU (s)" : "",
                "Rows scanned", "Rows returned", "Bytes read");
  out << report.query << " on " << report.worker_count << " worker(s), strategy " << report.strategy << '\n' << line;
  for (const auto& s : report.workers) {
    std::snprintf(line, sizeof(line), "%-8zu %12.4f%s%s %14llu %14llu %14llu\n", s.worker, s.elapsed_s, cpu ? " " : "",
                  cpu_cell(s.cpu_s).c_str(), static_cast<unsigned long long>(s.rows_scanned),
                  static_cast<unsigned long long>(s.rows_returned), static_cast<unsigned long long>(s.bytes_read));
    out << line;
  }
  for (const auto& [label, row] : {std::pair{"MAX", &report.max}, std::pair{"AVG", &report.avg}}) {
    std::snprintf(line, sizeof(line), "%-8s %12.4f%s%s %14.1f %14.1f %14.1f\n", label, row->elapsed_s, cpu ? " " : "",
                  cpu_cell(row->cpu_s).c_str(), row->rows_scanned, row->rows_returned, row->bytes_read);
    out << line;
  }
  std::snprintf(line, sizeof(line), "%-8s %12.4f\n", "TOTAL", report.total_elapsed_s);
  out << line;
  return out.str();
}

}  // namespace zonex
