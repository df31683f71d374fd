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

// zonex: generate, ingest, plan and query zone-indexed sky catalogs.
//
// Exit codes: 0 success, 1 usage error, 2 data error. Diagnostics and report
// tables go to stderr; machine-readable output goes to --out / --stats files
// (or stdout when --out is omitted).

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zonex/bench.hpp"
#include "zonex/catalog.hpp"
#include "zonex/error.hpp"
#include "zonex/executor.hpp"
#include "zonex/ingest.hpp"
#include "zonex/partition.hpp"
#include "zonex/query.hpp"
#include "zonex/result_io.hpp"
#include "zonex/synthetic.hpp"
#include "zonex/units.hpp"

namespace {

using namespace zonex;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

// Writes through `emit` to `path`, or to stdout when the path is empty.
void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  emit(out);
  out.flush();
  if (!out) throw DataError("error writing " + path);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  write_output(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

ZoneIndex open_index(const std::string& path, const std::string& zone_height) {
  std::vector<Rejection> rejected;
  auto index = load_index(path, ZoneConfig(parse_angle(zone_height)), &rejected);
  for (const auto& r : rejected) std::cerr << path << ": " << r.to_string() << '\n';
  return index;
}

struct CommonQueryOptions {
  std::size_t workers = 1;
  std::string strategy = "contiguous";
  std::string zone_height = "4arcmin";
  std::string out;
  std::string stats;
  bool quiet = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--workers", workers, "Parallel workers")->check(CLI::PositiveNumber);
    cmd.add_option("--strategy", strategy, "contiguous | round-robin | density");
    cmd.add_option("--zone-height", zone_height, "Zone height for CSV inputs (e.g. 4arcmin)");
    cmd.add_option("--out", out, "Result CSV (stdout if omitted)");
    cmd.add_option("--stats", stats, "Execution report JSON");
    cmd.add_flag("--quiet", quiet, "Do not print the report table");
  }

  void finish(const ExecutionReport& report) const {
    if (!stats.empty()) write_json(stats, report);
    if (!quiet) std::cerr << format_table(report);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Zone-partitioned cone search and cross-match for sky catalogs"};
  app.require_subcommand(1);
  std::function<void()> action;

  // gen ----------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Write a seeded synthetic catalog CSV");
  struct {
    std::uint64_t count = 0;
    std::string footprint = "full";
    std::uint64_t seed = 1;
    std::uint64_t first_id = 1;
    std::string bands = "r:5:15";
    std::string out;
  } gen_opts;
  gen->add_option("--count", gen_opts.count, "Number of objects")->required();
  gen->add_option("--footprint", gen_opts.footprint, "full | two-stripe | band:<lo>:<hi> | clustered:<patches>");
  gen->add_option("--seed", gen_opts.seed, "RNG seed");
  gen->add_option("--first-id", gen_opts.first_id, "Id of the first object");
  gen->add_option("--bands", gen_opts.bands, "Magnitude bands, name:lo:hi comma-separated");
  gen->add_option("--out", gen_opts.out, "Output CSV")->required();
  gen->callback([&] {
    action = [&] {
      SyntheticSpec spec{gen_opts.count, parse_footprint(gen_opts.footprint), parse_band_ranges(gen_opts.bands),
                         gen_opts.seed, gen_opts.first_id};
      write_synthetic_csv(spec, gen_opts.out);
    };
  });

  // ingest -------------------------------------------------------------------
  auto* ingest = app.add_subcommand("ingest", "Build a zone index snapshot from a catalog CSV");
  struct {
    std::string in;
    std::string zone_height = "4arcmin";
    std::string out;
    std::string rejects;
  } ingest_opts;
  ingest->add_option("--in", ingest_opts.in, "Catalog CSV")->required();
  ingest->add_option("--zone-height", ingest_opts.zone_height, "Zone height, e.g. 4arcmin");
  ingest->add_option("--out", ingest_opts.out, "Snapshot file")->required();
  ingest->add_option("--rejects", ingest_opts.rejects, "Write rejected rows here as 'line <n>: <reason>'");
  ingest->callback([&] {
    action = [&] {
      auto result = ingest_csv(ingest_opts.in, ZoneConfig(parse_angle(ingest_opts.zone_height)));
      for (const auto& r : result.rejected) std::cerr << ingest_opts.in << ": " << r.to_string() << '\n';
      if (!ingest_opts.rejects.empty()) {
        write_output(ingest_opts.rejects, [&](std::ostream& out) {
          for (const auto& r : result.rejected) out << r.to_string() << '\n';
        });
      }
      write_snapshot(result.index, ingest_opts.out);
      std::cerr << "indexed " << result.index.total_count() << " objects into " << result.index.slices().size()
                << " non-empty zones (" << result.index.config().zone_count() << " total), " << result.rejected.size()
                << " rejected\n";
    };
  });

  // plan ---------------------------------------------------------------------
  auto* plan_cmd = app.add_subcommand("plan", "Assign zones to workers and report the workload");
  struct {
    std::string index;
    std::string other;
    std::size_t workers = 1;
    std::string strategy = "density";
    std::string zone_height = "4arcmin";
    std::string out;
    bool report = false;
  } plan_opts;
  plan_cmd->add_option("--index", plan_opts.index, "Leading catalog (snapshot or CSV)")->required();
  plan_cmd->add_option("--other", plan_opts.other, "Second catalog: also report the plan with it leading");
  plan_cmd->add_option("--workers", plan_opts.workers, "Workers")->check(CLI::PositiveNumber);
  plan_cmd->add_option("--strategy", plan_opts.strategy, "contiguous | round-robin | density");
  plan_cmd->add_option("--zone-height", plan_opts.zone_height, "Zone height for CSV inputs");
  plan_cmd->add_option("--out", plan_opts.out, "Plan JSON (stdout if omitted)");
  plan_cmd->add_flag("--report", plan_opts.report, "Print the workload table");
  plan_cmd->callback([&] {
    action = [&] {
      const auto strategy = parse_strategy(plan_opts.strategy);
      const auto index = open_index(plan_opts.index, plan_opts.zone_height);
      const auto hist = histogram(index);
      const auto plan = make_plan(strategy, hist, plan_opts.workers);
      write_json(plan_opts.out, plan);
      if (plan_opts.report) {
        std::cerr << format_table(workload_report(plan, hist), "leading: " + index.catalog_name());
      }
      if (!plan_opts.other.empty()) {
        const auto other = open_index(plan_opts.other, plan_opts.zone_height);
        const auto other_hist = histogram(other);
        const auto other_plan = make_plan(strategy, other_hist, plan_opts.workers);
        std::cerr << format_table(workload_report(other_plan, other_hist), "leading: " + other.catalog_name());
      }
    };
  });

  // scan ---------------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "Full-scan magnitude filter");
  CommonQueryOptions scan_common;
  std::string scan_index;
  ScanFilter filter;
  std::vector<double> between{filter.lo, filter.hi};
  scan->add_option("--index", scan_index, "Catalog (snapshot or CSV)")->required();
  scan->add_option("--band", filter.band, "Magnitude band");
  scan->add_option("--between", between, "Inclusive magnitude bounds")->expected(2);
  scan_common.attach(*scan);
  scan->callback([&] {
    action = [&] {
      filter.lo = between.at(0);
      filter.hi = between.at(1);
      const auto strategy = parse_strategy(scan_common.strategy);
      const auto index = open_index(scan_index, scan_common.zone_height);
      const auto plan = make_plan(strategy, histogram(index), scan_common.workers);
      const auto exec = run_scan(index, filter, plan);
      write_output(scan_common.out, [&](std::ostream& out) { write_scan_csv(out, exec.results); });
      scan_common.finish(exec.report);
    };
  });

  // cone ---------------------------------------------------------------------
  auto* cone = app.add_subcommand("cone", "Cone search");
  CommonQueryOptions cone_common;
  std::string cone_index;
  std::string cone_ra;
  std::string cone_dec;
  std::string cone_radius = "1arcmin";
  cone->add_option("--index", cone_index, "Catalog (snapshot or CSV)")->required();
  cone->add_option("--ra", cone_ra, "Center ra, e.g. 180deg")->required();
  cone->add_option("--dec", cone_dec, "Center dec, e.g. -30.5deg")->required();
  cone->add_option("--radius", cone_radius, "Radius, e.g. 1arcmin");
  cone_common.attach(*cone);
  cone->callback([&] {
    action = [&] {
      const ConeQuery q{SkyPoint(parse_angle(cone_ra), parse_angle(cone_dec)), parse_angle(cone_radius)};
      const auto strategy = parse_strategy(cone_common.strategy);
      const auto index = open_index(cone_index, cone_common.zone_height);
      const auto plan = make_plan(strategy, histogram(index), cone_common.workers);
      const auto exec = run_cone(index, q, plan);
      write_output(cone_common.out, [&](std::ostream& out) { write_cone_csv(out, exec.results); });
      cone_common.finish(exec.report);
    };
  });

  // xmatch -------------------------------------------------------------------
  struct XmatchOptions {
    std::string leading;
    std::string other;
    std::string radius = "10arcsec";
    std::string max_radius = "10deg";
  };
  auto attach_xmatch = [](CLI::App& cmd, XmatchOptions& o) {
    cmd.add_option("--leading", o.leading, "Catalog whose zones are partitioned")->required();
    cmd.add_option("--other", o.other, "Catalog shared by every worker")->required();
    cmd.add_option("--radius", o.radius, "Match radius, e.g. 10arcsec");
    cmd.add_option("--max-radius", o.max_radius, "Sanity cap on the match radius");
  };
  auto make_spec = [](const XmatchOptions& o, const std::string& leading_name) {
    MatchSpec spec;
    spec.radius_deg = parse_angle(o.radius);
    spec.max_radius_deg = parse_angle(o.max_radius);
    spec.leading = leading_name;
    return spec;
  };

  auto* xmatch = app.add_subcommand("xmatch", "Radius cross-match of two catalogs");
  CommonQueryOptions xm_common;
  XmatchOptions xm;
  bool best_match = false;
  bool no_self = false;
  attach_xmatch(*xmatch, xm);
  xmatch->add_flag("--best-match", best_match, "Keep only the closest partner of each leading object");
  xmatch->add_flag("--no-self", no_self, "Drop pairs whose two ids are equal");
  xm_common.attach(*xmatch);
  xmatch->callback([&] {
    action = [&] {
      const auto strategy = parse_strategy(xm_common.strategy);
      const auto leading = open_index(xm.leading, xm_common.zone_height);
      const auto other = open_index(xm.other, xm_common.zone_height);
      auto spec = make_spec(xm, leading.catalog_name());
      spec.exclude_self = no_self;
      const auto lead_hist = histogram(leading);
      const auto plan = make_plan(strategy, lead_hist, xm_common.workers);
      auto exec = run_xmatch(leading, other, spec, plan);
      if (best_match) exec.results = best_matches(exec.results);
      write_output(xm_common.out, [&](std::ostream& out) { write_matches_csv(out, exec.results); });
      xm_common.finish(exec.report);
      if (!xm_common.quiet) {
        // Both possible leading choices, so the skew of each is visible.
        std::cerr << format_table(workload_report(plan, lead_hist), "workload with " + leading.catalog_name() + " leading");
        const auto other_hist = histogram(other);
        std::cerr << format_table(workload_report(make_plan(strategy, other_hist, xm_common.workers), other_hist),
                                  "workload with " + other.catalog_name() + " leading");
      }
    };
  });

  // bench xmatch -------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  auto* bench_xm = bench->add_subcommand("xmatch", "Cross-match scaling over worker counts");
  XmatchOptions bx;
  std::vector<std::size_t> bench_workers{1, 2, 4, 8};
  std::size_t repeat = 3;
  std::string bench_strategy = "density";
  std::string bench_zone_height = "4arcmin";
  std::string bench_out;
  std::string bench_plot;
  attach_xmatch(*bench_xm, bx);
  bench_xm->add_option("--workers", bench_workers, "Comma-separated worker counts")->delimiter(',')->check(CLI::PositiveNumber);
  bench_xm->add_option("--repeat", repeat, "Runs per worker count")->check(CLI::PositiveNumber);
  bench_xm->add_option("--strategy", bench_strategy, "contiguous | round-robin | density");
  bench_xm->add_option("--zone-height", bench_zone_height, "Zone height for CSV inputs");
  bench_xm->add_option("--out", bench_out, "Report JSON (stdout if omitted)");
  bench_xm->add_option("--plot", bench_plot, "Speedup CSV: worker_count,elapsed_s,speedup");
  bench_xm->callback([&] {
    action = [&] {
      const auto strategy = parse_strategy(bench_strategy);
      const auto leading = open_index(bx.leading, bench_zone_height);
      const auto other = open_index(bx.other, bench_zone_height);
      const auto report = bench_xmatch(leading, other, make_spec(bx, leading.catalog_name()), strategy, bench_workers, repeat);
      write_json(bench_out, report);
      if (!bench_plot.empty()) write_output(bench_plot, [&](std::ostream& out) { write_speedup_csv(out, report); });
      std::cerr << format_table(report);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (action) action();
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
