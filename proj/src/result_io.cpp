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

#include "zonex/result_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "zonex/error.hpp"
#include "zonex/ingest.hpp"

namespace zonex {

namespace {

std::string sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

template <class T>
T parse_field(std::string_view s, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("line " + std::to_string(line) + ": bad field '" + std::string(s) + "'");
  }
  return v;
}

// Reads rows of exactly `arity` comma-separated fields after checking the header.
template <class Row, class Make>
std::vector<Row> read_rows(std::istream& in, std::string_view header, std::size_t arity, Make make) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty result file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw DataError("expected header '" + std::string(header) + "'");
  std::vector<Row> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != arity) throw DataError("line " + std::to_string(line_no) + ": wrong field count");
    rows.push_back(make(fields, line_no));
  }
  return rows;
}

}  // namespace

void write_matches_csv(std::ostream& out, std::span<const MatchPair> pairs) {
  out << "leading_id,other_id,separation_deg\n";
  for (const auto& p : pairs) out << p.leading_id << ',' << p.other_id << ',' << sig12(p.separation_deg) << '\n';
}

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows) {
  out << "id,mag\n";
  for (const auto& r : rows) out << r.id << ',' << format_shortest(r.mag) << '\n';
}

void write_cone_csv(std::ostream& out, std::span<const ConeRow> rows) {
  out << "id,separation_deg\n";
  for (const auto& r : rows) out << r.id << ',' << sig12(r.separation_deg) << '\n';
}

std::vector<MatchPair> read_matches_csv(std::istream& in) {
  return read_rows<MatchPair>(in, "leading_id,other_id,separation_deg", 3, [](const auto& f, std::size_t n) {
    return MatchPair{parse_field<ObjectId>(f[0], n), parse_field<ObjectId>(f[1], n), parse_field<double>(f[2], n)};
  });
}

std::vector<ScanRow> read_scan_csv(std::istream& in) {
  return read_rows<ScanRow>(in, "id,mag", 2, [](const auto& f, std::size_t n) {
    return ScanRow{parse_field<ObjectId>(f[0], n), parse_field<double>(f[1], n)};
  });
}

std::vector<ConeRow> read_cone_csv(std::istream& in) {
  return read_rows<ConeRow>(in, "id,separation_deg", 2, [](const auto& f, std::size_t n) {
    return ConeRow{parse_field<ObjectId>(f[0], n), parse_field<double>(f[1], n)};
  });
}

}  // namespace zonex
