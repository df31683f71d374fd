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

#include "zonex/ingest.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "zonex/error.hpp"

namespace zonex {

std::string Rejection::to_string() const { return "line " + std::to_string(line) + ": " + reason; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

bool parse_id(std::string_view s, ObjectId& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError("error reading " + path.string());
  return std::move(buf).str();
}

}  // namespace

IngestResult ingest_csv_text(std::string_view text, std::string catalog_name, const ZoneConfig& cfg,
                             std::span<const std::string> expected_bands) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const std::size_t text_bytes = text.size();

  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& line) {
    if (text.empty()) return false;
    const auto nl = text.find('\n');
    line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    return true;
  };

  std::string_view line;
  if (!next_line(line) || trim(line).empty()) throw DataError(catalog_name + ": missing header row");
  const auto header = split_fields(line);
  if (header.size() < 3 || header[0] != "id" || header[1] != "ra" || header[2] != "dec") {
    throw DataError(catalog_name + ": header must start with id,ra,dec");
  }
  std::vector<std::string> bands;
  for (std::size_t i = 3; i < header.size(); ++i) {
    if (header[i].empty()) throw DataError(catalog_name + ": empty band name in header column " + std::to_string(i + 1));
    for (const auto& b : bands) {
      if (b == header[i]) throw DataError(catalog_name + ": duplicate band " + quoted(header[i]) + " in header");
    }
    bands.emplace_back(header[i]);
  }
  if (!expected_bands.empty() && !std::equal(bands.begin(), bands.end(), expected_bands.begin(), expected_bands.end())) {
    throw DataError(catalog_name + ": header bands do not match the requested schema");
  }

  std::vector<CatalogObject> objects;
  std::vector<Rejection> rejected;
  std::unordered_map<ObjectId, std::size_t> first_line;
  std::size_t data_rows = 0;

  while (next_line(line)) {
    if (trim(line).empty()) continue;
    ++data_rows;
    const auto fields = split_fields(line);
    auto reject = [&](std::string reason) { rejected.push_back({line_no, std::move(reason)}); };

    if (fields.size() != header.size()) {
      reject("expected " + std::to_string(header.size()) + " fields, found " + std::to_string(fields.size()));
      continue;
    }
    ObjectId id = 0;
    double ra = 0.0;
    double dec = 0.0;
    if (!parse_id(fields[0], id)) {
      reject("unparseable id " + quoted(fields[0]));
      continue;
    }
    if (!parse_double(fields[1], ra)) {
      reject("unparseable ra " + quoted(fields[1]));
      continue;
    }
    if (!parse_double(fields[2], dec)) {
      reject("unparseable dec " + quoted(fields[2]));
      continue;
    }
    if (dec < -90.0 || dec > 90.0) {
      reject("dec " + std::string(fields[2]) + " outside [-90, 90]");
      continue;
    }
    CatalogObject obj{id, SkyPoint(ra, dec), {}};
    obj.mags.reserve(bands.size());
    bool ok = true;
    for (std::size_t b = 0; b < bands.size(); ++b) {
      const auto f = fields[3 + b];
      if (f.empty()) {
        obj.mags.emplace_back(std::nullopt);
        continue;
      }
      double v = 0.0;
      if (!parse_double(f, v)) {
        reject("unparseable " + bands[b] + " magnitude " + quoted(f));
        ok = false;
        break;
      }
      obj.mags.emplace_back(v);
    }
    if (!ok) continue;
    if (const auto [it, fresh] = first_line.emplace(id, line_no); !fresh) {
      reject("duplicate id " + std::to_string(id) + " (first on line " + std::to_string(it->second) + ")");
      continue;
    }
    objects.push_back(std::move(obj));
  }

  if (static_cast<double>(rejected.size()) > kMaxRejectedFraction * static_cast<double>(data_rows)) {
    throw DataError(catalog_name + ": " + std::to_string(rejected.size()) + " of " + std::to_string(data_rows) +
                    " rows rejected (limit 1%); first " + rejected.front().to_string());
  }

  const double row_bytes = data_rows > 0 ? static_cast<double>(text_bytes) / static_cast<double>(data_rows) : 0.0;
  return IngestResult{ZoneIndex::build(std::move(catalog_name), std::move(bands), cfg, std::move(objects), row_bytes),
                      std::move(rejected), data_rows};
}

IngestResult ingest_csv(const std::filesystem::path& path, const ZoneConfig& cfg,
                        std::span<const std::string> expected_bands) {
  const std::string text = read_file(path);
  return ingest_csv_text(text, path.stem().string(), cfg, expected_bands);
}

std::string format_shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void write_catalog_csv(std::ostream& out, std::span<const std::string> bands, std::span<const CatalogObject> objects) {
  out << "id,ra,dec";
  for (const auto& b : bands) out << ',' << b;
  out << '\n';
  for (const auto& o : objects) {
    out << o.id << ',' << format_shortest(o.pos.ra()) << ',' << format_shortest(o.pos.dec());
    for (const auto& m : o.mags) {
      out << ',';
      if (m) out << format_shortest(*m);
    }
    out << '\n';
  }
}

void write_catalog_csv(const std::filesystem::path& path, std::span<const std::string> bands,
                       std::span<const CatalogObject> objects) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  write_catalog_csv(out, bands, objects);
  out.flush();
  if (!out) throw DataError("error writing " + path.string());
}

// Snapshot layout: magic, version, endianness probe, zone height, row
// bytes, name, bands, object count, then per object id, ra, dec and one
// (present flag, value) pair per band.
namespace {

constexpr char kMagic[8] = {'Z', 'O', 'N', 'E', 'X', 'I', 'D', 'X'};
constexpr std::uint32_t kByteOrderProbe = 0x01020304;

class BinaryWriter {
 public:
  explicit BinaryWriter(std::ostream& out) : out_(out) {}
  template <class T>
  void put(const T& v) {
    out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }
  void put_string(const std::string& s) {
    put(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }

 private:
  std::ostream& out_;
};

class BinaryReader {
 public:
  BinaryReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}
  template <class T>
  T get() {
    T v{};
    in_.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in_) throw DataError(source_ + ": truncated snapshot");
    return v;
  }
  std::string get_string() {
    const auto n = get<std::uint32_t>();
    std::string s(n, '\0');
    in_.read(s.data(), n);
    if (!in_) throw DataError(source_ + ": truncated snapshot");
    return s;
  }

 private:
  std::istream& in_;
  std::string source_;
};

}  // namespace

void write_snapshot(const ZoneIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  BinaryWriter w(out);
  out.write(kMagic, sizeof(kMagic));
  w.put(kSnapshotVersion);
  w.put(kByteOrderProbe);
  w.put(index.config().height_deg());
  w.put(index.row_bytes());
  w.put_string(index.catalog_name());
  w.put(static_cast<std::uint32_t>(index.bands().size()));
  for (const auto& b : index.bands()) w.put_string(b);
  w.put(static_cast<std::uint64_t>(index.total_count()));
  for (const auto& slice : index.slices()) {
    for (const auto& o : slice.objects()) {
      w.put(o.id);
      w.put(o.pos.ra());
      w.put(o.pos.dec());
      for (const auto& m : o.mags) {
        w.put(static_cast<std::uint8_t>(m.has_value()));
        w.put(m.value_or(0.0));
      }
    }
  }
  out.flush();
  if (!out) throw DataError("error writing " + path.string());
}

bool is_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[sizeof(kMagic)] = {};
  in.read(magic, sizeof(magic));
  return in && std::memcmp(magic, kMagic, sizeof(kMagic)) == 0;
}

ZoneIndex read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  char magic[sizeof(kMagic)] = {};
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) throw DataError(path.string() + ": not a zone index snapshot");
  BinaryReader r(in, path.string());
  if (const auto v = r.get<std::uint32_t>(); v != kSnapshotVersion) {
    throw DataError(path.string() + ": unsupported snapshot version " + std::to_string(v));
  }
  if (r.get<std::uint32_t>() != kByteOrderProbe) throw DataError(path.string() + ": snapshot has foreign byte order");
  const auto height = r.get<double>();
  const auto row_bytes = r.get<double>();
  auto name = r.get_string();
  std::vector<std::string> bands(r.get<std::uint32_t>());
  for (auto& b : bands) b = r.get_string();
  const auto count = r.get<std::uint64_t>();
  std::vector<CatalogObject> objects;
  objects.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    CatalogObject o;
    o.id = r.get<ObjectId>();
    const auto ra = r.get<double>();
    const auto dec = r.get<double>();
    try {
      o.pos = SkyPoint(ra, dec);
    } catch (const DomainError& e) {
      throw DataError(path.string() + ": corrupt position in snapshot: " + e.what());
    }
    o.mags.reserve(bands.size());
    for (std::size_t b = 0; b < bands.size(); ++b) {
      const bool present = r.get<std::uint8_t>() != 0;
      const auto value = r.get<double>();
      o.mags.push_back(present ? Magnitude(value) : std::nullopt);
    }
    objects.push_back(std::move(o));
  }
  return ZoneIndex::build(std::move(name), std::move(bands), ZoneConfig(height), std::move(objects), row_bytes);
}

ZoneIndex load_index(const std::filesystem::path& path, const ZoneConfig& cfg, std::vector<Rejection>* rejected) {
  if (is_snapshot(path)) return read_snapshot(path);
  auto result = ingest_csv(path, cfg);
  if (rejected) rejected->insert(rejected->end(), result.rejected.begin(), result.rejected.end());
  return std::move(result.index);
}

}  // namespace zonex
