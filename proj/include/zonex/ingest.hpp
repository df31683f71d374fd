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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zonex/catalog.hpp"

namespace zonex {

struct Rejection {
  std::size_t line;  // 1-based, header is line 1
  std::string reason;

  /// `line <n>: <reason>`
  std::string to_string() const;
};

struct IngestResult {
  ZoneIndex index;
  std::vector<Rejection> rejected;
  std::size_t data_rows = 0;  // accepted + rejected, blank lines excluded
};

/// Largest tolerated fraction of rejected rows before ingest fails.
inline constexpr double kMaxRejectedFraction = 0.01;

/// Reads `id,ra,dec,<band...>` CSV (LF or CRLF). Bad rows are rejected and
/// reported; more than 1% rejected rows, an unreadable file or a malformed
/// header throw DataError. A non-empty `expected_bands` must match the
/// header's band columns exactly.
IngestResult ingest_csv(const std::filesystem::path& path, const ZoneConfig& cfg,
                        std::span<const std::string> expected_bands = {});

/// Same, from an in-memory buffer; `catalog_name` names the resulting index.
IngestResult ingest_csv_text(std::string_view text, std::string catalog_name, const ZoneConfig& cfg,
                             std::span<const std::string> expected_bands = {});

/// Writes objects in ingest format. Coordinates and magnitudes use the
/// shortest decimal form that reads back to the same double.
void write_catalog_csv(std::ostream& out, std::span<const std::string> bands, std::span<const CatalogObject> objects);
void write_catalog_csv(const std::filesystem::path& path, std::span<const std::string> bands,
                       std::span<const CatalogObject> objects);

// Binary snapshot of a built index: a single versioned file in host byte
// order. Loading it skips CSV parsing; the zone layout is rebuilt on load.
inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(const ZoneIndex& index, const std::filesystem::path& path);
ZoneIndex read_snapshot(const std::filesystem::path& path);
bool is_snapshot(const std::filesystem::path& path);

/// Opens either a snapshot or a CSV file (ingested with `cfg`). CSV
/// rejections are appended to `rejected` when it is non-null.
ZoneIndex load_index(const std::filesystem::path& path, const ZoneConfig& cfg,
                     std::vector<Rejection>* rejected = nullptr);

/// Shortest round-trip decimal representation of a double.
std::string format_shortest(double v);

}  // namespace zonex
