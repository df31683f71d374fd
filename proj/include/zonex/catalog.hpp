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
// In-memory zone index: a catalog regrouped by declination zone with every
// zone's objects sorted by ra. Immutable once built; safe to read from any
// number of threads.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zonex/sphere.hpp"

namespace zonex {

using ObjectId = std::uint64_t;
using Magnitude = std::optional<double>;  // nullopt = missing

struct CatalogObject {
  ObjectId id = 0;
  SkyPoint pos;
  std::vector<Magnitude> mags;  // one entry per band of the owning index

  friend bool operator==(const CatalogObject&, const CatalogObject&) = default;
};

/// The objects of one zone, sorted by (ra, id). `ras()` mirrors the ra of
/// each object so binary searches stay inside one contiguous array.
class ZoneSlice {
 public:
  ZoneSlice(ZoneId zone, std::vector<CatalogObject> objects);

  ZoneId zone() const { return zone_; }
  std::span<const CatalogObject> objects() const { return objects_; }
  std::span<const double> ras() const { return ras_; }
  std::size_t size() const { return objects_.size(); }

 private:
  ZoneId zone_;
  std::vector<CatalogObject> objects_;
  std::vector<double> ras_;
};

/// Per-zone object counts over the full zone range of a configuration.
struct ZoneHistogram {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  std::int32_t zone_count() const { return static_cast<std::int32_t>(counts.size()); }
};

class ZoneIndex {
 public:
  /// Groups `objects` by zone and sorts each zone by (ra, id). Throws
  /// DataError on duplicate ids or on magnitude lists that do not match
  /// `bands`. `row_bytes` is the approximate storage size of one row,
  /// used for I/O accounting; 0 picks an in-memory estimate.
  static ZoneIndex build(std::string catalog_name, std::vector<std::string> bands, ZoneConfig cfg,
                         std::vector<CatalogObject> objects, double row_bytes = 0.0);

  const ZoneConfig& config() const { return cfg_; }
  const std::string& catalog_name() const { return name_; }
  const std::vector<std::string>& bands() const { return bands_; }
  std::size_t total_count() const { return total_; }
  double row_bytes() const { return row_bytes_; }

  /// Non-empty slices in ascending zone order.
  std::span<const ZoneSlice> slices() const { return slices_; }

  /// The slice for `z`, or nullptr when the zone holds no objects.
  const ZoneSlice* find(ZoneId z) const;

  /// Column of `band` in every object's `mags`; throws DomainError if absent.
  std::size_t band_column(const std::string& band) const;

 private:
  ZoneIndex(ZoneConfig cfg) : cfg_(cfg) {}

  ZoneConfig cfg_;
  std::string name_;
  std::vector<std::string> bands_;
  std::vector<ZoneSlice> slices_;
  std::vector<std::int32_t> slot_;  // zone -> position in slices_, -1 if empty
  std::size_t total_ = 0;
  double row_bytes_ = 0.0;
};

/// Every object of the index in slice order.
std::vector<CatalogObject> flatten(const ZoneIndex& index);

ZoneHistogram histogram(const ZoneIndex& index);

/// The non-empty slices whose zone lies in `zones`, in zone order.
std::span<const ZoneSlice> slice_range(const ZoneIndex& index, ZoneRange zones);

/// Up to two contiguous runs of a slice, one per window interval.
class ScanRuns {
 public:
  void push(std::span<const CatalogObject> run) {
    if (!run.empty()) runs_[count_++] = run;
  }
  const std::span<const CatalogObject>* begin() const { return runs_.data(); }
  const std::span<const CatalogObject>* end() const { return runs_.data() + count_; }
  std::size_t size() const;

 private:
  std::array<std::span<const CatalogObject>, 2> runs_{};
  std::size_t count_ = 0;
};

/// Objects of `slice` whose ra lies in `window`, located by binary search.
ScanRuns ra_scan(const ZoneSlice& slice, const RaWindow& window);

}  // namespace zonex
