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
// Seeded synthetic catalogs: uniform on the sphere inside a footprint.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zonex/catalog.hpp"

namespace zonex {

/// A dec band limited to an ra range. ra_lo > ra_hi wraps through 0.
struct SkyPatch {
  double ra_lo = 0.0;
  double ra_hi = 360.0;
  double dec_lo = -90.0;
  double dec_hi = 90.0;

  double ra_width() const;
  /// Solid angle in square degrees.
  double area_sq_deg() const;
  bool contains(const SkyPoint& p) const;

  friend bool operator==(const SkyPatch&, const SkyPatch&) = default;
};

struct FullSky {
  friend bool operator==(const FullSky&, const FullSky&) = default;
};
struct DecBand {
  double dec_lo;
  double dec_hi;
  friend bool operator==(const DecBand&, const DecBand&) = default;
};
/// Union of non-overlapping patches; objects are spread by area.
struct Clustered {
  std::vector<SkyPatch> patches;
  friend bool operator==(const Clustered&, const Clustered&) = default;
};

using Footprint = std::variant<FullSky, DecBand, Clustered>;

/// Two disjoint stripes mimicking an irregular survey: a large northern
/// region (ra 130..250, dec 0..65) and a thin equatorial stripe wrapping ra 0
/// (ra 320..40, dec -1.25..1.25).
Clustered two_stripe_footprint();

/// Parses `full`, `band:<lo>:<hi>`, `two-stripe`, or
/// `clustered:<ra_lo>:<ra_hi>:<dec_lo>:<dec_hi>[;...]`. Angles need a unit
/// suffix (deg, arcmin, arcsec). Throws DomainError on bad input.
Footprint parse_footprint(std::string_view text);

std::vector<SkyPatch> patches_of(const Footprint& fp);

struct BandRange {
  std::string name;
  double lo;
  double hi;

  friend bool operator==(const BandRange&, const BandRange&) = default;
};

/// `r:5:15,g:14:22` -> bands with uniform magnitude ranges.
std::vector<BandRange> parse_band_ranges(std::string_view text);

struct SyntheticSpec {
  std::uint64_t count = 0;
  Footprint footprint = FullSky{};
  std::vector<BandRange> bands = {{"r", 5.0, 15.0}};
  std::uint64_t seed = 1;
  ObjectId first_id = 1;  // ids are first_id, first_id + 1, ...
};

/// Same spec, same objects, bit for bit. dec is drawn with density
/// proportional to cos(dec), ra uniformly.
std::vector<CatalogObject> generate(const SyntheticSpec& spec);

std::vector<std::string> band_names(const SyntheticSpec& spec);

/// generate() then ZoneIndex::build().
ZoneIndex generate_index(const SyntheticSpec& spec, const ZoneConfig& cfg, std::string name = "synthetic");

/// generate() then write_catalog_csv().
void write_synthetic_csv(const SyntheticSpec& spec, const std::filesystem::path& path);

}  // namespace zonex
