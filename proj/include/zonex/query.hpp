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
// The three query kinds over a zone index: magnitude scan, cone search and
// radius cross-match, plus the exhaustive cross-match used to verify them.
// Every result sequence comes back in canonical order (ascending id, or
// ascending (leading_id, other_id) for pairs).

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zonex/catalog.hpp"
#include "zonex/sphere.hpp"

namespace zonex {

using SliceRefs = std::vector<const ZoneSlice*>;

SliceRefs all_slices(const ZoneIndex& index);
/// Non-empty slices of the listed zones, in the order given.
SliceRefs slices_for(const ZoneIndex& index, std::span<const ZoneId> zones);

// ---------------------------------------------------------------------------
// Scan

/// Inclusive magnitude band, SQL BETWEEN semantics. Missing values never match.
struct ScanFilter {
  std::string band = "r";
  double lo = 9.0;
  double hi = 10.0;
};

struct ScanRow {
  ObjectId id;
  double mag;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct ScanOutcome {
  std::vector<ScanRow> rows;
  std::uint64_t rows_scanned = 0;
};

/// Visits every object of `slices`; there is no magnitude index.
/// Throws DomainError for an unknown band or lo > hi.
ScanOutcome scan_filter(const ZoneIndex& index, std::span<const ZoneSlice* const> slices, const ScanFilter& filter);

// ---------------------------------------------------------------------------
// Neighbourhood bounds shared by cone search and cross-match

/// Widening applied to the radius before zones and ra windows are derived.
/// It covers rounding in the separation formula, so every point whose
/// computed separation is <= radius is a candidate.
inline constexpr double kSearchPadDeg = 1e-9;

/// Zones and ra window that contain every point within `radius` of `center`.
struct SearchBounds {
  ZoneRange zones;
  RaWindow window;

  bool admits(const SkyPoint& p, const ZoneConfig& cfg) const {
    return zones.contains(zone_of(p.dec(), cfg)) && window.contains(p.ra());
  }
};

SearchBounds search_bounds(const SkyPoint& center, double radius_deg, const ZoneConfig& cfg);

// ---------------------------------------------------------------------------
// Cone search

struct ConeQuery {
  SkyPoint center;
  double radius_deg = 0.0;
};

struct ConeRow {
  ObjectId id;
  double separation_deg;

  friend bool operator==(const ConeRow&, const ConeRow&) = default;
};

struct ConeOutcome {
  std::vector<ConeRow> rows;
  std::uint64_t rows_scanned = 0;  // candidates given the exact-distance test
};

using ZonePredicate = std::function<bool(ZoneId)>;

/// Objects with angular_separation(center, pos) <= radius. When `owns` is
/// set only zones it accepts are searched. Throws DomainError if the radius
/// is outside [0, 180].
ConeOutcome cone_search(const ZoneIndex& index, const ConeQuery& q, const ZonePredicate& owns = {});

// ---------------------------------------------------------------------------
// Cross-match

inline constexpr double kDefaultMaxMatchRadiusDeg = 10.0;

struct MatchSpec {
  double radius_deg = 10.0 * kArcsecDeg;
  std::string leading;       // label of the catalog driving the partitioning
  bool exclude_self = false;  // drop pairs with leading_id == other_id
  double max_radius_deg = kDefaultMaxMatchRadiusDeg;
};

struct MatchPair {
  ObjectId leading_id;
  ObjectId other_id;
  double separation_deg;

  friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

struct MatchOutcome {
  std::vector<MatchPair> pairs;
  std::uint64_t rows_scanned = 0;  // leading objects processed
  std::uint64_t candidates = 0;    // pairs given the exact-distance test
};

/// Called for every candidate pair before the exact-distance filter.
using CandidateSink = std::function<void(const CatalogObject& leading, const CatalogObject& other)>;

/// Zone join: each leading object searches the zones within dec +- r of the
/// other catalog, restricted to its ra window, then filters by exact
/// separation. Throws DataError when the catalogs use different zone
/// configurations, DomainError when the radius is not in (0, max_radius].
MatchOutcome zone_crossmatch(const ZoneIndex& leading, std::span<const ZoneSlice* const> leading_slices,
                             const ZoneIndex& other, const MatchSpec& spec, const CandidateSink& sink = {});
MatchOutcome zone_crossmatch(const ZoneIndex& leading, const ZoneIndex& other, const MatchSpec& spec);

/// Largest |a| * |b| brute_force_crossmatch accepts.
inline constexpr double kBruteForceLimit = 1e8;

/// Every pair within `radius_deg` by exhaustive comparison.
std::vector<MatchPair> brute_force_crossmatch(std::span<const CatalogObject> a, std::span<const CatalogObject> b,
                                              double radius_deg, bool exclude_self = false);

/// Per leading id, the pair with the smallest separation (lowest other_id on ties).
std::vector<MatchPair> best_matches(std::span<const MatchPair> pairs);

void canonical_sort(std::vector<MatchPair>& pairs);
void canonical_sort(std::vector<ScanRow>& rows);
void canonical_sort(std::vector<ConeRow>& rows);

}  // namespace zonex
