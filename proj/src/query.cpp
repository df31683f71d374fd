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

#include "zonex/query.hpp"

#include <algorithm>
#include <cmath>

#include "zonex/error.hpp"

namespace zonex {

SliceRefs all_slices(const ZoneIndex& index) {
  SliceRefs refs;
  refs.reserve(index.slices().size());
  for (const auto& s : index.slices()) refs.push_back(&s);
  return refs;
}

SliceRefs slices_for(const ZoneIndex& index, std::span<const ZoneId> zones) {
  SliceRefs refs;
  for (auto z : zones) {
    if (const auto* s = index.find(z)) refs.push_back(s);
  }
  return refs;
}

void canonical_sort(std::vector<MatchPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const MatchPair& a, const MatchPair& b) {
    return a.leading_id != b.leading_id ? a.leading_id < b.leading_id : a.other_id < b.other_id;
  });
}

void canonical_sort(std::vector<ScanRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) { return a.id < b.id; });
}

void canonical_sort(std::vector<ConeRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ConeRow& a, const ConeRow& b) { return a.id < b.id; });
}

ScanOutcome scan_filter(const ZoneIndex& index, std::span<const ZoneSlice* const> slices, const ScanFilter& filter) {
  if (!(filter.lo <= filter.hi)) throw DomainError("scan filter needs lo <= hi");
  const std::size_t column = index.band_column(filter.band);
  ScanOutcome out;
  for (const ZoneSlice* slice : slices) {
    for (const auto& o : slice->objects()) {
      ++out.rows_scanned;
      const auto& m = o.mags[column];
      if (m && *m >= filter.lo && *m <= filter.hi) out.rows.push_back({o.id, *m});
    }
  }
  canonical_sort(out.rows);
  return out;
}

SearchBounds search_bounds(const SkyPoint& center, double radius_deg, const ZoneConfig& cfg) {
  const double reach = std::min(radius_deg + kSearchPadDeg, 180.0);
  return SearchBounds{zones_overlapping(center.dec() - reach, center.dec() + reach, cfg),
                      ra_window(center.ra(), ra_halfwidth(reach, center.dec()))};
}

ConeOutcome cone_search(const ZoneIndex& index, const ConeQuery& q, const ZonePredicate& owns) {
  if (!(q.radius_deg >= 0.0 && q.radius_deg <= 180.0)) throw DomainError("cone radius outside [0, 180]");
  const auto bounds = search_bounds(q.center, q.radius_deg, index.config());
  ConeOutcome out;
  for (const auto& slice : slice_range(index, bounds.zones)) {
    if (owns && !owns(slice.zone())) continue;
    for (const auto& run : ra_scan(slice, bounds.window)) {
      for (const auto& o : run) {
        ++out.rows_scanned;
        const double sep = angular_separation(q.center, o.pos);
        if (sep <= q.radius_deg) out.rows.push_back({o.id, sep});
      }
    }
  }
  canonical_sort(out.rows);
  return out;
}

namespace {

void require_match_radius(const MatchSpec& spec) {
  if (!(spec.radius_deg > 0.0) || !(spec.radius_deg <= spec.max_radius_deg) || spec.radius_deg > 180.0) {
    throw DomainError("match radius must be in (0, " + std::to_string(spec.max_radius_deg) + "] degrees");
  }
}

}  // namespace

MatchOutcome zone_crossmatch(const ZoneIndex& leading, std::span<const ZoneSlice* const> leading_slices,
                             const ZoneIndex& other, const MatchSpec& spec, const CandidateSink& sink) {
  if (!(leading.config() == other.config())) {
    throw DataError("catalogs '" + leading.catalog_name() + "' and '" + other.catalog_name() +
                    "' use different zone heights");
  }
  require_match_radius(spec);
  const auto& cfg = other.config();
  MatchOutcome out;
  for (const ZoneSlice* slice : leading_slices) {
    for (const auto& lead : slice->objects()) {
      ++out.rows_scanned;
      const auto bounds = search_bounds(lead.pos, spec.radius_deg, cfg);
      for (const auto& candidates : slice_range(other, bounds.zones)) {
        for (const auto& run : ra_scan(candidates, bounds.window)) {
          out.candidates += run.size();
          for (const auto& o : run) {
            if (sink) sink(lead, o);
            if (spec.exclude_self && o.id == lead.id) continue;
            const double sep = angular_separation(lead.pos, o.pos);
            if (sep <= spec.radius_deg) out.pairs.push_back({lead.id, o.id, sep});
          }
        }
      }
    }
  }
  canonical_sort(out.pairs);
  return out;
}

MatchOutcome zone_crossmatch(const ZoneIndex& leading, const ZoneIndex& other, const MatchSpec& spec) {
  const auto slices = all_slices(leading);
  return zone_crossmatch(leading, slices, other, spec);
}

std::vector<MatchPair> brute_force_crossmatch(std::span<const CatalogObject> a, std::span<const CatalogObject> b,
                                              double radius_deg, bool exclude_self) {
  if (static_cast<double>(a.size()) * static_cast<double>(b.size()) > kBruteForceLimit) {
    throw DomainError("brute-force cross-match limited to 1e8 comparisons");
  }
  if (!(radius_deg >= 0.0)) throw DomainError("match radius must be non-negative");
  std::vector<MatchPair> pairs;
  for (const auto& p : a) {
    for (const auto& q : b) {
      if (exclude_self && p.id == q.id) continue;
      const double sep = angular_separation(p.pos, q.pos);
      if (sep <= radius_deg) pairs.push_back({p.id, q.id, sep});
    }
  }
  canonical_sort(pairs);
  return pairs;
}

std::vector<MatchPair> best_matches(std::span<const MatchPair> pairs) {
  std::vector<MatchPair> sorted(pairs.begin(), pairs.end());
  canonical_sort(sorted);
  std::vector<MatchPair> best;
  for (const auto& p : sorted) {
    if (!best.empty() && best.back().leading_id == p.leading_id) {
      if (p.separation_deg < best.back().separation_deg) best.back() = p;
    } else {
      best.push_back(p);
    }
  }
  return best;
}

}  // namespace zonex
