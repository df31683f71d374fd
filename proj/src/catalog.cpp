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

#include "zonex/catalog.hpp"

#include <algorithm>
#include <unordered_set>

#include "zonex/error.hpp"

namespace zonex {

ZoneSlice::ZoneSlice(ZoneId zone, std::vector<CatalogObject> objects)
    : zone_(zone), objects_(std::move(objects)) {
  std::sort(objects_.begin(), objects_.end(), [](const CatalogObject& a, const CatalogObject& b) {
    if (a.pos.ra() != b.pos.ra()) return a.pos.ra() < b.pos.ra();
    return a.id < b.id;
  });
  ras_.reserve(objects_.size());
  for (const auto& o : objects_) ras_.push_back(o.pos.ra());
}

std::uint64_t ZoneHistogram::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

ZoneIndex ZoneIndex::build(std::string catalog_name, std::vector<std::string> bands, ZoneConfig cfg,
                           std::vector<CatalogObject> objects, double row_bytes) {
  ZoneIndex index(cfg);
  index.name_ = std::move(catalog_name);
  index.bands_ = std::move(bands);
  index.total_ = objects.size();

  std::unordered_set<ObjectId> seen;
  seen.reserve(objects.size());
  for (const auto& o : objects) {
    if (!seen.insert(o.id).second) throw DataError("duplicate object id " + std::to_string(o.id));
    if (o.mags.size() != index.bands_.size()) {
      throw DataError("object " + std::to_string(o.id) + " has " + std::to_string(o.mags.size()) +
                      " magnitudes, schema has " + std::to_string(index.bands_.size()) + " bands");
    }
  }

  if (row_bytes <= 0.0) {
    row_bytes = static_cast<double>(sizeof(CatalogObject) + index.bands_.size() * sizeof(Magnitude));
  }
  index.row_bytes_ = row_bytes;

  std::vector<std::pair<std::int32_t, std::size_t>> order;
  order.reserve(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) order.emplace_back(zone_of(objects[i].pos.dec(), cfg).index, i);
  std::sort(order.begin(), order.end());

  index.slot_.assign(static_cast<std::size_t>(cfg.zone_count()), -1);
  for (std::size_t i = 0; i < order.size();) {
    const std::int32_t zone = order[i].first;
    std::vector<CatalogObject> members;
    std::size_t j = i;
    for (; j < order.size() && order[j].first == zone; ++j) members.push_back(std::move(objects[order[j].second]));
    index.slot_[static_cast<std::size_t>(zone)] = static_cast<std::int32_t>(index.slices_.size());
    index.slices_.emplace_back(ZoneId{zone}, std::move(members));
    i = j;
  }
  return index;
}

const ZoneSlice* ZoneIndex::find(ZoneId z) const {
  if (z.index < 0 || z.index >= cfg_.zone_count()) return nullptr;
  const auto pos = slot_[static_cast<std::size_t>(z.index)];
  return pos < 0 ? nullptr : &slices_[static_cast<std::size_t>(pos)];
}

std::size_t ZoneIndex::band_column(const std::string& band) const {
  const auto it = std::find(bands_.begin(), bands_.end(), band);
  if (it == bands_.end()) throw DomainError("unknown band '" + band + "' in catalog '" + name_ + "'");
  return static_cast<std::size_t>(it - bands_.begin());
}

std::vector<CatalogObject> flatten(const ZoneIndex& index) {
  std::vector<CatalogObject> out;
  out.reserve(index.total_count());
  for (const auto& s : index.slices()) out.insert(out.end(), s.objects().begin(), s.objects().end());
  return out;
}

ZoneHistogram histogram(const ZoneIndex& index) {
  ZoneHistogram h;
  h.counts.assign(static_cast<std::size_t>(index.config().zone_count()), 0);
  for (const auto& s : index.slices()) h.counts[static_cast<std::size_t>(s.zone().index)] = s.size();
  return h;
}

std::span<const ZoneSlice> slice_range(const ZoneIndex& index, ZoneRange zones) {
  if (zones.empty()) return {};
  const auto all = index.slices();
  const auto first = std::lower_bound(all.begin(), all.end(), zones.first,
                                      [](const ZoneSlice& s, ZoneId z) { return s.zone() < z; });
  const auto last = std::upper_bound(first, all.end(), zones.last,
                                     [](ZoneId z, const ZoneSlice& s) { return z < s.zone(); });
  return {first, last};
}

std::size_t ScanRuns::size() const {
  std::size_t n = 0;
  for (const auto& r : *this) n += r.size();
  return n;
}

ScanRuns ra_scan(const ZoneSlice& slice, const RaWindow& window) {
  ScanRuns runs;
  const auto ras = slice.ras();
  const auto objects = slice.objects();
  for (const auto& iv : window) {
    const auto lo = std::lower_bound(ras.begin(), ras.end(), iv.lo);
    const auto hi = std::lower_bound(lo, ras.end(), iv.hi);
    runs.push(objects.subspan(static_cast<std::size_t>(lo - ras.begin()), static_cast<std::size_t>(hi - lo)));
  }
  return runs;
}

}  // namespace zonex
