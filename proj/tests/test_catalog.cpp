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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zonex/catalog.hpp"
#include "zonex/error.hpp"
#include "zonex/synthetic.hpp"

using namespace zonex;

namespace {

CatalogObject obj(ObjectId id, double ra, double dec, std::vector<Magnitude> mags = {}) {
  return CatalogObject{id, SkyPoint(ra, dec), std::move(mags)};
}

ZoneIndex three_objects() {
  return ZoneIndex::build("three", {}, ZoneConfig{}, {obj(1, 10, -90), obj(2, 20, 0), obj(3, 30, 90)});
}

}  // namespace

TEST_CASE("build places objects by zone") {
  const auto index = three_objects();
  CHECK(index.total_count() == 3);
  REQUIRE(index.slices().size() == 3);
  CHECK(index.slices()[0].zone().index == 0);
  CHECK(index.slices()[1].zone().index == 1350);
  CHECK(index.slices()[2].zone().index == 2699);
  CHECK(index.find(ZoneId{1350})->objects()[0].id == 2);
  CHECK(index.find(ZoneId{1351}) == nullptr);
  CHECK(index.find(ZoneId{-1}) == nullptr);
  CHECK(index.find(ZoneId{2700}) == nullptr);

  const auto h = histogram(index);
  CHECK(h.zone_count() == 2700);
  CHECK(h.total() == 3);
  CHECK(h.counts[0] == 1);
  CHECK(h.counts[1350] == 1);
  CHECK(h.counts[2699] == 1);
}

TEST_CASE("empty index") {
  const auto index = ZoneIndex::build("empty", {"r"}, ZoneConfig{}, {});
  CHECK(index.total_count() == 0);
  CHECK(index.slices().empty());
  const auto h = histogram(index);
  CHECK(h.total() == 0);
  CHECK(std::all_of(h.counts.begin(), h.counts.end(), [](auto c) { return c == 0; }));
  CHECK(slice_range(index, ZoneConfig{}.all_zones()).empty());
}

TEST_CASE("build rejects duplicates and schema mismatches") {
  CHECK_THROWS_AS(ZoneIndex::build("dup", {}, ZoneConfig{}, {obj(1, 0, 0), obj(1, 5, 5)}), DataError);
  CHECK_THROWS_AS(ZoneIndex::build("mags", {"r", "g"}, ZoneConfig{}, {obj(1, 0, 0, {1.0})}), DataError);
  const auto index = ZoneIndex::build("ok", {"r", "g"}, ZoneConfig{}, {obj(1, 0, 0, {1.0, std::nullopt})});
  CHECK(index.band_column("g") == 1);
  CHECK_THROWS_AS(index.band_column("z"), DomainError);
}

TEST_CASE("slices are ra-sorted with id tie-break and zone-correct") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dec(-90.0, 90.0);
  std::vector<CatalogObject> objects;
  for (ObjectId id = 1000; id > 0; --id) {
    // coarse ra values force plenty of ties
    objects.push_back(obj(id, static_cast<double>(rng() % 40), dec(rng)));
  }
  const ZoneConfig cfg(3.0);
  const auto index = ZoneIndex::build("sorted", {}, cfg, objects);
  std::size_t total = 0;
  for (const auto& s : index.slices()) {
    total += s.size();
    CHECK(s.size() > 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& o = s.objects()[i];
      CHECK(zone_of(o.pos.dec(), cfg) == s.zone());
      CHECK(s.ras()[i] == o.pos.ra());
      if (i > 0) {
        const auto& prev = s.objects()[i - 1];
        CHECK((prev.pos.ra() < o.pos.ra() || (prev.pos.ra() == o.pos.ra() && prev.id < o.id)));
      }
    }
  }
  CHECK(total == index.total_count());

  // Round trip of ids and determinism of rebuilds.
  auto ids_in = [](const std::vector<CatalogObject>& v) {
    std::vector<ObjectId> ids;
    for (const auto& o : v) ids.push_back(o.id);
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  CHECK(ids_in(flatten(index)) == ids_in(objects));
  std::reverse(objects.begin(), objects.end());
  const auto again = ZoneIndex::build("sorted", {}, cfg, objects);
  CHECK(flatten(again) == flatten(index));
}

TEST_CASE("histogram matches an independent recount on a clustered footprint") {
  SyntheticSpec spec;
  spec.count = 10'000;
  spec.footprint = two_stripe_footprint();
  spec.seed = 99;
  const ZoneConfig cfg{};
  const auto objects = generate(spec);
  const auto index = ZoneIndex::build("c", band_names(spec), cfg, objects);
  const auto h = histogram(index);
  const auto expected = oracle::recount(objects, cfg.height_deg(), cfg.zone_count());
  std::uint64_t nonzero = 0;
  for (std::int32_t z = 0; z < cfg.zone_count(); ++z) {
    const auto it = expected.find(z);
    CHECK(h.counts[static_cast<std::size_t>(z)] == (it == expected.end() ? 0u : it->second));
    nonzero += h.counts[static_cast<std::size_t>(z)] > 0;
  }
  // The footprint spans dec -1.25 .. 65 only, so the histogram is far from uniform.
  CHECK(h.counts[static_cast<std::size_t>(zone_of(-30.0, cfg).index)] == 0);
  CHECK(h.counts[static_cast<std::size_t>(zone_of(70.0, cfg).index)] == 0);
  CHECK(nonzero <= static_cast<std::uint64_t>(zones_overlapping(-1.25, 65.0, cfg).size()));
}

TEST_CASE("slice_range") {
  const auto index = three_objects();
  CHECK(slice_range(index, ZoneConfig{}.all_zones()).size() == 3);
  CHECK(slice_range(index, ZoneRange{ZoneId{5}, ZoneId{4}}).empty());
  CHECK(slice_range(index, ZoneRange{ZoneId{1}, ZoneId{1349}}).empty());
  const auto one = slice_range(index, ZoneRange{ZoneId{1000}, ZoneId{2000}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].zone().index == 1350);
  const auto tail = slice_range(index, ZoneRange{ZoneId{1350}, ZoneId{2699}});
  CHECK(tail.size() == 2);
}

TEST_CASE("ra_scan") {
  std::vector<CatalogObject> objects;
  for (int i = 0; i < 10; ++i) objects.push_back(obj(static_cast<ObjectId>(i + 1), 36.0 * i + 1.0, 0.01));
  const auto index = ZoneIndex::build("ring", {}, ZoneConfig{}, objects);
  const auto& slice = index.slices()[0];

  CHECK(ra_scan(slice, RaWindow::full_circle()).size() == 10);
  CHECK(ra_scan(slice, ra_window(20.0, 1.0)).size() == 0);  // between 1 and 37
  const auto wrap = ra_scan(slice, ra_window(0.0, 40.0));     // 320..360 and 0..40
  CHECK(wrap.size() == 3);                                    // 325, 1, 37

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ra(0.0, 360.0);
  std::uniform_real_distribution<double> hw(0.0, 180.0);
  std::vector<CatalogObject> many;
  for (ObjectId id = 1; id <= 500; ++id) many.push_back(obj(id, ra(rng), 45.01));
  const auto big = ZoneIndex::build("many", {}, ZoneConfig{}, many);
  const auto& s = big.slices()[0];
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = ra_window(ra(rng), trial % 10 == 0 ? hw(rng) : hw(rng) / 50.0);
    std::vector<ObjectId> got;
    for (const auto& run : ra_scan(s, w)) {
      for (const auto& o : run) got.push_back(o.id);
    }
    std::vector<ObjectId> want;
    for (const auto& o : s.objects()) {
      if (w.contains(o.pos.ra())) want.push_back(o.id);
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}
