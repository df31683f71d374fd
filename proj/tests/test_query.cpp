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
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "zonex/error.hpp"
#include "zonex/query.hpp"
#include "zonex/synthetic.hpp"

using namespace zonex;

namespace {

CatalogObject obj(ObjectId id, double ra, double dec, std::vector<Magnitude> mags = {}) {
  return CatalogObject{id, SkyPoint(ra, dec), std::move(mags)};
}

ZoneIndex index_of(std::vector<CatalogObject> objects, std::vector<std::string> bands = {},
                   const ZoneConfig& cfg = ZoneConfig{}) {
  return ZoneIndex::build("t", std::move(bands), cfg, objects);
}

MatchSpec radius(double r, bool exclude_self = false) {
  MatchSpec s;
  s.radius_deg = r;
  s.exclude_self = exclude_self;
  return s;
}

}  // namespace

TEST_CASE("scan boundaries") {
  const auto index = index_of({obj(1, 0, 0, {9.0}), obj(2, 1, 1, {10.0}), obj(3, 2, 2, {9.5}), obj(4, 3, 3, {10.0000001}),
                               obj(5, 4, 4, {std::nullopt}), obj(6, 5, 5, {8.9999999})},
                              {"r"});
  const auto all = all_slices(index);
  const auto rows = scan_filter(index, all, ScanFilter{}).rows;
  CHECK(rows == std::vector<ScanRow>{{1, 9.0}, {2, 10.0}, {3, 9.5}});
  CHECK(scan_filter(index, all, ScanFilter{}).rows_scanned == 6);

  CHECK(scan_filter(index, all, ScanFilter{"r", 9.5, 9.5}).rows == std::vector<ScanRow>{{3, 9.5}});
  CHECK(scan_filter(index, all, ScanFilter{"r", 20, 30}).rows.empty());
  CHECK(scan_filter(index_of({}, {"r"}), {}, ScanFilter{}).rows.empty());
  CHECK_THROWS_AS(scan_filter(index, all, ScanFilter{"r", 10, 9}), DomainError);
  CHECK_THROWS_AS(scan_filter(index, all, ScanFilter{"g", 9, 10}), DomainError);
}

TEST_CASE("scan of uniform magnitudes matches a linear scan") {
  SyntheticSpec spec;
  spec.count = 100'000;
  spec.seed = 77;
  spec.bands = {{"g", 14, 22}, {"r", 5, 15}};
  auto objects = generate(spec);
  for (std::size_t i = 0; i < objects.size(); i += 97) objects[i].mags[1] = std::nullopt;
  const auto index = ZoneIndex::build("u", band_names(spec), ZoneConfig{}, objects);

  const auto got = scan_filter(index, all_slices(index), ScanFilter{}).rows;
  CHECK(got == oracle::linear_scan(objects, 1, 9.0, 10.0));
  // Expected fraction is 1/10 of the rows with a value.
  const double n = static_cast<double>(objects.size() - (objects.size() + 96) / 97);
  const double sigma = std::sqrt(n * 0.1 * 0.9);
  CHECK(std::abs(static_cast<double>(got.size()) - 0.1 * n) <= 3.0 * sigma);

  // Splitting the zones into arbitrary groups and merging gives the same rows.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SliceRefs> groups(1 + rng() % 7);
    for (const auto* s : all_slices(index)) groups[rng() % groups.size()].push_back(s);
    std::vector<ScanRow> merged;
    for (const auto& g : groups) {
      auto part = scan_filter(index, g, ScanFilter{"g", 15.0, 15.5}).rows;
      merged.insert(merged.end(), part.begin(), part.end());
    }
    canonical_sort(merged);
    CHECK(merged == oracle::linear_scan(objects, 0, 15.0, 15.5));
  }
}

TEST_CASE("cone search edge cases") {
  const auto index = index_of({obj(1, 10, 20), obj(2, 10, 20.5), obj(3, 200, 89.5), obj(4, 20, 89.5), obj(5, 0, 90),
                               obj(6, 359.9, 0), obj(7, 0.1, 0)});
  const auto zero = cone_search(index, ConeQuery{SkyPoint(10, 20), 0.0});
  CHECK(zero.rows == std::vector<ConeRow>{{1, 0.0}});

  const auto pole = cone_search(index, ConeQuery{SkyPoint(0, 90), 1.0});
  std::vector<ObjectId> ids;
  for (const auto& r : pole.rows) ids.push_back(r.id);
  CHECK(ids == std::vector<ObjectId>{3, 4, 5});
  for (const auto& r : pole.rows) CHECK(r.separation_deg <= 1.0);

  const auto wrap = cone_search(index, ConeQuery{SkyPoint(0, 0), 0.2});
  REQUIRE(wrap.rows.size() == 2);
  CHECK(wrap.rows[0].id == 6);
  CHECK(wrap.rows[0].separation_deg == doctest::Approx(0.1).epsilon(1e-12));

  CHECK(cone_search(index, ConeQuery{SkyPoint(0, 0), 180.0}).rows.size() == 7);
  CHECK_THROWS_AS(cone_search(index, ConeQuery{SkyPoint(0, 0), -1.0}), DomainError);
  CHECK_THROWS_AS(cone_search(index, ConeQuery{SkyPoint(0, 0), 180.5}), DomainError);

  // Restricting to owned zones returns only rows from those zones.
  const ZoneConfig cfg{};
  const auto north = cone_search(index, ConeQuery{SkyPoint(10, 20), 1.0},
                                 [&](ZoneId z) { return z >= zone_of(20.25, cfg); });
  CHECK(north.rows == std::vector<ConeRow>{{2, angular_separation(SkyPoint(10, 20), SkyPoint(10, 20.5))}});
}

TEST_CASE("cone search matches brute force on hard samples") {
  const ZoneConfig cfg{};
  oracle::HardSkySampler sky(2024, cfg);
  const auto objects = sky.catalog(10'000, 1);
  const auto index = index_of(objects, {}, cfg);
  const double radii[] = {kArcsecDeg, kArcminDeg, 1.0};
  std::size_t nonempty = 0;
  for (int i = 0; i < 100; ++i) {
    const auto center = sky.next();
    const double r = radii[i % 3];
    const auto got = cone_search(index, ConeQuery{center, r}).rows;
    REQUIRE(got == oracle::brute_force_cone(objects, center, r));
    nonempty += !got.empty();
  }
  CHECK(nonempty > 10);

  // Cones spanning several zone boundaries and the ra seam.
  for (double dec : {-89.99, -45.0, 0.0, 30.0, 89.0}) {
    for (double r : {0.5, 3.0, 10.0}) {
      const SkyPoint c(359.8, dec);
      CHECK(cone_search(index, ConeQuery{c, r}).rows == oracle::brute_force_cone(objects, c, r));
    }
  }
}

TEST_CASE("cross-match small fixtures") {
  const auto a = index_of({obj(1, 10, 10)});
  const auto b = index_of({obj(9, 10, 10)});
  const auto one = zone_crossmatch(a, b, radius(kArcsecDeg));
  CHECK(one.pairs == std::vector<MatchPair>{{1, 9, 0.0}});
  CHECK(one.rows_scanned == 1);
  CHECK(one.candidates == 1);

  const auto left = index_of({obj(1, 359.95, 0)});
  const auto right = index_of({obj(2, 0.05, 0)});
  const auto seam = zone_crossmatch(left, right, radius(0.2));
  REQUIRE(seam.pairs.size() == 1);
  CHECK(seam.pairs[0].separation_deg == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(zone_crossmatch(left, right, radius(0.09)).pairs.empty());

  const auto other_cfg = index_of({obj(2, 0.05, 0)}, {}, ZoneConfig(0.5));
  CHECK_THROWS_AS(zone_crossmatch(left, other_cfg, radius(0.2)), DataError);
  CHECK_THROWS_AS(zone_crossmatch(left, right, radius(0.0)), DomainError);
  CHECK_THROWS_AS(zone_crossmatch(left, right, radius(10.5)), DomainError);
  auto wide = radius(20.0);
  wide.max_radius_deg = 30.0;
  CHECK(zone_crossmatch(left, right, wide).pairs.size() == 1);
}

TEST_CASE("cross-match equals brute force for random catalogs") {
  const ZoneConfig cfg{};
  const double radii[] = {kArcsecDeg, 10 * kArcsecDeg, kArcminDeg, 30 * kArcminDeg};
  std::size_t matched = 0;
  for (int trial = 0; trial < 8; ++trial) {
    oracle::HardSkySampler sky(300 + trial, cfg);
    const auto a = sky.catalog(1'000, 1);
    auto b = sky.catalog(1'000, 5'001);
    // Near-duplicates of leading objects so small radii have pairs.
    for (std::size_t i = 0; i < 200; ++i) {
      b[i].pos = oracle::offset_point(a[i * 3].pos, sky.uniform(0.0, 2.0) * radii[trial % 4], sky.uniform(0.0, 360.0));
    }
    const auto ia = index_of(a, {}, cfg);
    const auto ib = index_of(b, {}, cfg);
    const double r = radii[trial % 4];
    const auto got = zone_crossmatch(ia, ib, radius(r));
    const auto want = brute_force_crossmatch(a, b, r);
    REQUIRE(got.pairs.size() == want.size());
    CHECK(got.pairs == want);
    for (const auto& p : got.pairs) {
      const auto& pa = a[p.leading_id - 1].pos;
      const auto& pb = b[p.other_id - 5'001].pos;
      CHECK(std::abs(p.separation_deg - oracle::vector_separation(pa, pb)) <= 1e-9);
    }
    matched += got.pairs.size();

    // Swapping roles gives the mirrored pair set.
    auto swapped = zone_crossmatch(ib, ia, radius(r)).pairs;
    for (auto& p : swapped) std::swap(p.leading_id, p.other_id);
    canonical_sort(swapped);
    CHECK(swapped == got.pairs);
  }
  CHECK(matched > 100);
}

TEST_CASE("candidate set covers every true match") {
  const ZoneConfig cfg{};
  oracle::HardSkySampler sky(55, cfg);
  const auto a = sky.catalog(1'500, 1);
  const auto b = sky.catalog(1'500, 1);
  const auto ia = index_of(a, {}, cfg);
  const auto ib = index_of(b, {}, cfg);
  const double r = 0.25;
  std::set<std::pair<ObjectId, ObjectId>> candidates;
  const auto out = zone_crossmatch(ia, all_slices(ia), ib, radius(r),
                                   [&](const CatalogObject& x, const CatalogObject& y) { candidates.emplace(x.id, y.id); });
  CHECK(out.candidates == candidates.size());
  const auto truth = brute_force_crossmatch(a, b, r);
  for (const auto& p : truth) CHECK(candidates.count({p.leading_id, p.other_id}) == 1);
  CHECK(out.pairs == truth);
}

TEST_CASE("self exclusion and best matches") {
  const auto cat = index_of({obj(1, 10, 10), obj(2, 10, 10.0001), obj(3, 50, 50)});
  const auto all = zone_crossmatch(cat, cat, radius(kArcsecDeg));
  CHECK(all.pairs.size() == 5);  // 3 self pairs plus 1-2 and 2-1
  const auto noself = zone_crossmatch(cat, cat, radius(kArcsecDeg, true));
  REQUIRE(noself.pairs.size() == 2);
  CHECK(noself.pairs[0].leading_id == 1);
  CHECK(noself.pairs[0].other_id == 2);

  const std::vector<MatchPair> pairs{{1, 7, 0.5}, {1, 3, 0.2}, {1, 4, 0.2}, {2, 9, 0.1}, {5, 1, 0.0}};
  CHECK(best_matches(pairs) == std::vector<MatchPair>{{1, 3, 0.2}, {2, 9, 0.1}, {5, 1, 0.0}});
  CHECK(best_matches(std::vector<MatchPair>{}).empty());
}

TEST_CASE("brute force") {
  std::vector<CatalogObject> north;
  std::vector<CatalogObject> south;
  for (ObjectId i = 1; i <= 50; ++i) {
    north.push_back(obj(i, 7.0 * i, 10.0 + i));
    south.push_back(obj(i, 7.0 * i, -10.0 - i));
  }
  CHECK(brute_force_crossmatch(north, south, 5.0).empty());

  const auto self = brute_force_crossmatch(north, north, 0.0);
  REQUIRE(self.size() == 50);
  for (const auto& p : self) {
    CHECK(p.leading_id == p.other_id);
    CHECK(p.separation_deg == 0.0);
  }
  CHECK(brute_force_crossmatch(north, north, 0.0, true).empty());

  std::vector<CatalogObject> big(10'001, obj(1, 0, 0));
  CHECK_THROWS_AS(brute_force_crossmatch(big, big, 1.0), DomainError);
}

TEST_CASE("search bounds admit the points they should") {
  const ZoneConfig cfg{};
  const auto b = search_bounds(SkyPoint(0, 89.99), 0.05, cfg);
  CHECK(b.window.is_full_circle());
  CHECK(b.zones.last.index == 2699);
  const auto eq = search_bounds(SkyPoint(180, 0), 1.0, cfg);
  CHECK_FALSE(eq.window.is_full_circle());
  CHECK(eq.admits(SkyPoint(180.999, 0.999), cfg));
  CHECK_FALSE(eq.admits(SkyPoint(182, 0), cfg));
  CHECK_FALSE(eq.admits(SkyPoint(180, 1.2), cfg));
}
