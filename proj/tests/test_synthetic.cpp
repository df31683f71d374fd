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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zonex/error.hpp"
#include "zonex/ingest.hpp"
#include "zonex/synthetic.hpp"

using namespace zonex;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "zonex_test_synthetic";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("count 0 writes only the header") {
  SyntheticSpec spec;
  spec.bands = {{"g", 14, 22}, {"r", 5, 15}};
  const auto path = scratch("empty.csv");
  write_synthetic_csv(spec, path);
  CHECK(slurp(path) == "id,ra,dec,g,r\n");
  CHECK(generate(spec).empty());
}

TEST_CASE("full sky is uniform on the sphere") {
  SyntheticSpec spec;
  spec.count = 1'000'000;
  spec.seed = 2;
  const auto objects = generate(spec);
  REQUIRE(objects.size() == 1'000'000);
  std::size_t band = 0;
  std::size_t east = 0;
  double mag_sum = 0.0;
  for (const auto& o : objects) {
    band += std::abs(o.pos.dec()) < 30.0;
    east += o.pos.ra() < 180.0;
    mag_sum += *o.mags[0];
    CHECK_UNARY(*o.mags[0] >= 5.0);
    CHECK_UNARY(*o.mags[0] <= 15.0);
  }
  // Area fraction of |dec| < 30 is sin(30 deg) = 1/2.
  const double n = 1e6;
  const double sigma = std::sqrt(n * 0.25);
  CHECK(std::abs(static_cast<double>(band) - n / 2) <= 3 * sigma);
  CHECK(std::abs(static_cast<double>(east) - n / 2) <= 3 * sigma);
  CHECK(mag_sum / n == doctest::Approx(10.0).epsilon(0.01));
  CHECK(objects.front().id == 1);
  CHECK(objects.back().id == 1'000'000);
}

TEST_CASE("two-stripe catalog occupies only its zones") {
  SyntheticSpec spec;
  spec.count = 50'000;
  spec.seed = 3;
  spec.footprint = two_stripe_footprint();
  const ZoneConfig cfg{};
  const auto index = generate_index(spec, cfg);
  const auto h = histogram(index);
  const auto stripe = zones_overlapping(-1.25, 1.25, cfg);
  const auto north = zones_overlapping(0.0, 65.0, cfg);
  for (std::int32_t z = 0; z < cfg.zone_count(); ++z) {
    if (!stripe.contains(ZoneId{z}) && !north.contains(ZoneId{z})) REQUIRE(h.counts[static_cast<std::size_t>(z)] == 0);
  }
  const auto patches = patches_of(spec.footprint);
  for (const auto& o : flatten(index)) {
    REQUIRE((patches[0].contains(o.pos) || patches[1].contains(o.pos)));
  }
  // Objects split by area: the thin stripe holds about 80*2.5 / (120*~56.5 + 80*2.5).
  std::size_t in_stripe = 0;
  for (const auto& o : flatten(index)) in_stripe += patches[1].contains(o.pos);
  const double p = patches[1].area_sq_deg() / (patches[0].area_sq_deg() + patches[1].area_sq_deg());
  CHECK(std::abs(static_cast<double>(in_stripe) - p * 50'000) <= 3 * std::sqrt(50'000 * p * (1 - p)));
}

TEST_CASE("seeded output is byte-identical") {
  SyntheticSpec spec;
  spec.count = 5'000;
  spec.seed = 42;
  spec.footprint = parse_footprint("band:-10deg:10deg");
  write_synthetic_csv(spec, scratch("a.csv"));
  write_synthetic_csv(spec, scratch("b.csv"));
  CHECK(slurp(scratch("a.csv")) == slurp(scratch("b.csv")));
  spec.seed = 43;
  write_synthetic_csv(spec, scratch("c.csv"));
  CHECK(slurp(scratch("a.csv")) != slurp(scratch("c.csv")));
  for (const auto& o : generate(spec)) {
    REQUIRE(o.pos.dec() >= -10.0);
    REQUIRE(o.pos.dec() <= 10.0);
  }
}

TEST_CASE("patch geometry") {
  const SkyPatch wrap{320, 40, -1.25, 1.25};
  CHECK(wrap.ra_width() == 80.0);
  CHECK(wrap.contains(SkyPoint(350, 0)));
  CHECK(wrap.contains(SkyPoint(10, 0)));
  CHECK_FALSE(wrap.contains(SkyPoint(100, 0)));
  const SkyPatch all{};
  CHECK(all.area_sq_deg() == doctest::Approx(4.0 * 3.14159265358979323846 * std::pow(180.0 / 3.14159265358979323846, 2)));
}

TEST_CASE("footprint and band parsing") {
  CHECK(std::holds_alternative<FullSky>(parse_footprint("full")));
  CHECK(std::get<Clustered>(parse_footprint("two-stripe")) == two_stripe_footprint());
  CHECK(std::get<DecBand>(parse_footprint("band:-30arcmin:1deg")) == DecBand{-0.5, 1.0});
  const auto c = std::get<Clustered>(parse_footprint("clustered:0deg:10deg:0deg:5deg;20deg:30deg:-5deg:0deg"));
  CHECK(c.patches.size() == 2);
  CHECK(c.patches[1] == SkyPatch{20, 30, -5, 0});
  CHECK_THROWS_AS(parse_footprint("band:-10:10"), DomainError);
  CHECK_THROWS_AS(parse_footprint("band:10deg:-10deg"), DomainError);
  CHECK_THROWS_AS(parse_footprint("band:0deg:100deg"), DomainError);
  CHECK_THROWS_AS(parse_footprint("blob"), DomainError);

  CHECK(parse_band_ranges("r:5:15,g:14:22") == std::vector<BandRange>{{"r", 5, 15}, {"g", 14, 22}});
  CHECK_THROWS_AS(parse_band_ranges("r:5"), DomainError);
  CHECK_THROWS_AS(parse_band_ranges("r:15:5"), DomainError);
  CHECK_THROWS_AS(parse_band_ranges("r:1:2,r:3:4"), DomainError);
}
