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

#include "zonex/synthetic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

#include "zonex/error.hpp"
#include "zonex/ingest.hpp"
#include "zonex/units.hpp"

namespace zonex {

double SkyPatch::ra_width() const { return ra_lo <= ra_hi ? ra_hi - ra_lo : 360.0 - ra_lo + ra_hi; }

double SkyPatch::area_sq_deg() const {
  const double sin_span = std::sin(dec_hi * kDegToRad) - std::sin(dec_lo * kDegToRad);
  return ra_width() * kDegToRad * sin_span * kRadToDeg * kRadToDeg;
}

bool SkyPatch::contains(const SkyPoint& p) const {
  if (p.dec() < dec_lo || p.dec() > dec_hi) return false;
  if (ra_lo <= ra_hi) return p.ra() >= ra_lo && p.ra() <= ra_hi;
  return p.ra() >= ra_lo || p.ra() <= ra_hi;
}

Clustered two_stripe_footprint() {
  return Clustered{{SkyPatch{130.0, 250.0, 0.0, 65.0}, SkyPatch{320.0, 40.0, -1.25, 1.25}}};
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

void check_patch(const SkyPatch& p) {
  if (!(p.dec_lo >= -90.0 && p.dec_lo < p.dec_hi && p.dec_hi <= 90.0)) {
    throw DomainError("footprint dec range must satisfy -90 <= lo < hi <= 90");
  }
  if (!(p.ra_lo >= 0.0 && p.ra_lo <= 360.0 && p.ra_hi >= 0.0 && p.ra_hi <= 360.0) || p.ra_width() <= 0.0) {
    throw DomainError("footprint ra range must lie in [0, 360] and be non-empty");
  }
}

double parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw DomainError("bad number '" + std::string(s) + "'");
  }
  return v;
}

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Footprint parse_footprint(std::string_view text) {
  if (text == "full" || text == "full-sky") return FullSky{};
  if (text == "two-stripe") return two_stripe_footprint();
  if (text.starts_with("band:")) {
    const auto parts = split(text.substr(5), ':');
    if (parts.size() != 2) throw DomainError("band footprint is band:<dec_lo>:<dec_hi>");
    DecBand band{parse_angle(parts[0]), parse_angle(parts[1])};
    check_patch(SkyPatch{0.0, 360.0, band.dec_lo, band.dec_hi});
    return band;
  }
  if (text.starts_with("clustered:")) {
    Clustered c;
    for (const auto patch : split(text.substr(10), ';')) {
      const auto parts = split(patch, ':');
      if (parts.size() != 4) throw DomainError("clustered patch is <ra_lo>:<ra_hi>:<dec_lo>:<dec_hi>");
      SkyPatch p{parse_angle(parts[0]), parse_angle(parts[1]), parse_angle(parts[2]), parse_angle(parts[3])};
      check_patch(p);
      c.patches.push_back(p);
    }
    return c;
  }
  throw DomainError("unknown footprint '" + std::string(text) + "'");
}

std::vector<SkyPatch> patches_of(const Footprint& fp) {
  if (std::holds_alternative<FullSky>(fp)) return {SkyPatch{}};
  if (const auto* band = std::get_if<DecBand>(&fp)) return {SkyPatch{0.0, 360.0, band->dec_lo, band->dec_hi}};
  return std::get<Clustered>(fp).patches;
}

std::vector<BandRange> parse_band_ranges(std::string_view text) {
  std::vector<BandRange> bands;
  if (text.empty()) return bands;
  for (const auto item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 3 || parts[0].empty()) throw DomainError("band range is <name>:<lo>:<hi>");
    BandRange b{std::string(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
    if (b.lo > b.hi) throw DomainError("band " + b.name + ": lo > hi");
    for (const auto& seen : bands) {
      if (seen.name == b.name) throw DomainError("band " + b.name + " listed twice");
    }
    bands.push_back(std::move(b));
  }
  return bands;
}

std::vector<CatalogObject> generate(const SyntheticSpec& spec) {
  const auto patches = patches_of(spec.footprint);
  if (patches.empty()) throw DomainError("footprint has no patches");
  std::vector<double> cumulative;
  double total_area = 0.0;
  for (const auto& p : patches) {
    check_patch(p);
    total_area += p.area_sq_deg();
    cumulative.push_back(total_area);
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<CatalogObject> objects;
  objects.reserve(static_cast<std::size_t>(spec.count));
  for (std::uint64_t i = 0; i < spec.count; ++i) {
    std::size_t k = 0;
    if (patches.size() > 1) {
      const double pick = unit_uniform(rng) * total_area;
      k = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin());
      k = std::min(k, patches.size() - 1);
    }
    const auto& p = patches[k];
    const double ra = normalize_ra(p.ra_lo + unit_uniform(rng) * p.ra_width());
    const double s_lo = std::sin(p.dec_lo * kDegToRad);
    const double s_hi = std::sin(p.dec_hi * kDegToRad);
    const double dec = std::clamp(std::asin(s_lo + unit_uniform(rng) * (s_hi - s_lo)) * kRadToDeg, p.dec_lo, p.dec_hi);

    CatalogObject o{spec.first_id + i, SkyPoint(ra, dec), {}};
    o.mags.reserve(spec.bands.size());
    for (const auto& b : spec.bands) o.mags.emplace_back(b.lo + unit_uniform(rng) * (b.hi - b.lo));
    objects.push_back(std::move(o));
  }
  return objects;
}

std::vector<std::string> band_names(const SyntheticSpec& spec) {
  std::vector<std::string> names;
  for (const auto& b : spec.bands) names.push_back(b.name);
  return names;
}

ZoneIndex generate_index(const SyntheticSpec& spec, const ZoneConfig& cfg, std::string name) {
  return ZoneIndex::build(std::move(name), band_names(spec), cfg, generate(spec));
}

void write_synthetic_csv(const SyntheticSpec& spec, const std::filesystem::path& path) {
  write_catalog_csv(path, band_names(spec), generate(spec));
}

}  // namespace zonex
