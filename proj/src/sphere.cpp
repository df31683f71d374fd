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

#include "zonex/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zonex/error.hpp"

namespace zonex {

namespace {

// cos(dec) written as sin(90 - |dec|): exact 0 at the poles and more
// accurate than cos() close to them.
double cos_dec(double dec_deg) { return std::sin((90.0 - std::fabs(dec_deg)) * kDegToRad); }

void require_dec(double dec_deg) {
  if (!(dec_deg >= -90.0 && dec_deg <= 90.0)) {
    throw DomainError("declination " + std::to_string(dec_deg) + " outside [-90, 90]");
  }
}

constexpr std::int32_t kMaxZones = 100'000'000;

}  // namespace

double normalize_ra(double ra_deg) {
  double r = std::fmod(ra_deg, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r = 0.0;  // tiny negatives round up to 360
  return r + 0.0;           // folds -0 into +0
}

SkyPoint::SkyPoint(double ra_deg, double dec_deg) {
  if (!std::isfinite(ra_deg)) throw DomainError("right ascension is not finite");
  require_dec(dec_deg);
  ra_ = normalize_ra(ra_deg);
  dec_ = dec_deg;
}

ZoneConfig::ZoneConfig(double height_deg) : height_deg_(height_deg) {
  if (!(height_deg > 0.0) || !std::isfinite(height_deg)) {
    throw DomainError("zone height must be a positive finite angle");
  }
  const double q = 180.0 / height_deg;
  if (q > kMaxZones) throw DomainError("zone height too small: more than 1e8 zones");
  // Heights such as 4 arcmin are not exact in binary; accept 2699.9999999 as 2700.
  const double nearest = std::round(q);
  const double n = std::fabs(q - nearest) <= 1e-9 * std::max(1.0, q) ? nearest : std::ceil(q);
  zone_count_ = std::max<std::int32_t>(1, static_cast<std::int32_t>(n));
}

ZoneId zone_of(double dec_deg, const ZoneConfig& cfg) {
  require_dec(dec_deg);
  const double raw = std::floor((dec_deg + 90.0) / cfg.height_deg());
  const double last = cfg.zone_count() - 1;
  return ZoneId{static_cast<std::int32_t>(std::clamp(raw, 0.0, last))};
}

namespace {

// Smallest double d in [-90, 90] with zone_of(d) >= z.
double zone_floor(std::int32_t z, const ZoneConfig& cfg) {
  if (z <= 0) return -90.0;
  const double guess = z * cfg.height_deg() - 90.0;
  // Bracket: zone_of(below) < z <= zone_of(above).
  double below = std::max(-90.0, guess - cfg.height_deg());
  double above = std::min(90.0, guess + cfg.height_deg());
  while (true) {
    const double mid = below + 0.5 * (above - below);
    if (mid <= below || mid >= above) break;
    (zone_of(mid, cfg).index >= z ? above : below) = mid;
  }
  return above;
}

}  // namespace

DecRange zone_dec_range(ZoneId z, const ZoneConfig& cfg) {
  if (z.index < 0 || z.index >= cfg.zone_count()) {
    throw DomainError("zone " + std::to_string(z.index) + " outside the configured zone range");
  }
  const bool last = z.index == cfg.zone_count() - 1;
  return DecRange{zone_floor(z.index, cfg), last ? 90.0 : zone_floor(z.index + 1, cfg), last};
}

ZoneRange zones_overlapping(double dec_lo_deg, double dec_hi_deg, const ZoneConfig& cfg) {
  if (std::isnan(dec_lo_deg) || std::isnan(dec_hi_deg)) throw DomainError("declination band is NaN");
  if (dec_lo_deg > dec_hi_deg) return ZoneRange{ZoneId{1}, ZoneId{0}};
  const double lo = std::clamp(dec_lo_deg, -90.0, 90.0);
  const double hi = std::clamp(dec_hi_deg, -90.0, 90.0);
  return ZoneRange{zone_of(lo, cfg), zone_of(hi, cfg)};
}

double angular_separation(const SkyPoint& p, const SkyPoint& q) {
  double dra = std::fabs(p.ra() - q.ra());
  if (dra > 180.0) dra = 360.0 - dra;
  const double half_ddec = std::sin(0.5 * std::fabs(p.dec() - q.dec()) * kDegToRad);
  const double half_dra = std::sin(0.5 * dra * kDegToRad);
  double a = half_ddec * half_ddec + cos_dec(p.dec()) * cos_dec(q.dec()) * half_dra * half_dra;
  a = std::clamp(a, 0.0, 1.0);
  const double sep = 2.0 * std::atan2(std::sqrt(a), std::sqrt(1.0 - a)) * kRadToDeg;
  return std::min(sep, 180.0);
}

double ra_halfwidth(double radius_deg, double dec_deg) {
  if (!(radius_deg >= 0.0 && radius_deg <= 180.0)) throw DomainError("radius outside [0, 180]");
  require_dec(dec_deg);
  const double reach = std::fabs(dec_deg) + radius_deg;
  if (reach >= 90.0) return 180.0;
  constexpr double kPoleGuard = 1e-12;
  const double alpha = radius_deg / std::cos(std::min(reach, 90.0 - kPoleGuard) * kDegToRad);
  return std::min(std::max(alpha, radius_deg), 180.0);
}

double RaWindow::total_width() const {
  double w = 0.0;
  for (const auto& iv : *this) w += iv.width();
  return w;
}

bool RaWindow::contains(double ra_deg) const {
  const double ra = normalize_ra(ra_deg);
  return std::any_of(begin(), end(), [ra](const RaInterval& iv) { return ra >= iv.lo && ra < iv.hi; });
}

RaWindow ra_window(double center_ra_deg, double halfwidth_deg) {
  if (!(halfwidth_deg >= 0.0 && halfwidth_deg <= 180.0)) throw DomainError("ra half-width outside [0, 180]");
  if (halfwidth_deg >= 180.0) return RaWindow::full_circle();
  const double center = normalize_ra(center_ra_deg);
  const double lo = center - halfwidth_deg;
  const double hi = center + halfwidth_deg;
  if (lo < 0.0) return RaWindow({RaInterval{lo + 360.0, 360.0}, RaInterval{0.0, hi}}, 2);
  if (hi > 360.0) return RaWindow({RaInterval{lo, 360.0}, RaInterval{0.0, hi - 360.0}}, 2);
  return RaWindow({RaInterval{lo, hi}, RaInterval{}}, 1);
}

}  // namespace zonex
