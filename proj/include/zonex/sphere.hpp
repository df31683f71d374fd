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
// Spherical geometry for the zone index: declination zoning, great-circle
// separation and the right-ascension search window used by every neighbour
// query. All angles are in degrees.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace zonex {

inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kRadToDeg = 180.0 / std::numbers::pi;
inline constexpr double kArcminDeg = 1.0 / 60.0;
inline constexpr double kArcsecDeg = 1.0 / 3600.0;

/// Default zone height: 4 arcminutes.
inline constexpr double kDefaultZoneHeightDeg = 4.0 * kArcminDeg;

/// Wrap an arbitrary finite ra into [0, 360).
double normalize_ra(double ra_deg);

/// A position on the celestial sphere. ra is normalized into [0, 360) on
/// construction; a dec outside [-90, 90] (or any non-finite value) throws
/// DomainError.
class SkyPoint {
 public:
  constexpr SkyPoint() = default;
  SkyPoint(double ra_deg, double dec_deg);

  double ra() const { return ra_; }
  double dec() const { return dec_; }

  friend bool operator==(const SkyPoint&, const SkyPoint&) = default;

 private:
  double ra_ = 0.0;
  double dec_ = 0.0;
};

struct ZoneId {
  std::int32_t index = 0;

  friend auto operator<=>(const ZoneId&, const ZoneId&) = default;
};

/// Inclusive range of zones. `first > last` encodes an empty range.
struct ZoneRange {
  ZoneId first;
  ZoneId last;

  bool empty() const { return first.index > last.index; }
  std::size_t size() const {
    return empty() ? 0 : static_cast<std::size_t>(last.index - first.index + 1);
  }
  bool contains(ZoneId z) const { return first <= z && z <= last; }

  friend bool operator==(const ZoneRange&, const ZoneRange&) = default;
};

/// Zone height plus the derived number of zones, ceil(180 / height).
class ZoneConfig {
 public:
  explicit ZoneConfig(double height_deg = kDefaultZoneHeightDeg);

  double height_deg() const { return height_deg_; }
  std::int32_t zone_count() const { return zone_count_; }
  ZoneRange all_zones() const { return {ZoneId{0}, ZoneId{zone_count_ - 1}}; }

  friend bool operator==(const ZoneConfig&, const ZoneConfig&) = default;

 private:
  double height_deg_;
  std::int32_t zone_count_;
};

/// Declination extent of one zone: [lo, hi), or [lo, hi] for the last zone.
struct DecRange {
  double lo;
  double hi;
  bool hi_closed;

  bool contains(double dec) const { return dec >= lo && (hi_closed ? dec <= hi : dec < hi); }
};

/// floor((dec + 90) / h), clamped so that dec = +90 lands in the last zone.
ZoneId zone_of(double dec_deg, const ZoneConfig& cfg);

/// The declinations belonging to zone `z`. The bounds are snapped to the
/// floating-point values at which zone_of changes, so `zone_of(d) == z` holds
/// for exactly the d the range contains.
DecRange zone_dec_range(ZoneId z, const ZoneConfig& cfg);

/// Smallest contiguous zone range covering the declination band [lo, hi].
/// Both ends are clamped to [-90, 90] first.
ZoneRange zones_overlapping(double dec_lo_deg, double dec_hi_deg, const ZoneConfig& cfg);

/// Great-circle distance in [0, 180] degrees (haversine with an atan2 finish,
/// so it stays accurate near both 0 and 180 degrees). Exactly symmetric.
double angular_separation(const SkyPoint& p, const SkyPoint& q);

/// Half-width in ra that any point within `radius` of a point at declination
/// `dec` can differ by. Returns 180 (the whole circle) when |dec| + radius
/// reaches a pole, otherwise radius / cos(|dec| + radius).
double ra_halfwidth(double radius_deg, double dec_deg);

struct RaInterval {
  double lo;  // inclusive
  double hi;  // exclusive

  double width() const { return hi - lo; }
  friend bool operator==(const RaInterval&, const RaInterval&) = default;
};

/// One or two disjoint half-open ra intervals inside [0, 360).
class RaWindow {
 public:
  static RaWindow full_circle() { return RaWindow({RaInterval{0.0, 360.0}}, 1); }

  std::size_t size() const { return count_; }
  const RaInterval& operator[](std::size_t i) const { return intervals_[i]; }
  const RaInterval* begin() const { return intervals_.data(); }
  const RaInterval* end() const { return intervals_.data() + count_; }

  bool is_full_circle() const { return count_ == 1 && intervals_[0].lo <= 0.0 && intervals_[0].hi >= 360.0; }
  double total_width() const;

  /// Membership of an arbitrary ra; the argument is normalized first.
  bool contains(double ra_deg) const;

 private:
  friend RaWindow ra_window(double center_ra_deg, double halfwidth_deg);
  RaWindow(std::array<RaInterval, 2> iv, std::size_t n) : intervals_(iv), count_(n) {}

  std::array<RaInterval, 2> intervals_{};
  std::size_t count_ = 0;
};

/// The window [center - halfwidth, center + halfwidth] folded into [0, 360).
RaWindow ra_window(double center_ra_deg, double halfwidth_deg);

}  // namespace zonex
