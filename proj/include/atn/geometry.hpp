#pragma once

// Planar positions and coverage footprints. Earth curvature is ignored: at
// scenario scales (a few hundred km, platform altitudes up to the
// stratosphere) the flat-plane error is negligible.

#include <cmath>
#include <numbers>

#include "atn/errors.hpp"

namespace atn {

// Local planar coordinates: km east (x) and km north (y).
struct GeoPoint {
  double x_km = 0.0;
  double y_km = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

inline double distance(const GeoPoint& a, const GeoPoint& b) {
  return std::hypot(b.x_km - a.x_km, b.y_km - a.y_km);
}

// Ground disk served by an aerial platform. Footprints are perfect disks;
// achievable capacity is uniform anywhere inside.
struct Footprint {
  GeoPoint center;
  double radius_km = 0.0;
  double area_km2 = 0.0;  // pi * radius^2

  friend bool operator==(const Footprint&, const Footprint&) = default;
};

inline Footprint make_footprint(GeoPoint center, double radius_km) {
  if (!(radius_km > 0.0)) throw ValidationError("footprint: radius must be > 0");
  return Footprint{center, radius_km, std::numbers::pi * radius_km * radius_km};
}

// Radius of the disk seen above the minimum elevation angle from altitude.
inline double footprint_radius(double altitude_m, double min_elevation_deg) {
  if (!(altitude_m > 0.0)) throw ValidationError("footprint_radius: altitude must be > 0");
  if (!(min_elevation_deg > 0.0 && min_elevation_deg < 90.0))
    throw ValidationError("footprint_radius: elevation must be in (0, 90) degrees");
  const double altitude_km = altitude_m / 1000.0;
  return altitude_km / std::tan(min_elevation_deg * std::numbers::pi / 180.0);
}

inline double footprint_area(double radius_km) {
  if (!(radius_km > 0.0)) throw ValidationError("footprint_area: radius must be > 0");
  return std::numbers::pi * radius_km * radius_km;
}

inline double radius_from_area(double area_km2) {
  if (!(area_km2 > 0.0)) throw ValidationError("radius_from_area: area must be > 0");
  return std::sqrt(area_km2 / std::numbers::pi);
}

// Minimum elevation angle consistent with an altitude / footprint-radius
// pair. This is a derived calibration, not a measured value.
inline double min_elevation_for(double altitude_m, double radius_km) {
  if (!(altitude_m > 0.0)) throw ValidationError("min_elevation_for: altitude must be > 0");
  if (!(radius_km > 0.0)) throw ValidationError("min_elevation_for: radius must be > 0");
  return std::atan2(altitude_m / 1000.0, radius_km) * 180.0 / std::numbers::pi;
}

// Fraction of the disaster area covered by lap_count footprints, assuming
// zero overlap.
inline double coverage_ratio(int lap_count, double footprint_area_km2,
                             double disaster_area_km2) {
  if (lap_count < 0) throw ValidationError("coverage_ratio: lap_count must be >= 0");
  if (!(footprint_area_km2 > 0.0))
    throw ValidationError("coverage_ratio: footprint area must be > 0");
  if (!(disaster_area_km2 > 0.0))
    throw ValidationError("coverage_ratio: disaster area must be > 0");
  return lap_count * footprint_area_km2 / disaster_area_km2;
}

}  // namespace atn
