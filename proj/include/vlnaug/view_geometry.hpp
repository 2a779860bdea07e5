#pragma once

#include <numbers>

#include "vlnaug/vec3.hpp"

// Angles follow the simulator state convention: heading is measured clockwise
// from +Y in the horizontal plane, elevation is positive above the horizon.
namespace vlnaug::geometry {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct HeadingResult {
  double value = 0.0;  // [0, 2π)
  bool degenerate = false;  // no horizontal displacement; value is 0
};

HeadingResult heading_to(const Vec3& from, const Vec3& to);
double elevation_to(const Vec3& from, const Vec3& to);

// Maps into (−π, π]; ties at odd multiples of π resolve to +π.
// Throws vlnaug::Error for non-finite input.
double wrap_angle(double x);

// Normalizes into [0, 2π).
double normalize_heading(double x);

// Positive when target lies clockwise (to the right) of the viewer heading.
double relative_bearing(double viewer_heading, double target_heading);

// 4 · r_a · r_b over the two largest half-extents.
double projected_area(const Vec3& radii);

struct FovConfig {
  double half_width = kPi / 3.0;
  double elevation_lo = -kPi / 6.0;
  double elevation_hi = kPi / 6.0;

  friend bool operator==(const FovConfig&, const FovConfig&) = default;
};

// Throws vlnaug::Error when the config breaks its invariants.
void validate(const FovConfig& fov);

// Closed bounds on both the bearing and the elevation band.
bool in_fov(double bearing, double elevation, const FovConfig& fov);

}  // namespace vlnaug::geometry
