#include "vlnaug/view_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "vlnaug/error.hpp"

namespace vlnaug::geometry {

HeadingResult heading_to(const Vec3& from, const Vec3& to) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  if (dx == 0.0 && dy == 0.0) return {0.0, true};
  return {normalize_heading(std::atan2(dx, dy)), false};
}

double elevation_to(const Vec3& from, const Vec3& to) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const double dz = to.z - from.z;
  const double horizontal = std::hypot(dx, dy);
  if (horizontal == 0.0) {
    if (dz > 0.0) return kPi / 2.0;
    if (dz < 0.0) return -kPi / 2.0;
    return 0.0;
  }
  return std::atan2(dz, horizontal);
}

double wrap_angle(double x) {
  if (!std::isfinite(x)) throw Error("wrap_angle: non-finite angle");
  // nearbyint honours the default round-half-to-even mode.
  double r = x - kTwoPi * std::nearbyint(x / kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r -= kTwoPi;
  return r;
}

double normalize_heading(double x) {
  if (!std::isfinite(x)) throw Error("normalize_heading: non-finite angle");
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // r + 2π can round up to exactly 2π for tiny negative r.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double relative_bearing(double viewer_heading, double target_heading) {
  return wrap_angle(target_heading - viewer_heading);
}

double projected_area(const Vec3& radii) {
  double r[3] = {radii.x, radii.y, radii.z};
  std::sort(r, r + 3);
  return 4.0 * r[2] * r[1];
}

void validate(const FovConfig& fov) {
  if (!(fov.half_width > 0.0 && fov.half_width <= kPi)) {
    throw Error("fov half_width must lie in (0, pi]");
  }
  if (!(fov.elevation_lo < fov.elevation_hi)) {
    throw Error("fov elevation_lo must be below elevation_hi");
  }
}

bool in_fov(double bearing, double elevation, const FovConfig& fov) {
  return std::abs(bearing) <= fov.half_width && elevation >= fov.elevation_lo &&
         elevation <= fov.elevation_hi;
}

}  // namespace vlnaug::geometry
