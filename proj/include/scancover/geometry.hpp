#pragma once

#include <cmath>
#include <numbers>

namespace scancover {

// Absolute tolerance, in degrees, for every angle and time comparison.
inline constexpr double kAngleTolerance = 1e-9;

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  return n > 0.0 ? (1.0 / n) * a : a;
}

// Unsigned angle between two directions in [0, 180] degrees. atan2 of the
// cross and dot products stays accurate near 0 and 180, unlike acos.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return rad_to_deg(std::atan2(norm(cross(a, b)), dot(a, b)));
}

// Planar heading measured counterclockwise from the positive x-axis.
inline Vec3 heading_vector(double degrees) {
  const double r = deg_to_rad(degrees);
  return {std::cos(r), std::sin(r), 0.0};
}

// Heading angle of a planar direction, in [0, 360).
inline double heading_degrees(const Vec3& v) {
  double a = rad_to_deg(std::atan2(v.y, v.x));
  if (a < 0.0) a += 360.0;
  if (a >= 360.0) a -= 360.0;
  return a;
}

// Reduces an angle to [0, 360).
inline double wrap_degrees(double a) {
  a = std::fmod(a, 360.0);
  if (a < 0.0) a += 360.0;
  if (a >= 360.0) a -= 360.0;
  return a;
}

}  // namespace scancover
