#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace minkowski {

// Vectors of dimension 2 or 3 without heap allocation.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

inline Vec2 as_vec2(const Vec& v) { return Vec2(v(0), v(1)); }

/// Angle of a planar vector in [0, 2*pi).
inline double angle_of(const Vec& v) {
  double a = std::atan2(v(1), v(0));
  return a < 0.0 ? a + kTwoPi : a;
}

/// Maps an angle into [0, 2*pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A norm description that does not define a norm.
class NormSpecError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Every numeric tolerance used by the library lives here.
struct Tolerances {
  double eval = 1e-12;        // sphere membership, distance-2 tests
  double search = 1e-10;      // geometric search and certification
  double arc_merge = 1e-9;    // ArcSet intervals closer than this are merged
  double arc_point = 1e-5;    // arcs narrower than this collapse to a point
  double flat = 1e-6;         // Hausdorff tolerance between D-sets in is_flat
  double angle = 1e-13;       // bisection width in angle
  double match = 1e-6;        // chord-matrix alignment
  double injectivity = 1e-6;  // four-distance collision tolerance
};

inline constexpr Tolerances kTol{};

}  // namespace minkowski
