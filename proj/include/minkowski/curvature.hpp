#pragma once

#include "minkowski/norm.hpp"
#include "minkowski/norm_json.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minkowski {

/// A closed planar curve t -> point(t), t in [0, period).
struct Curve {
  std::function<Vec2(double)> point;
  double period = kTwoPi;
  std::string label;

  Vec2 operator()(double t) const { return point(t); }

  static Curve circle(Vec2 center, double radius);
  static Curve ellipse(Vec2 center, double a, double b);
  /// center + scale * S, parametrized by angle.
  static Curve norm_sphere(const Norm& norm, Vec2 center = Vec2::Zero(), double scale = 1.0);
  static Curve translated(const Curve& c, Vec2 offset);
};

/// "circle:<r>", "ellipse:<a>,<b>" or "sphere" (the ambient norm's own sphere).
Curve parse_curve(const std::string& text, const Norm& ambient);

struct CurvatureEstimate {
  std::optional<double> value;  // 2 sqrt(L); empty when divergent or L < 0
  std::vector<std::pair<double, double>> ratios;  // (delta, r(delta)), delta decreasing
  double limit = 0.0;                              // fitted L
  double fit_residual = 0.0;                       // RMS residual of the quadratic fit
  double log_slope = 0.0;                          // d log r / d log delta over the last 4 points
  bool divergent = false;
  bool negative_radicand = false;

  json to_json() const;
};

/// delta_k = 0.1 * 2^-k, k = 0..7.
std::vector<double> default_delta_schedule();

/// r(delta) = (2 delta - ||a - a'||) / delta^3 where a, a' are the two curve
/// points at distance delta from x = curve(t_x), fitted by
/// r = L + c1 delta + c2 delta^2 on the schedule. Throws PreconditionError
/// naming delta when the circle of radius delta around x does not cut the
/// curve in exactly two points.
CurvatureEstimate normed_curvature(const Norm& ambient, const Curve& curve, double t_x,
                                   const std::vector<double>& schedule = default_delta_schedule());

/// The two curve parameters (after, before t_x) at ambient distance delta.
std::pair<double, double> chord_points(const Norm& ambient, const Curve& curve, double t_x,
                                       double delta);

struct CornerRatio {
  double limit = 0.0;
  std::vector<std::pair<double, double>> ratios;  // (delta, ||a - a'|| / delta)
};

/// Extrapolated lim ||a - a'|| / delta on the norm's own sphere at x.
CornerRatio corner_ratio(const Norm& norm, const SpherePoint& x,
                         const std::vector<double>& schedule = default_delta_schedule());

/// Least-squares fit y = c0 + c1 x + c2 x^2; returns (c0, RMS residual).
std::pair<double, double> quadratic_intercept(const std::vector<std::pair<double, double>>& xy);

}  // namespace minkowski
