#include "minkowski/convexity.hpp"

#include "minkowski/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minkowski {

namespace {

// Midpoint deficits below this are rounding, not geometry.
constexpr double kFlatModulus = 5e-13;

// 1 - ||b1 + b2|| / 2 at the two points b2 with ||b1 - b2|| = eps, b1 = s(theta).
// Along the sphere ||b1 - s|| grows monotonically away from b1 and ||b1 + s||
// shrinks, so the smallest deficit over ||b1 - b2|| >= eps is at one of them.
double deficit_at(const Norm& norm, double theta, double eps) {
  const Vec b1 = radial_point(norm, theta).v;
  double best = std::numeric_limits<double>::infinity();
  for (double dir : {1.0, -1.0}) {
    const double t = numeric::find_transition(
        [&](double u) { return norm(b1 - radial_point(norm, u).v) >= eps; }, theta,
        theta + dir * kPi, 1e-15);
    const Vec b2 = radial_point(norm, t).v;
    best = std::min(best, 1.0 - 0.5 * norm(b1 + b2));
  }
  return best;
}

double planar_modulus(const Norm& norm, double eps, int resolution) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(resolution) + norm.vertices().size());
  for (int k = 0; k < resolution; ++k) grid.push_back(kTwoPi * k / resolution);
  for (const auto& v : norm.vertices()) grid.push_back(angle_of(Vec(v)));
  std::sort(grid.begin(), grid.end());

  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = deficit_at(norm, grid[i], eps);
    if (d < best) {
      best = d;
      arg = i;
    }
  }
  if (best <= kFlatModulus) return 0.0;

  const std::size_t m = grid.size();
  double lo = grid[(arg + m - 1) % m];
  double hi = grid[(arg + 1) % m];
  if (lo > grid[arg]) lo -= kTwoPi;
  if (hi < grid[arg]) hi += kTwoPi;
  const auto [t, refined] =
      numeric::golden_minimize([&](double th) { return deficit_at(norm, th, eps); }, lo, hi, 1e-12);
  (void)t;
  best = std::min(best, refined);
  return best <= kFlatModulus ? 0.0 : std::max(best, 0.0);
}

// Orthonormal 3x2 frame of the plane with normal n.
Eigen::MatrixXd plane_frame(const Eigen::Vector3d& n) {
  const Eigen::Vector3d helper =
      std::abs(n.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d u = n.cross(helper).normalized();
  const Eigen::Vector3d w = n.cross(u).normalized();
  Eigen::MatrixXd m(3, 2);
  m.col(0) = u;
  m.col(1) = w;
  return m;
}

}  // namespace

double euclidean_modulus(double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); }

double modulus_of_convexity(const Norm& norm, double eps, int resolution, int plane_samples) {
  if (!(eps > 0.0 && eps <= 2.0)) throw PreconditionError("modulus_of_convexity: eps must be in (0, 2]");
  if (resolution < 8) throw PreconditionError("modulus_of_convexity: resolution too small");
  if (norm.dim() == 2) return planar_modulus(norm, eps, resolution);

  // Fibonacci normals on the upper hemisphere plus the coordinate planes.
  std::vector<Eigen::Vector3d> normals{Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY(),
                                       Eigen::Vector3d::UnitZ()};
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < plane_samples; ++k) {
    const double z = (k + 0.5) / plane_samples;
    const double r = std::sqrt(1.0 - z * z);
    normals.emplace_back(r * std::cos(golden * k), r * std::sin(golden * k), z);
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& n : normals) {
    best = std::min(best, planar_modulus(Norm::linear(norm, plane_frame(n)), eps, resolution));
    if (best == 0.0) break;
  }
  return best;
}

ModulusCurve modulus_curve(const Norm& norm, const std::vector<double>& eps_values,
                           int resolution) {
  ModulusCurve c;
  c.owner = norm.id();
  for (double e : eps_values) c.samples.emplace_back(e, modulus_of_convexity(norm, e, resolution));
  return c;
}

bool is_strictly_convex(const Norm& norm, int resolution) {
  require_planar(norm, "is_strictly_convex");
  if (resolution < 64) throw PreconditionError("is_strictly_convex needs resolution >= 64");
  std::vector<double> grid;
  for (int k = 0; k < resolution; ++k) grid.push_back(kTwoPi * k / resolution);
  for (const auto& v : norm.vertices()) grid.push_back(angle_of(Vec(v)));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto midpoint_norm = [&](double a, double b) {
    return norm(0.5 * (radial_point(norm, a).v + radial_point(norm, b).v));
  };
  const std::size_t m = grid.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double a = grid[i];
    double b = grid[(i + 1) % m];
    if (b <= a) b += kTwoPi;
    const double mid = midpoint_norm(a, b);
    if (mid >= 1.0 - 1e-10) return false;
    if (mid < 1.0 - 1e-6) continue;
    // Nearly flat cell: slide a window of the same width across it to catch
    // segments shorter than the grid step that straddle a grid point.
    const double w = b - a;
    for (int k = 1; k < 8; ++k) {
      const double s = a - w + 2.0 * w * k / 8.0;
      if (midpoint_norm(s, s + w) >= 1.0 - 1e-10) return false;
    }
  }
  return true;
}

}  // namespace minkowski
