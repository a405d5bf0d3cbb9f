#pragma once

#include "minkowski/types.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace minkowski {

struct NormSpec;

/// A norm on R^2 or R^3, described declaratively and evaluated as a gauge.
///
/// Norm is a cheap, immutable handle. Copies share the same identity, which
/// is what SpherePoint and friends use to check that points belong to the
/// sphere they are handed to.
class Norm {
 public:
  /// (sum |x_i|^p)^(1/p); p may be +infinity.
  static Norm pnorm(double p, int dim = 2);
  /// lambda * Euclidean length. Its unit sphere has radius 1/lambda.
  static Norm euclidean(int dim = 2, double lambda = 1.0);
  /// Polygonal norm whose unit sphere has the given vertices. The vertices
  /// must be counterclockwise, centrally symmetric and strictly convex;
  /// violations are recorded (see defect()) and reported by validate_norm.
  static Norm polygon(std::vector<Vec2> vertices);
  /// max{|b|, |a| + |b|/2}: the hexagon with vertices +-(1,0), (+-1/2, +-1).
  static Norm hexagonal();
  /// l-infinity as a polygon (vertices (+-1, +-1)).
  static Norm square();
  /// l-1 as a polygon (vertices +-e1, +-e2).
  static Norm diamond();
  /// Intersection of two mirrored ellipses; the default has corners at (0, +-1).
  static Norm lens();
  static Norm lens(Vec2 center, Eigen::Matrix2d form);
  /// Surface of revolution of a planar profile around the first axis:
  /// ||(a, b, c)|| = profile(a, ||(b, c)||_2).
  static Norm revolution(Norm profile);
  /// ||v|| = |v|_2 / r(angle(v)). `radius` must be pi-periodic and bound a
  /// convex region; checked on construction.
  static Norm radial(std::function<double(double)> radius, std::string label = "radial");
  /// r(t) = a0 + sum_k c_k cos(2kt) + s_k sin(2kt).
  static Norm radial_harmonics(double a0, std::vector<double> cos_coeffs,
                               std::vector<double> sin_coeffs);
  /// ||c|| = base(M c) for an injective M (dim(base) rows).
  static Norm linear(Norm base, Eigen::MatrixXd matrix);

  int dim() const;
  double operator()(const Vec& v) const;
  double eval(const Vec& v) const { return (*this)(v); }

  const NormSpec& spec() const;
  std::string_view kind_name() const;
  std::uint64_t id() const;
  bool same_as(const Norm& other) const { return id() == other.id(); }

  /// Non-empty when the payload breaks a structural invariant.
  const std::optional<std::string>& defect() const;

  /// Vertices of the unit sphere for polygonal norms, empty otherwise.
  std::span<const Vec2> vertices() const;
  bool is_polygonal() const { return !vertices().empty(); }

  struct Impl;

 private:
  explicit Norm(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

namespace spec {
struct PNorm {
  double p;
  int dim;
};
struct Polygon {
  std::vector<Vec2> vertices;
};
struct Hexagonal {};
struct Lens {
  Vec2 center;           // the second ellipse is centred at -center
  Eigen::Matrix2d form;  // {x : (x - c)^T form (x - c) <= 1}
};
struct ScaledEuclidean {
  double lambda;
  int dim;
};
struct Revolution {
  Norm profile;
};
struct RadialGauge {
  std::function<double(double)> radius;
  std::string label;
  // Present when built from harmonics; used for serialization.
  std::optional<std::vector<double>> harmonics_cos;
  std::optional<std::vector<double>> harmonics_sin;
  double harmonics_a0 = 0.0;
};
struct Linear {
  Norm base;
  Eigen::MatrixXd matrix;
};
}  // namespace spec

struct NormSpec {
  std::variant<spec::PNorm, spec::Polygon, spec::Hexagonal, spec::Lens, spec::ScaledEuclidean,
               spec::Revolution, spec::RadialGauge, spec::Linear>
      payload;
};

/// A vector on the unit sphere of `owner`.
struct SpherePoint {
  Vec v;
  std::optional<double> theta;
  std::uint64_t owner = 0;

  SpherePoint operator-() const {
    SpherePoint p{-v, std::nullopt, owner};
    if (theta) p.theta = wrap_angle(*theta + kPi);
    return p;
  }
};

/// Wraps `v` as a sphere point; throws PreconditionError if | ||v|| - 1 | > tol.
SpherePoint on_sphere(const Norm& norm, const Vec& v, double tol = kTol.eval);
/// v / ||v||.
SpherePoint project_to_sphere(const Norm& norm, const Vec& v);
/// The sphere point in direction (cos theta, sin theta) of a planar norm.
SpherePoint radial_point(const Norm& norm, double theta);
/// Angle of a planar sphere point, taken from theta when present.
double angle_of(const SpherePoint& p);
/// Throws DimensionError unless norm.dim() == 2.
void require_planar(const Norm& norm, std::string_view op);

struct ValidationReport {
  int samples = 0;
  double triangle_violation = 0.0;     // max (||u+v|| - ||u|| - ||v||) / (||u|| + ||v||)
  double homogeneity_violation = 0.0;  // max | ||t v|| - t ||v|| | / (t ||v||)
  double symmetry_violation = 0.0;     // max | ||v|| - ||-v|| | / ||v||
  std::optional<std::string> invariant_failure;
  bool passed = false;
};

/// Samples the norm axioms with a fixed seed. Never throws for bad payloads.
ValidationReport validate_norm(const Norm& norm, int sample_count, std::uint64_t seed = 20240229);

}  // namespace minkowski
