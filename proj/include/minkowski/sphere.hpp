#pragma once

#include "minkowski/norm.hpp"
#include "minkowski/norm_json.hpp"

#include <vector>

namespace minkowski {

struct AngleInterval {
  double lo;
  double hi;
};

/// A closed subset of a planar unit sphere, stored as disjoint angle
/// intervals in [0, 2*pi). Single points are intervals with lo == hi.
/// Three-dimensional arcs carry an explicit point list instead.
class ArcSet {
 public:
  ArcSet() = default;

  /// Normalizes raw arcs (any real lo <= hi, width <= 2*pi) into [0, 2*pi),
  /// splitting at 2*pi and merging gaps narrower than kTol.arc_merge.
  static ArcSet from_arcs(const Norm& norm, std::vector<AngleInterval> arcs);
  static ArcSet from_points(const Norm& norm, std::vector<Vec> points);

  const std::vector<AngleInterval>& intervals() const { return intervals_; }
  const std::vector<Vec>& points() const { return points_; }
  std::uint64_t owner() const { return owner_; }
  bool empty() const { return intervals_.empty() && points_.empty(); }

  bool contains(double theta, double slack = 0.0) const;
  /// Total angular measure.
  double measure() const;
  /// The set rotated by pi, i.e. {-x : x in this}.
  ArcSet negated() const;
  /// Circular distance from theta to the set.
  double distance_to(double theta) const;

  json to_json() const;

 private:
  std::uint64_t owner_ = 0;
  std::vector<AngleInterval> intervals_;
  std::vector<Vec> points_;
};

/// Hausdorff distance between two planar arc sets in the circular angle metric.
double hausdorff_distance(const ArcSet& a, const ArcSet& b);

/// Chordal metric ||p - q||.
double sphere_distance(const Norm& norm, const SpherePoint& p, const SpherePoint& q);

/// D(x) = {x' in S : ||x - x'|| = 2}. Always contains -x.
ArcSet dset(const Norm& norm, const SpherePoint& x);

/// {x' in S : [x, x'] lies in S}. Always contains x.
ArcSet star(const Norm& norm, const SpherePoint& x);

/// True when D(x) equals D(x') for the probes x' at sphere distance `radius`
/// on both sides of x.
bool is_flat(const Norm& norm, const SpherePoint& x, double radius = 1e-3);

/// Segment [a, b] contained in the sphere.
struct SegmentInSphere {
  SpherePoint a;
  SpherePoint b;
  double length = 0.0;  // ||a - b|| in the owning norm
  bool maximal = false;
  bool long_segment = false;  // length >= 1
};

/// Builds a segment, checking that its midpoint is on the sphere.
SegmentInSphere make_segment(const Norm& norm, const SpherePoint& a, const SpherePoint& b,
                             bool maximal = false);

/// The faces of a polygonal sphere.
std::vector<SegmentInSphere> maximal_segments(const Norm& norm);

struct BisectorPoints {
  SpherePoint plus;
  SpherePoint minus;
  bool unique = true;
  double tie_width = 0.0;  // angular width of the tie interval when not unique
};

/// The symmetric bisector Bis(x) of a planar sphere: +-z with ||z - x|| = ||z + x||.
BisectorPoints bisector_points(const Norm& norm, const SpherePoint& x);

/// | ||x + z|| - ||x - z|| | <= tol.
bool is_isosceles_orthogonal(const Norm& norm, const Vec& x, const Vec& z, double tol = kTol.eval);

/// Length of the unit sphere in its own norm from an inscribed polygon with
/// `resolution` equiangular vertices (plus the sphere's own corners).
double self_circumference(const Norm& norm, int resolution);

}  // namespace minkowski
