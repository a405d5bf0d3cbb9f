#pragma once

#include "minkowski/norm.hpp"
#include "minkowski/norm_json.hpp"
#include "minkowski/sphere.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace minkowski {

/// Identification of a normed space with R^n through a basis taken from its
/// unit sphere: forward(basis[i]) = e_i and the induced norm is
/// ||c||' = ||sum c_i basis[i]||.
class CoordinateChart {
 public:
  const Norm& norm() const { return norm_; }
  const std::vector<SpherePoint>& basis() const { return basis_; }
  const Norm& induced_norm() const { return induced_; }
  /// Coordinates of v in the basis.
  Vec forward(const Vec& v) const;
  /// The vector with coordinates c.
  Vec inverse(const Vec& c) const;
  /// Spectral condition number of the basis matrix; not capped.
  double condition_number() const { return condition_; }

 private:
  friend CoordinateChart make_chart(const Norm& norm, std::vector<SpherePoint> basis);
  CoordinateChart(Norm norm, std::vector<SpherePoint> basis, Eigen::MatrixXd matrix,
                  Eigen::MatrixXd inverse, Norm induced, double condition);

  Norm norm_;
  std::vector<SpherePoint> basis_;
  Eigen::MatrixXd matrix_;
  Eigen::MatrixXd inverse_;
  Norm induced_;
  double condition_;
};

/// Throws PreconditionError for a dependent basis or points off the sphere.
CoordinateChart make_chart(const Norm& norm, std::vector<SpherePoint> basis);

/// Sampled map between unit spheres: (x, tau(x)) pairs.
struct SphereMapSample {
  Norm source;
  Norm target;
  std::vector<std::pair<SpherePoint, SpherePoint>> pairs;
};

/// Checks that every source lies on S_X and every image on S_Y (1e-10).
SphereMapSample make_map_sample(const Norm& source, const Norm& target,
                                std::vector<std::pair<Vec, Vec>> pairs);

/// Samples tau at `n` equiangular points of a planar S_X; every point comes
/// together with its exact antipode. `extra` sources are appended (e.g. a
/// chart basis).
SphereMapSample sample_map(const Norm& source, const Norm& target,
                           const std::function<Vec(const Vec&)>& tau, int n,
                           const std::vector<Vec>& extra = {});

struct LinearityReport {
  double max_defect = 0.0;  // sup ||phi_Y(tau(x)) - phi_X(x)||_2
  std::optional<double> antipodal_defect;
  std::size_t samples = 0;
  double basis_defect = 0.0;  // sup ||tau(x_i) - y_i||_Y over the chart bases
  double condition_x = 0.0;
  double condition_y = 0.0;

  json to_json() const;
};

/// Coordinate test for linearity: the map is the restriction of a linear map
/// iff, read in the two charts, it is the identity. Throws PreconditionError
/// when a source-chart basis vector is not among the samples.
LinearityReport linearity_defect(const SphereMapSample& map, const CoordinateChart& chart_x,
                                 const CoordinateChart& chart_y);

/// sup ||tau(-x) + tau(x)||_Y. Throws PreconditionError when some sampled x
/// has no sampled antipode.
double antipodality_defect(const SphereMapSample& map);

struct InjectivityResult {
  bool injective = true;
  std::optional<std::pair<SpherePoint, SpherePoint>> witness;
  double min_separation = 0.0;  // closest 4-tuple sup-distance among far-apart samples
  int resolution = 0;
};

/// Whether v -> (||v + u1||, ||v - u1||, ||v + u2||, ||v - u2||) separates the
/// sampled sphere points that are at least four sampling steps apart.
InjectivityResult monotonicity_injectivity(const Norm& norm, const SpherePoint& u1,
                                           const SpherePoint& u2, int resolution = 4096,
                                           double collision_tol = kTol.injectivity);

/// True iff some sampled u in `arc` has | ||u - p|| - ||u - q|| | > tol.
bool determine_from_arc(const Norm& norm, const ArcSet& arc, const Vec& p, const Vec& q,
                        double tol = kTol.search, int samples_per_interval = 1024);

struct ConeCheck {
  double distance = 0.0;      // ||p - q||
  double vertical_gap = 0.0;  // |p_2 - q_2|
  bool in_cone = false;       // |p_1 - q_1| <= lambda |p_2 - q_2|
  bool law_holds = false;     // in_cone and distance == vertical_gap within tol
};

/// Distance law in the vertical cone for a sphere containing [-lambda, lambda] x {1}.
/// Throws PreconditionError if the sphere does not contain that segment.
ConeCheck cone_distance_check(const Norm& norm, double lambda, const Vec2& p, const Vec2& q,
                              double tol = kTol.eval);

/// alpha = delta + (1 + beta) lambda.
double reconstruct_alpha(double delta, double beta, double lambda);

/// Smallest a with ||(a, height) - center|| <= radius.
double leftmost_intersection(const Norm& norm, const Vec2& center, double radius, double height);

}  // namespace minkowski
