#include "minkowski/coordinates.hpp"

#include "minkowski/numeric.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace minkowski {

namespace {

constexpr double kSameVector = 1e-12;

std::string describe(const Vec& v) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (int i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ")";
  return os.str();
}

std::optional<std::size_t> find_source(const SphereMapSample& map, const Vec& v) {
  for (std::size_t i = 0; i < map.pairs.size(); ++i) {
    const Vec& s = map.pairs[i].first.v;
    if (s.size() == v.size() && (s - v).lpNorm<Eigen::Infinity>() <= kSameVector) return i;
  }
  return std::nullopt;
}

}  // namespace

CoordinateChart::CoordinateChart(Norm norm, std::vector<SpherePoint> basis, Eigen::MatrixXd matrix,
                                 Eigen::MatrixXd inverse, Norm induced, double condition)
    : norm_(std::move(norm)),
      basis_(std::move(basis)),
      matrix_(std::move(matrix)),
      inverse_(std::move(inverse)),
      induced_(std::move(induced)),
      condition_(condition) {}

Vec CoordinateChart::forward(const Vec& v) const {
  if (v.size() != norm_.dim()) throw DimensionError("chart forward: wrong dimension");
  return Vec(inverse_ * v);
}

Vec CoordinateChart::inverse(const Vec& c) const {
  if (c.size() != norm_.dim()) throw DimensionError("chart inverse: wrong dimension");
  return Vec(matrix_ * c);
}

CoordinateChart make_chart(const Norm& norm, std::vector<SpherePoint> basis) {
  const int n = norm.dim();
  if (static_cast<int>(basis.size()) != n) {
    throw PreconditionError("make_chart needs exactly " + std::to_string(n) + " basis vectors");
  }
  Eigen::MatrixXd m(n, n);
  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const auto& b = basis[static_cast<std::size_t>(i)];
    if (b.v.size() != n) throw DimensionError("make_chart: basis vector has the wrong dimension");
    if (std::abs(norm(b.v) - 1.0) > kTol.search) {
      throw PreconditionError("make_chart: basis vector " + describe(b.v) + " is not on the sphere");
    }
    m.col(i) = b.v;
    scale *= b.v.norm();
  }
  const double det = m.determinant();
  if (std::abs(det) < kTol.eval * scale) {
    std::string names;
    for (const auto& b : basis) names += (names.empty() ? "" : ", ") + describe(b.v);
    throw PreconditionError("make_chart: dependent basis {" + names + "}");
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double condition = sv(0) / sv(sv.size() - 1);
  Eigen::MatrixXd inv = m.inverse();
  Norm induced = Norm::linear(norm, m);
  return CoordinateChart(norm, std::move(basis), std::move(m), std::move(inv), std::move(induced),
                         condition);
}

SphereMapSample make_map_sample(const Norm& source, const Norm& target,
                                std::vector<std::pair<Vec, Vec>> pairs) {
  SphereMapSample out{source, target, {}};
  out.pairs.reserve(pairs.size());
  for (auto& [x, y] : pairs) {
    out.pairs.emplace_back(on_sphere(source, x, kTol.search), on_sphere(target, y, kTol.search));
  }
  return out;
}

SphereMapSample sample_map(const Norm& source, const Norm& target,
                           const std::function<Vec(const Vec&)>& tau, int n,
                           const std::vector<Vec>& extra) {
  require_planar(source, "sample_map");
  if (n < 2 || n % 2 != 0) throw PreconditionError("sample_map needs an even sample count");
  std::vector<Vec> sources;
  sources.reserve(static_cast<std::size_t>(n) + 2 * extra.size());
  std::vector<Vec> half;
  for (int k = 0; k < n / 2; ++k) half.push_back(radial_point(source, kTwoPi * k / n).v);
  for (const auto& v : extra) half.push_back(v);
  for (const auto& v : half) sources.push_back(v);
  for (const auto& v : half) sources.push_back(-v);
  std::vector<std::pair<Vec, Vec>> pairs;
  pairs.reserve(sources.size());
  for (const auto& x : sources) pairs.emplace_back(x, tau(x));
  return make_map_sample(source, target, std::move(pairs));
}

json LinearityReport::to_json() const {
  json j{{"max_defect", max_defect}, {"samples", samples}};
  j["antipodal_defect"] = antipodal_defect ? json(*antipodal_defect) : json(nullptr);
  j["basis_defect"] = basis_defect;
  j["condition_x"] = condition_x;
  j["condition_y"] = condition_y;
  return j;
}

LinearityReport linearity_defect(const SphereMapSample& map, const CoordinateChart& chart_x,
                                 const CoordinateChart& chart_y) {
  if (!chart_x.norm().same_as(map.source) || !chart_y.norm().same_as(map.target)) {
    throw PreconditionError("linearity_defect: charts are not built on the map's spheres");
  }
  if (chart_x.norm().dim() != chart_y.norm().dim()) {
    throw DimensionError("linearity_defect: source and target dimensions differ");
  }
  LinearityReport r;
  r.samples = map.pairs.size();
  r.condition_x = chart_x.condition_number();
  r.condition_y = chart_y.condition_number();
  for (std::size_t i = 0; i < chart_x.basis().size(); ++i) {
    const Vec& xi = chart_x.basis()[i].v;
    const auto idx = find_source(map, xi);
    if (!idx) {
      throw PreconditionError("linearity_defect: basis vector " + describe(xi) +
                              " is not among the sampled sources");
    }
    const Vec& image = map.pairs[*idx].second.v;
    r.basis_defect = std::max(r.basis_defect, map.target(image - chart_y.basis()[i].v));
  }
  for (const auto& [x, y] : map.pairs) {
    const Vec d = chart_y.forward(y.v) - chart_x.forward(x.v);
    r.max_defect = std::max(r.max_defect, d.norm());
  }
  try {
    r.antipodal_defect = antipodality_defect(map);
  } catch (const PreconditionError&) {
    r.antipodal_defect.reset();
  }
  return r;
}

double antipodality_defect(const SphereMapSample& map) {
  double worst = 0.0;
  for (const auto& [x, y] : map.pairs) {
    const auto idx = find_source(map, -x.v);
    if (!idx) {
      throw PreconditionError("antipodality_defect: no sampled antipode for " + describe(x.v));
    }
    worst = std::max(worst, map.target(y.v + map.pairs[*idx].second.v));
  }
  return worst;
}

InjectivityResult monotonicity_injectivity(const Norm& norm, const SpherePoint& u1,
                                           const SpherePoint& u2, int resolution,
                                           double collision_tol) {
  require_planar(norm, "monotonicity_injectivity");
  if (resolution < 16) throw PreconditionError("monotonicity_injectivity needs resolution >= 16");
  Eigen::Matrix2d basis;
  basis << u1.v(0), u2.v(0), u1.v(1), u2.v(1);
  if (std::abs(basis.determinant()) < kTol.eval) {
    throw PreconditionError("monotonicity_injectivity: u1, u2 are not a basis");
  }
  const auto n = static_cast<std::size_t>(resolution);
  std::vector<SpherePoint> pts;
  std::vector<Eigen::Vector4d> tuples;
  pts.reserve(n);
  tuples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    pts.push_back(radial_point(norm, kTwoPi * static_cast<double>(k) / resolution));
    const Vec& v = pts.back().v;
    tuples.emplace_back(norm(v + u1.v), norm(v - u1.v), norm(v + u2.v), norm(v - u2.v));
  }
  InjectivityResult out;
  out.resolution = resolution;
  out.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 4; j < n; ++j) {
      if (n - (j - i) < 4) break;
      const double d = (tuples[i] - tuples[j]).lpNorm<Eigen::Infinity>();
      if (d < out.min_separation) {
        out.min_separation = d;
        if (d <= collision_tol && out.injective) {
          out.injective = false;
          out.witness = std::pair{pts[i], pts[j]};
        }
      }
    }
  }
  return out;
}

bool determine_from_arc(const Norm& norm, const ArcSet& arc, const Vec& p, const Vec& q,
                        double tol, int samples_per_interval) {
  if (arc.empty()) throw PreconditionError("determine_from_arc: empty arc");
  if (arc.owner() != norm.id()) throw PreconditionError("determine_from_arc: arc of another sphere");
  auto separates = [&](const Vec& u) { return std::abs(norm(u - p) - norm(u - q)) > tol; };
  const int m = std::max(samples_per_interval, 2);
  for (const auto& iv : arc.intervals()) {
    if (iv.hi - iv.lo <= 0.0) {
      if (separates(radial_point(norm, iv.lo).v)) return true;
      continue;
    }
    for (int k = 0; k < m; ++k) {
      const double t = iv.lo + (iv.hi - iv.lo) * k / (m - 1);
      if (separates(radial_point(norm, t).v)) return true;
    }
  }
  for (const auto& u : arc.points()) {
    if (separates(u)) return true;
  }
  return false;
}

ConeCheck cone_distance_check(const Norm& norm, double lambda, const Vec2& p, const Vec2& q,
                              double tol) {
  require_planar(norm, "cone_distance_check");
  if (!(lambda > 0.0)) throw PreconditionError("cone_distance_check: lambda must be positive");
  for (double a : {-lambda, 0.0, lambda}) {
    if (std::abs(norm(vec2(a, 1.0)) - 1.0) > kTol.search) {
      throw PreconditionError("cone_distance_check: the sphere does not contain [-lambda, lambda] x {1}");
    }
  }
  ConeCheck c;
  const Vec2 d = p - q;
  c.distance = norm(Vec(d));
  c.vertical_gap = std::abs(d.y());
  c.in_cone = std::abs(d.x()) <= lambda * std::abs(d.y());
  c.law_holds = c.in_cone && std::abs(c.distance - c.vertical_gap) <= tol;
  return c;
}

double reconstruct_alpha(double delta, double beta, double lambda) {
  return delta + (1.0 + beta) * lambda;
}

double leftmost_intersection(const Norm& norm, const Vec2& center, double radius, double height) {
  require_planar(norm, "leftmost_intersection");
  auto dist = [&](double a) { return norm(vec2(a - center.x(), height - center.y())); };
  // dist is convex in a; grow a bracket around the centre until it holds the minimum.
  double half = std::max(1.0, radius + std::abs(height - center.y()));
  while (dist(center.x() - half) <= dist(center.x()) && half < 1e12) half *= 2.0;
  const auto [amin, dmin] =
      numeric::golden_minimize(dist, center.x() - half, center.x() + half, 1e-14 * half);
  if (dmin > radius) {
    throw PreconditionError("leftmost_intersection: the line misses the ball");
  }
  double left = amin - half;
  while (dist(left) <= radius) left -= half;
  return numeric::find_transition([&](double a) { return dist(a) <= radius; }, left, amin, 0.0);
}

}  // namespace minkowski
