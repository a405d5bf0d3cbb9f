#include "minkowski/norm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace minkowski {

struct Norm::Impl {
  NormSpec spec;
  int dim = 2;
  std::uint64_t id = 0;
  std::string kind;
  std::optional<std::string> defect;

  // Polygonal data: vertices sorted by angle, facet i joins vertex i and i+1
  // and satisfies normal_i . x = 1 on that facet.
  std::vector<Vec2> vertices;
  std::vector<double> angles;
  std::vector<Vec2> normals;

  // Lens data.
  Vec2 lens_center = Vec2::Zero();
  Eigen::Matrix2d lens_form = Eigen::Matrix2d::Identity();
  Vec2 lens_form_center = Vec2::Zero();
  double lens_c_form_c = 0.0;
};

namespace {

std::uint64_t next_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

// Representative of {v, -v} in the closed upper half-plane.
Vec2 canonical_half(Vec2 v) {
  if (v.y() < 0.0 || (v.y() == 0.0 && v.x() < 0.0)) return -v;
  return v;
}

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double pnorm_value(double p, const Vec& v) {
  const auto a = v.cwiseAbs();
  if (std::isinf(p)) return a.maxCoeff();
  if (p == 1.0) return a.sum();
  if (p == 2.0) {
    return v.size() == 2 ? std::hypot(a(0), a(1)) : std::hypot(a(0), a(1), a(2));
  }
  const double m = a.maxCoeff();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += std::pow(a(i) / m, p);
  return m * std::pow(s, 1.0 / p);
}

std::optional<std::string> polygon_defect(const std::vector<Vec2>& vs) {
  const std::size_t n = vs.size();
  if (n < 4 || n % 2 != 0) {
    return "polygon needs an even number (>= 4) of vertices, got " + std::to_string(n);
  }
  double scale = 0.0;
  for (const auto& v : vs) {
    if (!v.allFinite()) return std::string("polygon vertex is not finite");
    scale = std::max(scale, v.norm());
  }
  if (scale == 0.0) return std::string("polygon vertices are all zero");
  const double tol = 1e-12 * scale;
  for (std::size_t i = 0; i < n; ++i) {
    const bool has_opposite = std::any_of(vs.begin(), vs.end(), [&](const Vec2& w) {
      return (w + vs[i]).lpNorm<Eigen::Infinity>() <= tol;
    });
    if (!has_opposite) {
      std::ostringstream os;
      os << "polygon is not centrally symmetric: no opposite for vertex (" << vs[i].x() << ", "
         << vs[i].y() << ")";
      return os.str();
    }
  }
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = vs[(i + n - 1) % n];
    const Vec2& cur = vs[i];
    const Vec2& next = vs[(i + 1) % n];
    if (cross(cur - prev, next - cur) <= tol * scale) {
      std::ostringstream os;
      os << "polygon is not strictly convex and counterclockwise at vertex " << i;
      return os.str();
    }
    double step = std::atan2(cross(cur, next), cur.dot(next));
    if (step <= 0.0) return std::string("polygon vertices are not in counterclockwise order");
    turning += step;
  }
  if (std::abs(turning - kTwoPi) > 1e-9) {
    return std::string("polygon vertices wind around the origin more than once");
  }
  return std::nullopt;
}

void build_polygon(Norm::Impl& impl, const std::vector<Vec2>& vs) {
  impl.defect = polygon_defect(vs);
  impl.vertices = vs;
  if (impl.defect) return;
  const std::size_t n = vs.size();
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (angle_of(Vec(vs[i])) < angle_of(Vec(vs[start]))) start = i;
  }
  std::rotate(impl.vertices.begin(), impl.vertices.begin() + static_cast<std::ptrdiff_t>(start),
              impl.vertices.end());
  impl.angles.resize(n);
  impl.normals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = impl.vertices[i];
    const Vec2& b = impl.vertices[(i + 1) % n];
    const double det = cross(a, b);
    impl.normals[i] = Vec2((b.y() - a.y()) / det, (a.x() - b.x()) / det);
    impl.angles[i] = angle_of(Vec(a));
  }
}

double polygon_value(const Norm::Impl& impl, const Vec& v) {
  const Vec2 x = canonical_half(Vec2(v(0), v(1)));
  const double phi = std::atan2(x.y(), x.x());
  const auto n = static_cast<std::ptrdiff_t>(impl.angles.size());
  std::ptrdiff_t k = std::upper_bound(impl.angles.begin(), impl.angles.end(), phi) -
                     impl.angles.begin() - 1;
  if (k < 0) k = n - 1;
  double best = 0.0;
  for (std::ptrdiff_t d = -1; d <= 1; ++d) {
    const auto i = static_cast<std::size_t>((k + d + n) % n);
    best = std::max(best, impl.normals[i].dot(x));
  }
  return best;
}

double lens_value(const Norm::Impl& impl, const Vec& v) {
  const Vec2 x(v(0), v(1));
  if (x.x() == 0.0 && x.y() == 0.0) return 0.0;
  const double vav = x.dot(impl.lens_form * x);
  const double vac = x.dot(impl.lens_form_center);
  const double shift = impl.lens_c_form_c - 1.0;
  // Gauge of {(y - c)^T A (y - c) <= 1} at x, for the ellipse at +c and at -c.
  const double g_plus = vav / (vac + std::sqrt(vac * vac - vav * shift));
  const double g_minus = vav / (-vac + std::sqrt(vac * vac - vav * shift));
  return std::max(g_plus, g_minus);
}

double radial_value(const spec::RadialGauge& g, const Vec& v) {
  const Vec2 x = canonical_half(Vec2(v(0), v(1)));
  const double len = std::hypot(x.x(), x.y());
  if (len == 0.0) return 0.0;
  return len / g.radius(std::atan2(x.y(), x.x()));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double evaluate(const Norm::Impl& impl, const Vec& v) {
  return std::visit(
      overloaded{
          [&](const spec::PNorm& s) { return pnorm_value(s.p, v); },
          [&](const spec::Polygon&) { return polygon_value(impl, v); },
          [&](const spec::Hexagonal&) { return polygon_value(impl, v); },
          [&](const spec::Lens&) { return lens_value(impl, v); },
          [&](const spec::ScaledEuclidean& s) { return s.lambda * pnorm_value(2.0, v); },
          [&](const spec::Revolution& s) {
            return s.profile(vec2(v(0), std::hypot(v(1), v(2))));
          },
          [&](const spec::RadialGauge& s) { return radial_value(s, v); },
          [&](const spec::Linear& s) {
            const Vec image = s.matrix * v;
            return s.base(image);
          },
      },
      impl.spec.payload);
}

std::shared_ptr<Norm::Impl> make_impl(NormSpec spec, int dim, std::string kind) {
  auto impl = std::make_shared<Norm::Impl>();
  impl->spec = std::move(spec);
  impl->dim = dim;
  impl->id = next_id();
  impl->kind = std::move(kind);
  return impl;
}

void check_dim(int dim) {
  if (dim != 2 && dim != 3) throw DimensionError("norms are supported in dimension 2 or 3 only");
}

}  // namespace

Norm Norm::pnorm(double p, int dim) {
  check_dim(dim);
  if (!(p >= 1.0)) throw NormSpecError("p-norm needs p >= 1");
  return Norm(make_impl(NormSpec{spec::PNorm{p, dim}}, dim, "pnorm"));
}

Norm Norm::euclidean(int dim, double lambda) {
  check_dim(dim);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw NormSpecError("scaled Euclidean norm needs a positive finite factor");
  }
  return Norm(make_impl(NormSpec{spec::ScaledEuclidean{lambda, dim}}, dim, "euclidean"));
}

Norm Norm::polygon(std::vector<Vec2> vertices) {
  auto impl = make_impl(NormSpec{spec::Polygon{vertices}}, 2, "polygon");
  build_polygon(*impl, vertices);
  return Norm(impl);
}

Norm Norm::hexagonal() {
  const std::vector<Vec2> vs{{1.0, 0.0},   {0.5, 1.0},   {-0.5, 1.0},
                             {-1.0, 0.0},  {-0.5, -1.0}, {0.5, -1.0}};
  auto impl = make_impl(NormSpec{spec::Hexagonal{}}, 2, "hexagonal");
  build_polygon(*impl, vs);
  return Norm(impl);
}

Norm Norm::square() { return polygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}); }

Norm Norm::diamond() { return polygon({{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}); }

Norm Norm::lens() {
  Eigen::Matrix2d form;
  form << 0.25, 0.0, 0.0, 0.75;
  return lens(Vec2(-1.0, 0.0), form);
}

Norm Norm::lens(Vec2 center, Eigen::Matrix2d form) {
  if (!form.allFinite() || std::abs(form(0, 1) - form(1, 0)) > 1e-14 * form.norm()) {
    throw NormSpecError("lens form must be a finite symmetric matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(form);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw NormSpecError("lens form must be positive definite");
  }
  const double ccc = center.dot(form * center);
  if (!(ccc < 1.0)) throw NormSpecError("lens ellipses must contain the origin in their interior");
  auto impl = make_impl(NormSpec{spec::Lens{center, form}}, 2, "lens");
  impl->lens_center = center;
  impl->lens_form = form;
  impl->lens_form_center = form * center;
  impl->lens_c_form_c = ccc;
  return Norm(impl);
}

Norm Norm::revolution(Norm profile) {
  if (profile.dim() != 2) throw DimensionError("revolution profile must be planar");
  if (profile.defect()) throw NormSpecError("revolution profile: " + *profile.defect());
  for (int k = 0; k < 64; ++k) {
    const double t = kTwoPi * (k + 0.37) / 64.0;
    const double up = profile(vec2(std::cos(t), std::sin(t)));
    const double down = profile(vec2(std::cos(t), -std::sin(t)));
    if (std::abs(up - down) > 1e-12 * up) {
      throw NormSpecError("revolution profile must be symmetric about the first axis");
    }
  }
  return Norm(make_impl(NormSpec{spec::Revolution{std::move(profile)}}, 3, "revolution"));
}

Norm Norm::radial(std::function<double(double)> radius, std::string label) {
  if (!radius) throw NormSpecError("radial gauge needs a radius function");
  constexpr int kSamples = 4096;
  std::vector<Vec2> boundary(kSamples);
  for (int k = 0; k < kSamples; ++k) {
    const double t = kTwoPi * k / kSamples;
    const double r = radius(t);
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw NormSpecError("radial gauge radius must be positive and finite");
    }
    const double r_opposite = radius(t + kPi);
    if (std::abs(r - r_opposite) > 1e-12 * r) {
      throw NormSpecError("radial gauge radius must satisfy r(t) = r(t + pi)");
    }
    boundary[static_cast<std::size_t>(k)] = r * Vec2(std::cos(t), std::sin(t));
  }
  for (int k = 0; k < kSamples; ++k) {
    const Vec2& prev = boundary[static_cast<std::size_t>((k + kSamples - 1) % kSamples)];
    const Vec2& cur = boundary[static_cast<std::size_t>(k)];
    const Vec2& next = boundary[static_cast<std::size_t>((k + 1) % kSamples)];
    if (cross(cur - prev, next - cur) < -1e-12) {
      throw NormSpecError("radial gauge does not bound a convex region");
    }
  }
  spec::RadialGauge g;
  g.radius = std::move(radius);
  g.label = std::move(label);
  return Norm(make_impl(NormSpec{std::move(g)}, 2, "radial"));
}

Norm Norm::radial_harmonics(double a0, std::vector<double> cos_coeffs,
                            std::vector<double> sin_coeffs) {
  auto radius = [a0, cos_coeffs, sin_coeffs](double t) {
    double r = a0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
      r += cos_coeffs[k] * std::cos(2.0 * static_cast<double>(k + 1) * t);
    }
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k) {
      r += sin_coeffs[k] * std::sin(2.0 * static_cast<double>(k + 1) * t);
    }
    return r;
  };
  Norm base = radial(radius, "harmonics");
  auto impl = std::make_shared<Impl>(*base.impl_);
  auto& g = std::get<spec::RadialGauge>(impl->spec.payload);
  g.harmonics_a0 = a0;
  g.harmonics_cos = std::move(cos_coeffs);
  g.harmonics_sin = std::move(sin_coeffs);
  return Norm(impl);
}

Norm Norm::linear(Norm base, Eigen::MatrixXd matrix) {
  if (matrix.rows() != base.dim()) {
    throw DimensionError("linear norm: matrix rows must match the base dimension");
  }
  check_dim(static_cast<int>(matrix.cols()));
  if (matrix.cols() > matrix.rows()) throw DimensionError("linear norm: matrix cannot be wide");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(matrix);
  const auto& sv = svd.singularValues();
  if (!(sv.minCoeff() > 1e-12 * sv.maxCoeff())) {
    throw NormSpecError("linear norm: matrix is not injective");
  }
  const int dim = static_cast<int>(matrix.cols());
  return Norm(make_impl(NormSpec{spec::Linear{std::move(base), std::move(matrix)}}, dim, "linear"));
}

int Norm::dim() const { return impl_->dim; }

double Norm::operator()(const Vec& v) const {
  if (v.size() != impl_->dim) {
    throw DimensionError("vector of dimension " + std::to_string(v.size()) + " given to a norm of dimension " +
                         std::to_string(impl_->dim));
  }
  if (impl_->defect) throw NormSpecError(*impl_->defect);
  return evaluate(*impl_, v);
}

const NormSpec& Norm::spec() const { return impl_->spec; }
std::string_view Norm::kind_name() const { return impl_->kind; }
std::uint64_t Norm::id() const { return impl_->id; }
const std::optional<std::string>& Norm::defect() const { return impl_->defect; }

std::span<const Vec2> Norm::vertices() const {
  if (impl_->defect) return {};
  return impl_->vertices;
}

SpherePoint on_sphere(const Norm& norm, const Vec& v, double tol) {
  const double n = norm(v);
  if (std::abs(n - 1.0) > tol) {
    std::ostringstream os;
    os << "vector is not on the unit sphere (norm " << n << ")";
    throw PreconditionError(os.str());
  }
  return SpherePoint{v, std::nullopt, norm.id()};
}

SpherePoint project_to_sphere(const Norm& norm, const Vec& v) {
  const double n = norm(v);
  if (n == 0.0) throw PreconditionError("cannot project the zero vector to the sphere");
  return SpherePoint{v / n, std::nullopt, norm.id()};
}

void require_planar(const Norm& norm, std::string_view op) {
  if (norm.dim() != 2) {
    throw DimensionError(std::string(op) + " needs a planar norm");
  }
}

SpherePoint radial_point(const Norm& norm, double theta) {
  require_planar(norm, "radial_point");
  const Vec u = vec2(std::cos(theta), std::sin(theta));
  SpherePoint p{u / norm(u), wrap_angle(theta), norm.id()};
  return p;
}

double angle_of(const SpherePoint& p) { return p.theta ? *p.theta : angle_of(p.v); }

ValidationReport validate_norm(const Norm& norm, int sample_count, std::uint64_t seed) {
  if (sample_count < 3) throw PreconditionError("validate_norm needs at least 3 samples");
  ValidationReport report;
  report.samples = sample_count;
  if (norm.defect()) {
    report.invariant_failure = *norm.defect();
    report.passed = false;
    return report;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
  const int dim = norm.dim();
  auto draw = [&] {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = gauss(rng);
    return v;
  };
  for (int k = 0; k < sample_count; ++k) {
    const Vec u = draw();
    const Vec v = draw();
    const double nu = norm(u);
    const double nv = norm(v);
    const double nuv = norm(u + v);
    report.triangle_violation = std::max(report.triangle_violation, (nuv - nu - nv) / (nu + nv));
    const double t = std::exp(log_scale(rng));
    report.homogeneity_violation =
        std::max(report.homogeneity_violation, std::abs(norm(t * u) - t * nu) / (t * nu));
    report.symmetry_violation =
        std::max(report.symmetry_violation, std::abs(norm(-u) - nu) / nu);
    if (!(nu > 0.0)) report.invariant_failure = "nonzero vector has zero norm";
  }
  const double tol = kTol.search;
  report.passed = !report.invariant_failure && report.triangle_violation <= tol &&
                  report.homogeneity_violation <= tol && report.symmetry_violation <= tol;
  return report;
}

}  // namespace minkowski
