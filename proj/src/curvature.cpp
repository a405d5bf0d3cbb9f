#include "minkowski/curvature.hpp"

#include "minkowski/numeric.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace minkowski {

namespace {

constexpr int kScanSamples = 4096;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Slope of log|r| against log delta over the last four ratios; NaN when one
// of them is indistinguishable from rounding noise.
double tail_log_slope(const std::vector<std::pair<double, double>>& ratios,
                      const std::vector<double>& noise) {
  const std::size_t n = ratios.size();
  if (n < 4) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = n - 4; i < n; ++i) {
    const double r = std::abs(ratios[i].second);
    if (!(r > noise[i])) return std::numeric_limits<double>::quiet_NaN();
    const double x = std::log(ratios[i].first);
    const double y = std::log(r);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
}

}  // namespace

Curve Curve::circle(Vec2 center, double radius) {
  if (!(radius > 0.0)) throw PreconditionError("circle radius must be positive");
  return Curve{[=](double t) { return Vec2(center + radius * Vec2(std::cos(t), std::sin(t))); },
               kTwoPi, "circle:" + fmt(radius)};
}

Curve Curve::ellipse(Vec2 center, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw PreconditionError("ellipse semi-axes must be positive");
  return Curve{[=](double t) { return Vec2(center + Vec2(a * std::cos(t), b * std::sin(t))); },
               kTwoPi, "ellipse:" + fmt(a) + "," + fmt(b)};
}

Curve Curve::norm_sphere(const Norm& norm, Vec2 center, double scale) {
  require_planar(norm, "Curve::norm_sphere");
  return Curve{[=](double t) { return Vec2(center + scale * as_vec2(radial_point(norm, t).v)); },
               kTwoPi, std::string("sphere:") + std::string(norm.kind_name())};
}

Curve Curve::translated(const Curve& c, Vec2 offset) {
  auto inner = c.point;
  return Curve{[=](double t) { return Vec2(inner(t) + offset); }, c.period, c.label + "+offset"};
}

Curve parse_curve(const std::string& text, const Norm& ambient) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (kind == "circle") return Curve::circle(Vec2::Zero(), args.empty() ? 1.0 : std::stod(args));
    if (kind == "ellipse") {
      const auto comma = args.find(',');
      if (comma == std::string::npos) throw PreconditionError("ellipse needs a,b");
      return Curve::ellipse(Vec2::Zero(), std::stod(args.substr(0, comma)),
                            std::stod(args.substr(comma + 1)));
    }
    if (kind == "sphere") return Curve::norm_sphere(ambient);
  } catch (const std::logic_error&) {
    throw PreconditionError("malformed curve: " + text);
  }
  throw PreconditionError("unknown curve: " + text);
}

json CurvatureEstimate::to_json() const {
  json r = json::array();
  for (const auto& [d, v] : ratios) r.push_back({d, v});
  return json{{"value", value ? json(*value) : json(nullptr)},
              {"limit", limit},
              {"residual", fit_residual},
              {"log_slope", std::isfinite(log_slope) ? json(log_slope) : json(nullptr)},
              {"divergent", divergent},
              {"negative_radicand", negative_radicand},
              {"ratios", r}};
}

std::vector<double> default_delta_schedule() {
  std::vector<double> s;
  for (int k = 0; k < 8; ++k) s.push_back(0.1 * std::ldexp(1.0, -k));
  return s;
}

std::pair<double, double> chord_points(const Norm& ambient, const Curve& curve, double t_x,
                                       double delta) {
  require_planar(ambient, "normed_curvature");
  const Vec x = Vec(curve(t_x));
  auto h = [&](double t) { return ambient(Vec(curve(t)) - x) - delta; };
  const double step = curve.period / kScanSamples;
  std::vector<double> values(kScanSamples + 1);
  for (int k = 0; k <= kScanSamples; ++k) values[static_cast<std::size_t>(k)] = h(t_x + k * step);
  values.back() = values.front();

  int crossings = 0;
  int first = -1;
  int last = -1;
  for (int k = 0; k < kScanSamples; ++k) {
    const bool in_a = values[static_cast<std::size_t>(k)] < 0.0;
    const bool in_b = values[static_cast<std::size_t>(k) + 1] < 0.0;
    if (in_a != in_b) {
      ++crossings;
      if (first < 0) first = k;
      last = k;
    }
  }
  if (crossings != 2) {
    throw PreconditionError("two-point condition fails at delta = " + fmt(delta) + " (" +
                            std::to_string(crossings) + " crossings)");
  }
  const double after = numeric::bisect_root(h, t_x + first * step, t_x + (first + 1) * step);
  const double before = numeric::bisect_root(h, t_x + last * step, t_x + (last + 1) * step);
  return {after, before};
}

std::pair<double, double> quadratic_intercept(const std::vector<std::pair<double, double>>& xy) {
  const auto n = static_cast<Eigen::Index>(xy.size());
  if (n < 3) throw PreconditionError("quadratic fit needs at least three points");
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = xy[static_cast<std::size_t>(i)].first;
    a(i, 0) = 1.0;
    a(i, 1) = x;
    a(i, 2) = x * x;
    y(i) = xy[static_cast<std::size_t>(i)].second;
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);
  const double rms = std::sqrt((a * c - y).squaredNorm() / static_cast<double>(n));
  return {c(0), rms};
}

namespace {

void check_schedule(const std::vector<double>& schedule) {
  if (schedule.size() < 4) throw PreconditionError("delta schedule needs at least four points");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0)) throw PreconditionError("delta schedule must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1])) {
      throw PreconditionError("delta schedule must be strictly decreasing");
    }
  }
}

}  // namespace

CurvatureEstimate normed_curvature(const Norm& ambient, const Curve& curve, double t_x,
                                   const std::vector<double>& schedule) {
  check_schedule(schedule);
  const Vec x = Vec(curve(t_x));
  CurvatureEstimate est;
  std::vector<double> noise;
  for (double delta : schedule) {
    const auto [ta, tb] = chord_points(ambient, curve, t_x, delta);
    const Vec a = Vec(curve(ta));
    const Vec b = Vec(curve(tb));
    const double da = ambient(a - x);
    const double db = ambient(b - x);
    const double chord = ambient(a - b);
    // Each distance is a difference of O(|x|) coordinates, so the numerator
    // is only known to a few ulps of |x|; anything below that is rounding.
    const double floor = 16.0 * kEpsilon * std::max(1.0, x.norm());
    double num = da + db - chord;
    if (std::abs(num) <= floor) num = 0.0;
    const double mean = 0.5 * (da + db);
    est.ratios.emplace_back(delta, num / (mean * mean * mean));
    noise.push_back(floor / (mean * mean * mean));
  }
  const auto [limit, residual] = quadratic_intercept(est.ratios);
  est.limit = limit;
  est.fit_residual = residual;
  est.log_slope = tail_log_slope(est.ratios, noise);
  est.divergent = std::isfinite(est.log_slope) && est.log_slope < -0.5;
  if (est.divergent) return est;
  if (limit < -1e-9) {
    est.negative_radicand = true;
    return est;
  }
  est.value = 2.0 * std::sqrt(std::max(limit, 0.0));
  return est;
}

CornerRatio corner_ratio(const Norm& norm, const SpherePoint& x,
                         const std::vector<double>& schedule) {
  require_planar(norm, "corner_ratio");
  check_schedule(schedule);
  if (x.owner != norm.id()) throw PreconditionError("corner_ratio: point of another sphere");
  const Curve curve = Curve::norm_sphere(norm);
  const double t_x = angle_of(x);
  CornerRatio out;
  for (double delta : schedule) {
    const auto [ta, tb] = chord_points(norm, curve, t_x, delta);
    const Vec a = Vec(curve(ta));
    const Vec b = Vec(curve(tb));
    const double mean = 0.5 * (norm(a - x.v) + norm(b - x.v));
    out.ratios.emplace_back(delta, norm(a - b) / mean);
  }
  out.limit = quadratic_intercept(out.ratios).first;
  return out;
}

}  // namespace minkowski
