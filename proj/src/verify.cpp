#include "minkowski/verify.hpp"

#include "minkowski/curvature.hpp"
#include "minkowski/norm.hpp"
#include "minkowski/numeric.hpp"
#include "minkowski/sphere.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <random>

namespace minkowski {

namespace {

json vectors_to_json(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(x);
  return a;
}

double max_gap(const std::vector<double>& xs, double target) {
  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::abs(x - target));
  return worst;
}

Claim close_to(std::string id, std::string description, std::string provenance, std::string anchor,
               double expected, const std::vector<double>& computed, double tol) {
  Claim c{std::move(id), std::move(description), std::move(provenance), std::move(anchor),
          expected, vectors_to_json(computed), tol, false};
  c.passed = max_gap(computed, expected) <= tol;
  return c;
}

void linf_example(std::vector<Claim>& out) {
  const Norm linf = Norm::pnorm(std::numeric_limits<double>::infinity(), 3);
  const std::vector<Vec> v{vec3(1, 1, 1), vec3(1, 1, 0.9), vec3(1, 0.9, 1)};
  const std::vector<Vec> y{vec3(1, -1, 0.1), vec3(1, -1, -0.1)};
  std::vector<double> sums, diffs, third;
  for (const auto& vi : v) {
    for (const auto& yj : y) sums.push_back(linf(vi + yj));
  }
  for (int i = 0; i < 2; ++i) {
    for (const auto& yj : y) diffs.push_back(linf(v[static_cast<std::size_t>(i)] - yj));
  }
  for (const auto& yj : y) third.push_back(linf(v[2] - yj));
  const std::string anchor = "l-infinity basis of R^3 that does not determine points";
  out.push_back(close_to("a.sums", "||v_i + y_j||_inf for all i, j", "published", anchor, 2.0, sums, 1e-15));
  out.push_back(close_to("a.differences", "||v_i - y_j||_inf for i, j in {1, 2}", "published", anchor, 2.0,
                         diffs, 1e-15));
  out.push_back(close_to("a.third_differences", "||v_3 - y_j||_inf for j in {1, 2}", "published", anchor,
                         1.9, third, 1e-15));
}

void l3_example(std::vector<Claim>& out) {
  const Norm l3 = Norm::pnorm(3.0, 3);
  const double c3 = std::cbrt(3.0);
  const double c6 = std::cbrt(6.0);
  const double c4 = std::cbrt(4.0);
  const Vec x = vec3(1, 1, 1) / c3;
  const std::vector<Vec> v{vec3(1, 1, -c4) / c6, vec3(1, -c4, 1) / c6, vec3(-c4, 1, 1) / c6};
  std::vector<double> values;
  for (const auto& vi : v) {
    values.push_back(l3(vi - x));
    values.push_back(l3(vi + x));
  }
  const double closed_form = std::cbrt(4.0 / 3.0 + 2.0 * std::cbrt(2.0));
  const std::string anchor = "l3 basis inside the symmetric bisector of (1,1,1)/cbrt(3)";
  out.push_back(close_to("b.six_distances", "||v_i -+ x||_3, six values", "published", anchor,
                         closed_form, values, 1e-12));
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) m.col(i) = v[static_cast<std::size_t>(i)];
  const double det = m.determinant();
  Claim c{"b.determinant", "det(v_1, v_2, v_3) is nonzero", "published", anchor, "nonzero", det,
          1e-12, std::abs(det) > 1e-12};
  out.push_back(c);
}

// Point of S_X with ||z - e1|| = 1 in direction phi of the (b, c) plane. In the
// (a, |(b, c)|) half-plane this is where the profile sphere reaches distance 1
// from (1, 0); distance from (1, 0) grows monotonically along the profile.
Vec revolution_circle_point(const Norm& profile, double phi) {
  const Vec e = vec2(1, 0);
  const double t = numeric::bisect_root(
      [&](double s) { return profile(radial_point(profile, s).v - e) - 1.0; }, 0.0, kPi);
  const Vec p = radial_point(profile, t).v;
  return vec3(p(0), p(1) * std::cos(phi), p(1) * std::sin(phi));
}

void revolution_examples(std::vector<Claim>& out, const VerifyOptions& opt) {
  const Norm hex = Norm::hexagonal();
  const Norm rev = Norm::revolution(hex);
  const Vec e1 = vec3(1, 0, 0);
  const int m = opt.circle_samples;
  const std::string anchor = "revolution norm max{|(b,c)|_2, |a| + |(b,c)|_2 / 2}";

  std::vector<Vec> circle;
  std::vector<double> phis;
  for (int k = 0; k < m; ++k) {
    phis.push_back(kTwoPi * k / m);
    circle.push_back(revolution_circle_point(hex, phis.back()));
  }
  double membership = 0.0;
  double first_lo = circle.front()(0);
  double first_hi = first_lo;
  double radius = 0.0;
  for (const auto& z : circle) {
    membership = std::max({membership, std::abs(rev(z) - 1.0), std::abs(rev(z - e1) - 1.0)});
    first_lo = std::min(first_lo, z(0));
    first_hi = std::max(first_hi, z(0));
    radius += std::hypot(z(1), z(2)) / m;
  }
  Claim planar{"c.planar",
               "S_X and e1 + S_X meet in a plane: spread of the first coordinate",
               "derived",
               anchor,
               0.0,
               json{{"spread", first_hi - first_lo}, {"first_coordinate", first_lo}, {"membership", membership}},
               1e-10,
               false};
  planar.passed = first_hi - first_lo <= 1e-10 && membership <= 1e-10;
  out.push_back(planar);

  double chord_law = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double euclid = 2.0 * radius * std::sin(0.5 * (phis[static_cast<std::size_t>(j)] - phis[static_cast<std::size_t>(i)]));
      chord_law = std::max(chord_law, std::abs(rev(circle[static_cast<std::size_t>(i)] - circle[static_cast<std::size_t>(j)]) - euclid));
    }
  }
  out.push_back(Claim{"c.chord_law", "the intersection circle is isometric to a Euclidean circle",
                      "published", anchor, 0.0,
                      json{{"max_chord_error", chord_law}, {"radius", radius}}, 1e-9, chord_law <= 1e-9});

  std::vector<Vec> bis;
  double bis_error = 0.0;
  for (int k = 0; k < m; ++k) {
    const double phi = kTwoPi * k / m;
    const Vec z = vec3(0, std::cos(phi), std::sin(phi));
    bis.push_back(z);
    bis_error = std::max({bis_error, std::abs(rev(z) - 1.0), std::abs(rev(z - e1) - rev(z + e1))});
  }
  out.push_back(Claim{"d.bisector_circle", "(0, b, c) with b^2 + c^2 = 1 lies in S_X and in Bis(e1)",
                      "published", anchor, 0.0, json{{"max_error", bis_error}}, 1e-10,
                      bis_error <= 1e-10});

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  double closure = 0.0;
  int tested = 0;
  while (tested < opt.closure_pairs) {
    const int i = pick(rng);
    const int j = pick(rng);
    if (i == j) continue;
    const Vec d = bis[static_cast<std::size_t>(i)] - bis[static_cast<std::size_t>(j)];
    const Vec w = d / rev(d);
    closure = std::max({closure, std::abs(w(0)), std::abs(rev(w + e1) - rev(w - e1))});
    ++tested;
  }
  out.push_back(Claim{"d.closure",
                      "(z - z') / ||z - z'|| stays isosceles-orthogonal to e1",
                      "published", anchor, 0.0, json{{"max_error", closure}, {"pairs", tested}}, 1e-10,
                      closure <= 1e-10});
}

void curvature_examples(std::vector<Claim>& out) {
  const Norm euclid = Norm::euclidean();
  for (double lambda : {0.5, 1.0, 2.0}) {
    const auto est = normed_curvature(euclid, Curve::circle(Vec2::Zero(), lambda), 0.3);
    std::string id = "e.circle_" + std::to_string(lambda).substr(0, 3);
    Claim c{id, "curvature of the Euclidean circle of radius lambda is 1/lambda", "published",
            "curvature of x + lambda S_2 in the Euclidean norm", 1.0 / lambda,
            est.value ? json(*est.value) : json(nullptr), 1e-3, false};
    c.passed = est.value && std::abs(*est.value - 1.0 / lambda) <= 1e-3;
    out.push_back(c);
  }
}

void hexagon_examples(std::vector<Claim>& out, const VerifyOptions& opt) {
  const Norm hex = Norm::hexagonal();
  const std::string anchor = "hexagonal norm max{|b|, |a| + |b|/2}";
  const double c = self_circumference(hex, opt.circumference_resolution);
  out.push_back(close_to("f.circumference", "self-circumference of the hexagon", "published", anchor, 6.0,
                         {c}, 1e-9));
  const auto segs = maximal_segments(hex);
  std::vector<double> lengths;
  for (const auto& s : segs) lengths.push_back(s.length);
  Claim sc{"f.segments", "six maximal segments of length 1", "published", anchor,
           json{{"count", 6}, {"length", 1.0}},
           json{{"count", segs.size()}, {"lengths", vectors_to_json(lengths)}}, 1e-10, false};
  sc.passed = segs.size() == 6 && max_gap(lengths, 1.0) <= 1e-10;
  out.push_back(sc);
}

void dset_star_check(std::vector<Claim>& out) {
  const Norm hex = Norm::hexagonal();
  const auto x = on_sphere(hex, vec2(1, 0));
  const auto xp = on_sphere(hex, vec2(-0.5, 1));
  const double dist = hex(x.v - xp.v);
  const double mid_negated = hex(0.5 * (-x.v - xp.v));
  const double mid_mixed = hex(0.5 * (-x.v + xp.v));
  const ArcSet d = dset(hex, x);
  const ArcSet s = star(hex, x);
  const double to_negated_star = hausdorff_distance(d, s.negated());
  const double to_star = hausdorff_distance(d, s);
  const std::string anchor = "D(x) described as a star";

  Claim a{"g.dset_is_negated_star", "D(x) = -star(x) on the hexagon at x = (1, 0)", "derived", anchor,
          0.0, json{{"hausdorff", to_negated_star}}, 1e-9, to_negated_star <= 1e-9};
  out.push_back(a);
  Claim b{"g.bracket_reading",
          "x' = (-1/2, 1) is at distance 2 from x, yet [-x, -x'] leaves the sphere while [-x, x'] "
          "stays on it: the bracket {x' : [-x, -x'] in S} does not describe D(x)",
          "derived", anchor,
          json{{"distance", 2.0}, {"midpoint_negated", 0.5}, {"midpoint_mixed", 1.0}},
          json{{"distance", dist},
               {"midpoint_negated", mid_negated},
               {"midpoint_mixed", mid_mixed},
               {"hausdorff_to_star", to_star}},
          1e-12, false};
  b.passed = std::abs(dist - 2.0) <= 1e-12 && std::abs(mid_negated - 0.5) <= 1e-12 &&
             std::abs(mid_mixed - 1.0) <= 1e-12 && to_star > 1e-3;
  out.push_back(b);
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

json VerificationReport::to_json() const {
  json cs = json::array();
  for (const auto& c : claims) {
    cs.push_back(json{{"id", c.id},
                      {"description", c.description},
                      {"provenance", c.provenance},
                      {"anchor", c.anchor},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
  }
  return json{{"schema", schema},
              {"version", version},
              {"seed", options.seed},
              {"resolutions",
               {{"circle_samples", options.circle_samples},
                {"closure_pairs", options.closure_pairs},
                {"circumference_resolution", options.circumference_resolution}}},
              {"passed", passed()},
              {"claims", cs}};
}

VerificationReport verify_examples(const VerifyOptions& options) {
  VerificationReport r;
  r.options = options;
  linf_example(r.claims);
  l3_example(r.claims);
  revolution_examples(r.claims, options);
  curvature_examples(r.claims);
  hexagon_examples(r.claims, options);
  dset_star_check(r.claims);
  return r;
}

}  // namespace minkowski
