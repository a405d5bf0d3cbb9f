#include "minkowski/coordinates.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace minkowski;

namespace {

Vec t_map(const Vec& v) { return vec2(v(0) + v(1), v(0) - v(1)); }

}  // namespace

TEST(Chart, EuclideanStandardBasisIsTheIdentity) {
  const Norm e = Norm::euclidean();
  const auto c = make_chart(e, {on_sphere(e, vec2(1, 0)), on_sphere(e, vec2(0, 1))});
  const Vec v = vec2(0.3, -1.7);
  EXPECT_EQ(c.forward(v), v);
  EXPECT_EQ(c.inverse(v), v);
  EXPECT_DOUBLE_EQ(c.condition_number(), 1.0);
}

TEST(Chart, HexagonBasisHasUnitInducedNorm) {
  const Norm hex = Norm::hexagonal();
  const auto c = make_chart(hex, {on_sphere(hex, vec2(1, 0)), on_sphere(hex, vec2(0.5, 1))});
  EXPECT_NEAR(c.induced_norm()(vec2(1, 0)), 1.0, 1e-12);
  EXPECT_NEAR(c.induced_norm()(vec2(0, 1)), 1.0, 1e-12);
  // (1,0) - (1/2,1) = (1/2,-1) is also a unit vector
  EXPECT_NEAR(c.induced_norm()(vec2(1, -1)), 1.0, 1e-12);
}

TEST(Chart, DependentBasisIsRejectedByName) {
  const Norm e = Norm::euclidean();
  try {
    make_chart(e, {on_sphere(e, vec2(1, 0)), on_sphere(e, vec2(-1, 0))});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& err) {
    EXPECT_NE(std::string(err.what()).find("(-1, 0)"), std::string::npos) << err.what();
  }
  EXPECT_THROW(make_chart(e, {on_sphere(e, vec2(1, 0))}), PreconditionError);
}

TEST(Chart, ForwardInverseRoundTrip) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g(0, 3);
  for (const auto& n : {Norm::hexagonal(), Norm::pnorm(3.0), Norm::lens()}) {
    const auto c = make_chart(n, {radial_point(n, 0.2), radial_point(n, 1.9)});
    for (int k = 0; k < 2; ++k) EXPECT_NEAR(c.induced_norm()(k == 0 ? vec2(1, 0) : vec2(0, 1)), 1.0, 1e-12);
    for (int i = 0; i < 1000; ++i) {
      const Vec v = vec2(g(rng), g(rng));
      EXPECT_LE((c.inverse(c.forward(v)) - v).norm(), 1e-10);
      EXPECT_NEAR(c.induced_norm()(c.forward(v)), n(v), 1e-10 * (1 + n(v)));
    }
  }
  const Norm n3 = Norm::pnorm(3.0, 3);
  const auto c3 = make_chart(n3, {on_sphere(n3, vec3(1, 0, 0)), on_sphere(n3, vec3(0, 1, 0)),
                                  project_to_sphere(n3, vec3(1, 1, 1))});
  for (int i = 0; i < 1000; ++i) {
    const Vec v = vec3(g(rng), g(rng), g(rng));
    EXPECT_LE((c3.inverse(c3.forward(v)) - v).norm(), 1e-10);
  }
}

TEST(Chart, ConditionNumberIsReportedNotCapped) {
  const Norm e = Norm::euclidean();
  const auto c = make_chart(e, {radial_point(e, 0.0), radial_point(e, 1e-6)});
  EXPECT_GT(c.condition_number(), 1e5);
}

TEST(Linearity, IdentityHasZeroDefect) {
  for (const auto& n : {Norm::hexagonal(), Norm::euclidean(), Norm::lens()}) {
    const auto chart = make_chart(n, {radial_point(n, 0), radial_point(n, oracle::pi / 2)});
    const auto map = sample_map(n, n, [](const Vec& v) { return v; }, 200,
                                {chart.basis()[0].v, chart.basis()[1].v});
    const auto r = linearity_defect(map, chart, chart);
    EXPECT_LE(r.max_defect, 1e-12);
    ASSERT_TRUE(r.antipodal_defect.has_value());
    EXPECT_EQ(*r.antipodal_defect, 0.0);
    EXPECT_EQ(r.basis_defect, 0.0);
    EXPECT_EQ(antipodality_defect(map), 0.0);
  }
}

TEST(Linearity, DiamondToSquareThroughT) {
  const Norm l1 = Norm::diamond();
  const Norm linf = Norm::square();
  // T is an isometry: max(|x + y|, |x - y|) = |x| + |y|
  std::mt19937_64 rng(37);
  std::normal_distribution<double> g(0, 1);
  for (int i = 0; i < 200; ++i) {
    const Vec v = vec2(g(rng), g(rng));
    EXPECT_NEAR(oracle::lp({v(0) + v(1), v(0) - v(1)}, INFINITY), oracle::lp({v(0), v(1)}, 1), 1e-14);
  }
  const auto cx = make_chart(l1, {on_sphere(l1, vec2(1, 0)), on_sphere(l1, vec2(0, 1))});
  const auto cy = make_chart(linf, {on_sphere(linf, vec2(1, 1)), on_sphere(linf, vec2(1, -1))});
  const auto map = sample_map(l1, linf, t_map, 256, {vec2(1, 0), vec2(0, 1)});
  const auto r = linearity_defect(map, cx, cy);
  EXPECT_LE(r.max_defect, 1e-12);
  EXPECT_LE(*r.antipodal_defect, 1e-12);

  const auto bad = make_chart(linf, {on_sphere(linf, vec2(1, 1)), on_sphere(linf, vec2(-1, 1))});
  const auto rb = linearity_defect(map, cx, bad);
  EXPECT_GE(rb.max_defect, 1.0);
  EXPECT_GE(rb.basis_defect, 1.0);
}

TEST(Linearity, RotationAwayFromTheChartIsDetected) {
  // a rotation of the circle is linear, but reading it in charts whose
  // bases do not correspond shows a coordinate discrepancy
  const Norm e = Norm::euclidean();
  const auto chart = make_chart(e, {radial_point(e, 0), radial_point(e, oracle::pi / 2)});
  auto rot = [](const Vec& v) { return vec2(-v(1), v(0)); };
  const auto map = sample_map(e, e, rot, 100, {vec2(1, 0), vec2(0, 1)});
  EXPECT_GT(linearity_defect(map, chart, chart).max_defect, 1.0);
  const auto target = make_chart(e, {on_sphere(e, vec2(0, 1)), on_sphere(e, vec2(-1, 0))});
  EXPECT_LE(linearity_defect(map, chart, target).max_defect, 1e-12);
}

TEST(Linearity, Errors) {
  const Norm e = Norm::euclidean();
  const auto chart = make_chart(e, {radial_point(e, 0.1), radial_point(e, 1.3)});
  const auto map = sample_map(e, e, [](const Vec& v) { return v; }, 64);
  EXPECT_THROW(linearity_defect(map, chart, chart), PreconditionError);
  const Norm hex = Norm::hexagonal();
  const auto hchart = make_chart(hex, {radial_point(hex, 0), radial_point(hex, 1.3)});
  EXPECT_THROW(linearity_defect(map, hchart, hchart), PreconditionError);
}

TEST(Linearity, ReportJson) {
  const Norm e = Norm::euclidean();
  const auto chart = make_chart(e, {radial_point(e, 0), radial_point(e, oracle::pi / 2)});
  const auto map = sample_map(e, e, [](const Vec& v) { return v; }, 8, {vec2(1, 0), vec2(0, 1)});
  const json j = linearity_defect(map, chart, chart).to_json();
  EXPECT_TRUE(j.contains("max_defect"));
  EXPECT_TRUE(j.contains("antipodal_defect"));
  EXPECT_EQ(j["samples"].get<std::size_t>(), map.pairs.size());
}

TEST(Antipodality, NonAntipodalMapOnHexagon) {
  const Norm hex = Norm::hexagonal();
  // theta -> theta + 0.3 cos(theta) is a homeomorphism of the circle that
  // moves 0 and pi by opposite amounts
  auto tau = [&](const Vec& v) {
    const double t = angle_of(v);
    return Vec(radial_point(hex, t + 0.3 * std::cos(t)).v);
  };
  const auto map = sample_map(hex, hex, tau, 6);
  const double d = antipodality_defect(map);
  EXPECT_GT(d, 0.1);
  // at the vertex (1, 0): images are s(0.3) and s(pi - 0.3)
  const Vec a = radial_point(hex, 0.3).v;
  const Vec b = radial_point(hex, oracle::pi - 0.3).v;
  const double at_vertex = oracle::hexagonal(a(0) + b(0), a(1) + b(1));
  EXPECT_GT(at_vertex, 0.1);
  EXPECT_GE(d, at_vertex - 1e-12);

  // a pure rotation by 0.3 is antipodal, however far from an isometry
  auto shift = [&](const Vec& v) { return Vec(radial_point(hex, angle_of(v) + 0.3).v); };
  EXPECT_LE(antipodality_defect(sample_map(hex, hex, shift, 64)), 1e-12);
}

TEST(Antipodality, MissingAntipodeIsAnError) {
  const Norm e = Norm::euclidean();
  const auto map = make_map_sample(e, e, {{vec2(1, 0), vec2(1, 0)}});
  EXPECT_THROW(antipodality_defect(map), PreconditionError);
  EXPECT_THROW(make_map_sample(e, e, {{vec2(2, 0), vec2(1, 0)}}), PreconditionError);
}

TEST(Injectivity, FourDistancesSeparatePoints) {
  for (const auto& n : {Norm::euclidean(), Norm::pnorm(3.0), Norm::hexagonal()}) {
    const auto r = monotonicity_injectivity(n, on_sphere(n, vec2(1, 0)), on_sphere(n, vec2(0, 1)), 10000);
    EXPECT_TRUE(r.injective) << n.kind_name();
    EXPECT_GT(r.min_separation, 1e-6);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(Injectivity, SquareSidesCollide) {
  // l-infinity with the corner basis {(1,1), (1,-1)}: the result must agree
  // with a brute-force collision scan over the same grid.
  const Norm sq = Norm::square();
  const auto r = monotonicity_injectivity(sq, on_sphere(sq, vec2(1, 1)), on_sphere(sq, vec2(1, -1)), 1024);
  // brute-force oracle over the same grid
  bool collision = false;
  std::vector<std::array<double, 4>> t;
  auto linf = [](double a, double b) { return std::max(std::abs(a), std::abs(b)); };
  for (int k = 0; k < 1024; ++k) {
    const auto p = oracle::radial(linf, 2 * oracle::pi * k / 1024);
    t.push_back({linf(p.x + 1, p.y + 1), linf(p.x - 1, p.y - 1), linf(p.x + 1, p.y - 1), linf(p.x - 1, p.y + 1)});
  }
  for (int i = 0; i < 1024 && !collision; ++i) {
    for (int j = i + 4; j < 1024 && 1024 - (j - i) >= 4; ++j) {
      double d = 0;
      for (int c = 0; c < 4; ++c) d = std::max(d, std::abs(t[i][c] - t[j][c]));
      if (d <= 1e-6) {
        collision = true;
        break;
      }
    }
  }
  EXPECT_EQ(r.injective, !collision);
  EXPECT_EQ(r.witness.has_value(), !r.injective);
}

TEST(DetermineFromArc, Examples) {
  const Norm e = Norm::euclidean();
  const auto arc = ArcSet::from_arcs(e, {{-0.1, 0.1}});
  const Vec p = vec2(0, 1);
  const Vec q = project_to_sphere(e, vec2(0.01, 1.001)).v;
  EXPECT_TRUE(determine_from_arc(e, arc, p, q));
  EXPECT_FALSE(determine_from_arc(e, arc, p, p));

  const Norm sq = Norm::square();
  // lower half of the face {1} x [-1, 1]: ||u - p|| = ||u - q|| = 1 - t
  const auto lower = ArcSet::from_arcs(sq, {{-std::atan(0.4), 0.0}});
  const auto face = ArcSet::from_arcs(sq, {{-std::atan(0.4), std::atan(0.4)}});
  const Vec a = vec2(0, 1);
  const Vec b = vec2(0.1, 1);
  EXPECT_FALSE(determine_from_arc(sq, lower, a, b));
  EXPECT_TRUE(determine_from_arc(sq, face, a, b));

  // scan oracle on the face {1} x [-0.4, 0.4]
  auto linf = [](double x, double y) { return std::max(std::abs(x), std::abs(y)); };
  bool lower_separates = false;
  bool upper_separates = false;
  for (int k = 0; k <= 4000; ++k) {
    const double t = -0.4 + 0.8 * k / 4000;
    const bool sep = std::abs(linf(1 - 0, t - 1) - linf(1 - 0.1, t - 1)) > 1e-10;
    (t <= 0 ? lower_separates : upper_separates) |= sep;
  }
  EXPECT_FALSE(lower_separates);
  EXPECT_TRUE(upper_separates);
}

TEST(Cone, Examples) {
  const Norm hex = Norm::hexagonal();
  auto c = cone_distance_check(hex, 0.5, {0, 1}, {0, -1});
  EXPECT_DOUBLE_EQ(c.distance, 2.0);
  EXPECT_TRUE(c.law_holds);
  c = cone_distance_check(hex, 0.5, {0.2, 1}, {0, -1});
  EXPECT_NEAR(c.distance, std::max(2.0, 0.2 + 1.0), 1e-15);
  EXPECT_TRUE(c.in_cone);
  EXPECT_TRUE(c.law_holds);
  c = cone_distance_check(hex, 0.5, {1.5, 1}, {0, -1});
  EXPECT_FALSE(c.in_cone);
  EXPECT_FALSE(c.law_holds);
  EXPECT_NEAR(c.distance, oracle::hexagonal(1.5, 2), 1e-15);
  EXPECT_THROW(cone_distance_check(Norm::euclidean(), 0.5, {0, 1}, {0, -1}), PreconditionError);
}

TEST(Cone, RandomPairsObeyTheLaw) {
  const Norm hex = Norm::hexagonal();
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_real_distribution<double> f(-1, 1);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 p(u(rng), u(rng));
    const double dy = u(rng);
    const Vec2 q(p.x() + 0.5 * std::abs(dy) * f(rng), p.y() + dy);
    const auto c = cone_distance_check(hex, 0.5, p, q);
    EXPECT_TRUE(c.in_cone);
    EXPECT_NEAR(c.distance, std::abs(p.y() - q.y()), 1e-12);
    EXPECT_TRUE(c.law_holds);
  }
}

TEST(Cone, ReconstructionOfAlpha) {
  const Norm hex = Norm::hexagonal();
  for (int k = 0; k <= 20; ++k) {
    const double beta = k / 20.0;
    const double alpha = 1 - beta / 2;  // the sphere point on the right edge at height beta
    ASSERT_NEAR(oracle::hexagonal(alpha, beta), 1.0, 1e-15);
    const double delta = leftmost_intersection(hex, {alpha, beta}, 1 + beta, -1);
    // closed form of the leftmost point: |a - alpha| <= (1 + beta) / 2
    EXPECT_NEAR(delta, alpha - (1 + beta) / 2, 1e-10);
    EXPECT_NEAR(reconstruct_alpha(delta, beta, 0.5), alpha, 1e-10);
  }
  EXPECT_THROW(leftmost_intersection(hex, {0, 0}, 1, 5), PreconditionError);
}
