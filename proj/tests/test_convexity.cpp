#include "minkowski/convexity.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace minkowski;

namespace {

// Upper bound for delta(eps) from an m x m grid of angle pairs.
double grid_modulus(const oracle::Norm2& n, double eps, int m) {
  std::vector<oracle::P2> pts;
  for (int k = 0; k < m; ++k) pts.push_back(oracle::radial(n, 2 * oracle::pi * k / m));
  double best = 1.0;
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (n(a.x - b.x, a.y - b.y) < eps) continue;
      best = std::min(best, 1 - n(a.x + b.x, a.y + b.y) / 2);
    }
  }
  return best;
}

double l3(double a, double b) { return oracle::lp({a, b}, 3); }

}  // namespace

TEST(Modulus, EuclideanClosedForm) {
  const Norm e = Norm::euclidean();
  // at eps = 2 feasibility ||b1 - b2|| >= 2 is decided in floating point, where
  // the chord is flat to second order: the antipode is pinned only to ~1e-8
  EXPECT_NEAR(modulus_of_convexity(e, 2.0), 1.0, 1e-7);
  EXPECT_NEAR(modulus_of_convexity(e, std::sqrt(2.0)), 0.2928932, 1e-7);
  for (int k = 1; k <= 10; ++k) {
    const double eps = 0.2 * k;
    EXPECT_NEAR(modulus_of_convexity(e, eps), 1 - std::sqrt(1 - eps * eps / 4), 1e-4) << eps;
  }
  EXPECT_NEAR(euclidean_modulus(1.0), 1 - std::sqrt(0.75), 1e-15);
}

TEST(Modulus, FlatNormsVanish) {
  for (const auto& n : {Norm::diamond(), Norm::square()}) {
    for (int k = 1; k <= 10; ++k) EXPECT_EQ(modulus_of_convexity(n, 0.2 * k), 0.0) << n.kind_name();
  }
}

TEST(Modulus, HexagonAgainstGrid) {
  const Norm hex = Norm::hexagonal();
  for (double eps : {0.5, 1.0, 1.5, 2.0}) {
    const double grid = grid_modulus(oracle::hexagonal, eps, 600);
    const double lib = modulus_of_convexity(hex, eps);
    EXPECT_LE(lib, grid + 1e-9) << eps;
    EXPECT_GE(lib, grid - 5e-3) << eps;
  }
  // faces have length 1, so short chords cost nothing
  EXPECT_EQ(modulus_of_convexity(hex, 0.9), 0.0);
  EXPECT_NEAR(modulus_of_convexity(hex, 2.0), 0.5, 1e-9);
}

TEST(Modulus, PNormAgainstGridAndBelowEuclidean) {
  const Norm p3 = Norm::pnorm(3.0);
  bool below = false;
  for (double eps : {0.4, 0.8, 1.2, 1.6, 2.0}) {
    const double grid = grid_modulus(l3, eps, 1500);
    const double lib = modulus_of_convexity(p3, eps);
    EXPECT_LE(lib, grid + 1e-9) << eps;
    EXPECT_GE(lib, grid - 5e-3) << eps;
    below |= lib < modulus_of_convexity(Norm::euclidean(), eps) - 1e-4;
  }
  EXPECT_TRUE(below);
}

TEST(Modulus, ThreeDimensionalSections) {
  const Norm e3 = Norm::euclidean(3);
  for (double eps : {0.5, 1.0, 1.8}) {
    EXPECT_NEAR(modulus_of_convexity(e3, eps, 256, 16), euclidean_modulus(eps), 1e-4);
  }
  EXPECT_EQ(modulus_of_convexity(Norm::pnorm(1.0, 3), 1.0, 128, 8), 0.0);
}

TEST(Modulus, CurveIsMonotoneAndBounded) {
  std::vector<double> eps;
  for (int k = 1; k <= 20; ++k) eps.push_back(0.1 * k);
  for (const auto& n : {Norm::euclidean(), Norm::pnorm(3.0), Norm::hexagonal(), Norm::lens()}) {
    const auto c = modulus_curve(n, eps, 256);
    EXPECT_EQ(c.owner, n.id());
    ASSERT_EQ(c.samples.size(), eps.size());
    for (std::size_t i = 0; i < c.samples.size(); ++i) {
      EXPECT_GE(c.samples[i].second, 0.0);
      EXPECT_LE(c.samples[i].second, 1.0);
      if (i > 0) {
        EXPECT_LE(c.samples[i - 1].second, c.samples[i].second + 1e-6) << n.kind_name();
      }
    }
  }
}

TEST(Modulus, RejectsEpsOutOfRange) {
  const Norm e = Norm::euclidean();
  EXPECT_THROW(modulus_of_convexity(e, 0.0), PreconditionError);
  EXPECT_THROW(modulus_of_convexity(e, 2.1), PreconditionError);
  EXPECT_THROW(modulus_of_convexity(e, -1.0), PreconditionError);
}

TEST(StrictConvexity, Examples) {
  EXPECT_TRUE(is_strictly_convex(Norm::pnorm(3.0)));
  EXPECT_TRUE(is_strictly_convex(Norm::euclidean()));
  EXPECT_TRUE(is_strictly_convex(Norm::lens()));
  EXPECT_FALSE(is_strictly_convex(Norm::hexagonal()));
  EXPECT_FALSE(is_strictly_convex(Norm::square()));
  EXPECT_FALSE(is_strictly_convex(Norm::diamond()));
  EXPECT_THROW(is_strictly_convex(Norm::euclidean(), 16), PreconditionError);
}

TEST(StrictConvexity, ShortFaceIsFound) {
  // an octagon whose extra faces are short: the scan must still see them
  const double c = 0.999;
  const Norm oct = Norm::polygon({{1, 0}, {c, 0.05}, {0, 1}, {-c, 0.05}, {-1, 0}, {-c, -0.05}, {0, -1}, {c, -0.05}});
  EXPECT_FALSE(is_strictly_convex(oct));
}
