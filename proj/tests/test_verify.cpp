#include "minkowski/verify.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace minkowski;

namespace {

const Claim& find(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("missing claim " + id);
}

}  // namespace

TEST(Verify, EveryClaimPasses) {
  const auto r = verify_examples();
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.claims) EXPECT_TRUE(c.passed) << c.id << " " << c.computed.dump();
  const std::set<std::string> ids = [&] {
    std::set<std::string> s;
    for (const auto& c : r.claims) s.insert(c.id);
    return s;
  }();
  for (const char* id : {"a.sums", "a.differences", "a.third_differences", "b.six_distances", "b.determinant",
                         "c.planar", "c.chord_law", "d.bisector_circle", "d.closure", "e.circle_0.5",
                         "e.circle_1.0", "e.circle_2.0", "f.circumference", "f.segments",
                         "g.dset_is_negated_star", "g.bracket_reading"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  for (const auto& c : r.claims) {
    EXPECT_TRUE(c.provenance == "published" || c.provenance == "derived" || c.provenance == "trivial") << c.id;
    EXPECT_FALSE(c.anchor.empty()) << c.id;
  }
}

TEST(Verify, LinfTableMatchesDirectEvaluation) {
  const double v[3][3] = {{1, 1, 1}, {1, 1, 0.9}, {1, 0.9, 1}};
  const double y[2][3] = {{1, -1, 0.1}, {1, -1, -0.1}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_EQ(oracle::lp({v[i][0] + y[j][0], v[i][1] + y[j][1], v[i][2] + y[j][2]}, INFINITY), 2.0);
      const double diff = oracle::lp({v[i][0] - y[j][0], v[i][1] - y[j][1], v[i][2] - y[j][2]}, INFINITY);
      EXPECT_NEAR(diff, i < 2 ? 2.0 : 1.9, 1e-15);
    }
  }
  const auto r = verify_examples();
  EXPECT_NEAR(find(r, "a.third_differences").expected.get<double>(), 1.9, 0.0);
}

TEST(Verify, SixDistancesClosedForm) {
  const auto r = verify_examples();
  const auto& c = find(r, "b.six_distances");
  EXPECT_NEAR(c.expected.get<double>(), std::cbrt(4.0 / 3.0 + 2 * std::cbrt(2.0)), 1e-15);
  EXPECT_LE(c.tolerance, 1e-12);
}

TEST(Verify, DeterministicForFixedOptions) {
  const auto a = verify_examples().to_json();
  const auto b = verify_examples().to_json();
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["schema"].get<int>(), 1);
  EXPECT_EQ(a["version"].get<std::string>(), kVersion);
  EXPECT_EQ(a["seed"].get<std::uint64_t>(), 20240229u);
  EXPECT_TRUE(a["resolutions"].contains("circle_samples"));
  VerifyOptions other;
  other.seed = 7;
  EXPECT_TRUE(verify_examples(other).passed());
}
