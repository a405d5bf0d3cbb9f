#pragma once

#include "minkowski/norm_json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minkowski {

inline constexpr const char* kVersion = "0.1.0";

/// One checked statement. provenance is "published" (a number stated with the
/// construction), "derived" (computed independently here) or "trivial".
struct Claim {
  std::string id;
  std::string description;
  std::string provenance;
  std::string anchor;
  json expected;
  json computed;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  std::uint64_t seed = 20240229;
  int circle_samples = 360;        // points on the revolution-norm circles
  int closure_pairs = 1000;        // random pairs for the bisector closure
  int circumference_resolution = 4096;
};

struct VerificationReport {
  int schema = 1;
  std::string version = kVersion;
  VerifyOptions options;
  std::vector<Claim> claims;

  bool passed() const;
  json to_json() const;
};

/// Runs every worked example: the l-infinity and l3 counterexamples in R^3, the
/// revolution norm of the hexagon, circle curvature, hexagon facts and the
/// D(x) versus star sign check. Deterministic for fixed options.
VerificationReport verify_examples(const VerifyOptions& options = {});

}  // namespace minkowski
