#pragma once

#include "minkowski/norm.hpp"

#include <utility>
#include <vector>

namespace minkowski {

/// delta(eps) = inf { 1 - ||b1 + b2|| / 2 : b1, b2 in S, ||b1 - b2|| >= eps }.
///
/// Planar norms: for each of `resolution` grid points b1 the constraint
/// ||b1 - b2|| = eps is solved exactly on both sides of b1 (the infimum sits
/// there), then the best grid cell is refined by golden-section search.
/// Three-dimensional norms take the minimum over `plane_samples` planar
/// sections through the origin.
double modulus_of_convexity(const Norm& norm, double eps, int resolution = 512,
                            int plane_samples = 64);

struct ModulusCurve {
  std::uint64_t owner = 0;
  std::vector<std::pair<double, double>> samples;  // (eps, delta(eps))
};

ModulusCurve modulus_curve(const Norm& norm, const std::vector<double>& eps_values,
                           int resolution = 512);

/// Closed-form modulus of the Euclidean plane, 1 - sqrt(1 - eps^2 / 4).
double euclidean_modulus(double eps);

/// False when some pair of nearby sphere points has its midpoint on the
/// sphere (within 1e-10), i.e. the sphere contains a segment.
bool is_strictly_convex(const Norm& norm, int resolution = 1024);

}  // namespace minkowski
