#pragma once

// Closed forms and brute-force scans used as independent references. Nothing
// here calls into the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

inline double hexagonal(double a, double b) { return std::max(std::abs(b), std::abs(a) + std::abs(b) / 2); }

inline double revolution_hexagonal(double a, double b, double c) {
  const double r = std::hypot(b, c);
  return std::max(r, std::abs(a) + r / 2);
}

inline double lp(const std::vector<double>& v, double p) {
  if (std::isinf(p)) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double s = 0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

using Norm2 = std::function<double(double, double)>;

struct P2 {
  double x;
  double y;
};

inline P2 radial(const Norm2& n, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double r = n(c, s);
  return {c / r, s / r};
}

// Angles t in [0, 2 pi) on a uniform grid of `m` points where pred(t) holds.
inline std::vector<double> scan(int m, const std::function<bool(double)>& pred) {
  std::vector<double> out;
  for (int k = 0; k < m; ++k) {
    const double t = 2 * pi * k / m;
    if (pred(t)) out.push_back(t);
  }
  return out;
}

// Circular distance between angles.
inline double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * pi);
  return std::min(d, 2 * pi - d);
}

}  // namespace oracle
