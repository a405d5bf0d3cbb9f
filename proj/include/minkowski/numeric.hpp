#pragma once

#include <cmath>
#include <utility>

namespace minkowski::numeric {

/// Locates where a monotone predicate flips between `a` (false) and `b`
/// (true). The returned point satisfies the predicate. `a` may exceed `b`.
template <class Pred>
double find_transition(Pred&& pred, double a, double b, double xtol) {
  for (int it = 0; it < 200 && std::abs(b - a) > xtol; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    if (pred(mid)) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return b;
}

/// Bisection on a sign change of `f` over [a, b]. Runs to full double
/// precision unless `xtol` stops it earlier.
template <class F>
double bisect_root(F&& f, double a, double b, double xtol = 0.0) {
  double fa = f(a);
  for (int it = 0; it < 400 && std::abs(b - a) > xtol; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

/// Golden-section search for a minimum of a unimodal `f` on [a, b].
/// Returns (argmin, min).
template <class F>
std::pair<double, double> golden_minimize(F&& f, double a, double b, double xtol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && std::abs(b - a) > xtol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace minkowski::numeric
