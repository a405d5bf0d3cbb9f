#include "minkowski/sphere.hpp"

#include "minkowski/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minkowski {

namespace {

double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

// Wraps arcs into [0, 2*pi), splitting at 2*pi and merging near-touching pieces.
std::vector<AngleInterval> normalize_arcs(const std::vector<AngleInterval>& arcs) {
  std::vector<AngleInterval> pieces;
  for (const auto& arc : arcs) {
    const double width = arc.hi - arc.lo;
    if (width < 0.0) throw PreconditionError("arc with hi < lo");
    if (width >= kTwoPi - kTol.arc_merge) {
      pieces.push_back({0.0, kTwoPi});
      continue;
    }
    double lo = wrap_angle(arc.lo);
    double hi = lo + width;
    // an arc starting a hair below 2*pi starts at 0; no sliver at the top
    if (kTwoPi - lo < kTol.arc_merge) {
      hi -= kTwoPi;
      lo = 0.0;
      if (hi < 0.0) hi = 0.0;
    }
    if (hi > kTwoPi) {
      pieces.push_back({lo, kTwoPi});
      pieces.push_back({0.0, hi - kTwoPi});
    } else {
      pieces.push_back({lo, hi});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const AngleInterval& a, const AngleInterval& b) { return a.lo < b.lo; });
  std::vector<AngleInterval> merged;
  for (const auto& p : pieces) {
    if (!merged.empty() && p.lo - merged.back().hi < kTol.arc_merge) {
      merged.back().hi = std::max(merged.back().hi, p.hi);
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

// Sup over `a` of the distance to `b`. The sup of a distance-to-set function
// over a union of arcs is attained at an arc endpoint or at the midpoint of a
// gap of `b`.
double directed_hausdorff(const ArcSet& a, const ArcSet& b) {
  std::vector<double> candidates;
  for (const auto& iv : a.intervals()) {
    candidates.push_back(iv.lo);
    candidates.push_back(iv.hi);
  }
  const auto& bi = b.intervals();
  for (std::size_t i = 0; i < bi.size(); ++i) {
    const double gap_lo = bi[i].hi;
    const double gap_hi = (i + 1 < bi.size()) ? bi[i + 1].lo : bi.front().lo + kTwoPi;
    const double mid = wrap_angle(0.5 * (gap_lo + gap_hi));
    if (a.contains(mid)) candidates.push_back(mid);
  }
  double worst = 0.0;
  for (double t : candidates) worst = std::max(worst, b.distance_to(t));
  return worst;
}

}  // namespace

ArcSet ArcSet::from_arcs(const Norm& norm, std::vector<AngleInterval> arcs) {
  require_planar(norm, "ArcSet");
  ArcSet out;
  out.owner_ = norm.id();
  out.intervals_ = normalize_arcs(arcs);
  return out;
}

ArcSet ArcSet::from_points(const Norm& norm, std::vector<Vec> points) {
  ArcSet out;
  out.owner_ = norm.id();
  for (const auto& p : points) {
    if (p.size() != norm.dim()) throw DimensionError("ArcSet point has the wrong dimension");
    if (std::abs(norm(p) - 1.0) > kTol.search) {
      throw PreconditionError("ArcSet point is not on the unit sphere");
    }
  }
  out.points_ = std::move(points);
  return out;
}

bool ArcSet::contains(double theta, double slack) const {
  const double t = wrap_angle(theta);
  for (const auto& iv : intervals_) {
    for (double shift : {0.0, kTwoPi, -kTwoPi}) {
      if (t + shift >= iv.lo - slack && t + shift <= iv.hi + slack) return true;
    }
  }
  return false;
}

double ArcSet::measure() const {
  double m = 0.0;
  for (const auto& iv : intervals_) m += iv.hi - iv.lo;
  return m;
}

ArcSet ArcSet::negated() const {
  ArcSet out;
  out.owner_ = owner_;
  std::vector<AngleInterval> shifted;
  for (const auto& iv : intervals_) shifted.push_back({iv.lo + kPi, iv.hi + kPi});
  out.intervals_ = normalize_arcs(shifted);
  for (const auto& p : points_) out.points_.push_back(-p);
  return out;
}

double ArcSet::distance_to(double theta) const {
  if (intervals_.empty()) return std::numeric_limits<double>::infinity();
  if (contains(theta)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& iv : intervals_) {
    best = std::min({best, circular_distance(theta, iv.lo), circular_distance(theta, iv.hi)});
  }
  return best;
}

json ArcSet::to_json() const {
  json intervals = json::array();
  for (const auto& iv : intervals_) intervals.push_back({iv.lo, iv.hi});
  json out{{"intervals", intervals}};
  if (!points_.empty()) {
    json pts = json::array();
    for (const auto& p : points_) pts.push_back(vec_to_json(p));
    out["points"] = pts;
  }
  return out;
}

double hausdorff_distance(const ArcSet& a, const ArcSet& b) {
  if (a.intervals().empty() && b.intervals().empty()) return 0.0;
  if (a.intervals().empty() || b.intervals().empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double sphere_distance(const Norm& norm, const SpherePoint& p, const SpherePoint& q) {
  if (p.owner != norm.id() || q.owner != norm.id()) {
    throw PreconditionError("sphere_distance: points belong to a different sphere");
  }
  return norm(p.v - q.v);
}

ArcSet dset(const Norm& norm, const SpherePoint& x) {
  require_planar(norm, "dset");
  const double tx = angle_of(x);
  auto at_distance_two = [&](double t) {
    return norm(x.v - radial_point(norm, t).v) >= 2.0 - kTol.eval;
  };
  const double lo = numeric::find_transition(at_distance_two, tx, tx + kPi, kTol.angle);
  const double hi = numeric::find_transition(at_distance_two, tx + kTwoPi, tx + kPi, kTol.angle);
  if (hi - lo < kTol.arc_point) return ArcSet::from_arcs(norm, {{tx + kPi, tx + kPi}});
  return ArcSet::from_arcs(norm, {{lo, hi}});
}

ArcSet star(const Norm& norm, const SpherePoint& x) {
  require_planar(norm, "star");
  const double tx = angle_of(x);
  auto midpoint_on_sphere = [&](double t) {
    return norm(x.v + radial_point(norm, t).v) >= 2.0 - kTol.eval;
  };
  const double lo = numeric::find_transition(midpoint_on_sphere, tx - kPi, tx, kTol.angle);
  const double hi = numeric::find_transition(midpoint_on_sphere, tx + kPi, tx, kTol.angle);
  if (hi - lo < kTol.arc_point) return ArcSet::from_arcs(norm, {{tx, tx}});
  return ArcSet::from_arcs(norm, {{lo, hi}});
}

bool is_flat(const Norm& norm, const SpherePoint& x, double radius) {
  require_planar(norm, "is_flat");
  if (!(radius > 0.0 && radius < 2.0)) throw PreconditionError("is_flat radius must be in (0, 2)");
  const double tx = angle_of(x);
  auto beyond_radius = [&](double t) { return norm(radial_point(norm, t).v - x.v) >= radius; };
  const double ahead = numeric::find_transition(beyond_radius, tx, tx + kPi, kTol.angle);
  const double behind = numeric::find_transition(beyond_radius, tx, tx - kPi, kTol.angle);
  const ArcSet here = dset(norm, x);
  for (double t : {ahead, behind}) {
    if (hausdorff_distance(here, dset(norm, radial_point(norm, t))) >= kTol.flat) return false;
  }
  return true;
}

SegmentInSphere make_segment(const Norm& norm, const SpherePoint& a, const SpherePoint& b,
                             bool maximal) {
  if (a.owner != norm.id() || b.owner != norm.id()) {
    throw PreconditionError("segment endpoints belong to a different sphere");
  }
  const double mid = norm(0.5 * (a.v + b.v));
  if (std::abs(mid - 1.0) > kTol.search) {
    throw PreconditionError("segment midpoint is not on the sphere");
  }
  SegmentInSphere s{a, b, norm(a.v - b.v), maximal, false};
  s.long_segment = s.length >= 1.0 - kTol.eval;
  return s;
}

std::vector<SegmentInSphere> maximal_segments(const Norm& norm) {
  const auto vs = norm.vertices();
  if (vs.empty()) throw PreconditionError("maximal_segments needs a valid polygonal norm");
  std::vector<SegmentInSphere> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto a = on_sphere(norm, Vec(vs[i]));
    const auto b = on_sphere(norm, Vec(vs[(i + 1) % vs.size()]));
    out.push_back(make_segment(norm, a, b, true));
  }
  return out;
}

BisectorPoints bisector_points(const Norm& norm, const SpherePoint& x) {
  require_planar(norm, "bisector_points");
  const double tx = angle_of(x);
  auto gap = [&](double t) {
    const Vec s = radial_point(norm, t).v;
    return norm(s - x.v) - norm(s + x.v);
  };
  const double lo = numeric::find_transition([&](double t) { return gap(t) >= -kTol.eval; }, tx,
                                             tx + kPi, kTol.angle);
  const double hi = numeric::find_transition([&](double t) { return gap(t) > kTol.eval; }, tx,
                                             tx + kPi, kTol.angle);
  BisectorPoints out;
  out.tie_width = std::max(0.0, hi - lo);
  out.unique = out.tie_width <= kTol.arc_merge;
  out.plus = radial_point(norm, 0.5 * (lo + hi));
  out.minus = -out.plus;
  return out;
}

bool is_isosceles_orthogonal(const Norm& norm, const Vec& x, const Vec& z, double tol) {
  return std::abs(norm(x + z) - norm(x - z)) <= tol;
}

double self_circumference(const Norm& norm, int resolution) {
  require_planar(norm, "self_circumference");
  if (resolution < 16) throw PreconditionError("self_circumference needs resolution >= 16");
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(resolution) + norm.vertices().size());
  for (int k = 0; k < resolution; ++k) angles.push_back(kTwoPi * k / resolution);
  for (const auto& v : norm.vertices()) angles.push_back(angle_of(Vec(v)));
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  double length = 0.0;
  Vec prev = radial_point(norm, angles.back()).v;
  for (double t : angles) {
    const Vec cur = radial_point(norm, t).v;
    length += norm(cur - prev);
    prev = cur;
  }
  return length;
}

}  // namespace minkowski
