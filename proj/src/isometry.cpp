#include "minkowski/isometry.hpp"

#include "minkowski/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace minkowski {

namespace {

constexpr int kInitialNodes = 4096;
constexpr int kMaxNodes = 1 << 21;
constexpr double kCircumferenceTol = 1e-10;

struct HalfPolyline {
  std::vector<double> angles;
  std::vector<Vec2> points;
  std::vector<double> cumulative;
};

// Angles in [0, pi] at `n` equiangular steps over the whole circle, plus the
// polygon corners that fall in that range.
HalfPolyline build_half(const Norm& norm, int n) {
  HalfPolyline h;
  for (int k = 0; k <= n / 2; ++k) h.angles.push_back(kTwoPi * k / n);
  for (const auto& v : norm.vertices()) {
    const double a = angle_of(Vec(v));
    if (a > 0.0 && a < kPi) h.angles.push_back(a);
  }
  std::sort(h.angles.begin(), h.angles.end());
  h.angles.erase(std::unique(h.angles.begin(), h.angles.end()), h.angles.end());
  h.points.reserve(h.angles.size());
  for (double a : h.angles) h.points.push_back(as_vec2(radial_point(norm, a).v));
  // Compensated sum: half a million plain additions drift by ~1e-12.
  h.cumulative.assign(h.angles.size(), 0.0);
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 1; i < h.points.size(); ++i) {
    const double y = norm(Vec(h.points[i] - h.points[i - 1])) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    h.cumulative[i] = sum;
  }
  return h;
}

double relative_gap(double cx, double cy) { return std::abs(cx - cy) / std::max(1.0, cx); }

int wrap_index(long long i, int n) {
  const long long m = i % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

// Max chord discrepancy for an integer alignment; stops early above `stop`.
double integer_defect(const ChordFingerprint& x, const ChordFingerprint& y, int shift,
                      bool reflected, double stop) {
  const int n = x.n;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sigma[static_cast<std::size_t>(i)] = wrap_index(reflected ? shift - i : shift + i, n);
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const int si = sigma[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      worst = std::max(worst, relative_gap(x.chords(i, j), y.chords(si, sigma[static_cast<std::size_t>(j)])));
    }
    if (worst > stop) return worst;
  }
  return worst;
}

std::vector<Vec> resample(const ChordFingerprint& x, const ChordFingerprint& y, double position,
                          bool reflected) {
  std::vector<Vec> q;
  q.reserve(static_cast<std::size_t>(x.n));
  const double h = y.spacing();
  for (int i = 0; i < x.n; ++i) {
    const double k = reflected ? position - i : position + i;
    q.push_back(y.table->point_at(k * h));
  }
  return q;
}

// Discrepancy restricted to a few rows; cheap objective for refinement.
double rows_defect(const ChordFingerprint& x, const ChordFingerprint& y, double position,
                   bool reflected) {
  const auto q = resample(x, y, position, reflected);
  double worst = 0.0;
  for (int i : {0, x.n / 8, x.n / 4, 3 * x.n / 8}) {
    for (int j = 0; j < x.n; ++j) {
      const auto si = static_cast<std::size_t>(i);
      const auto sj = static_cast<std::size_t>(j);
      worst = std::max(worst, relative_gap(x.chords(i, j), y.norm(q[si] - q[sj])));
    }
  }
  return worst;
}

double circular_gap(double a, double b, int n) {
  const double d = std::fmod(std::abs(a - b), static_cast<double>(n));
  return std::min(d, n - d);
}

}  // namespace

ArcLengthTable::ArcLengthTable(const Norm& norm) : norm_(norm) {
  require_planar(norm, "ArcLengthTable");
  int n = kInitialNodes;
  HalfPolyline cur = build_half(norm, n);
  while (n < kMaxNodes) {
    HalfPolyline next = build_half(norm, 2 * n);
    const double change = 2.0 * std::abs(next.cumulative.back() - cur.cumulative.back());
    cur = std::move(next);
    n *= 2;
    if (change < kCircumferenceTol) break;
  }
  angles_ = std::move(cur.angles);
  points_ = std::move(cur.points);
  cumulative_ = std::move(cur.cumulative);
  circumference_ = 2.0 * cumulative_.back();
}

Vec ArcLengthTable::first_half_point(double s) const {
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t k = it == cumulative_.begin() ? 0 : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  if (k + 1 >= cumulative_.size()) k = cumulative_.size() - 2;
  const double span = cumulative_[k + 1] - cumulative_[k];
  const double f = span > 0.0 ? std::clamp((s - cumulative_[k]) / span, 0.0, 1.0) : 0.0;
  if (f == 0.0) return Vec(points_[k]);
  const Vec p = Vec(points_[k] + f * (points_[k + 1] - points_[k]));
  return Vec(p / norm_(p));
}

Vec ArcLengthTable::point_at(double s) const {
  const double half = cumulative_.back();
  s = std::fmod(s, circumference_);
  if (s < 0.0) s += circumference_;
  if (s >= half) return Vec(-first_half_point(s - half));
  return first_half_point(s);
}

ChordFingerprint fingerprint(const Norm& norm, int n) {
  require_planar(norm, "fingerprint");
  if (n < 4 || n % 2 != 0) throw PreconditionError("fingerprint needs an even n >= 4");
  ChordFingerprint fp{norm, n, {}, {}, 0.0, nullptr};
  auto table = std::make_shared<const ArcLengthTable>(norm);
  fp.circumference = table->circumference();
  const double h = fp.circumference / n;
  const int half = n / 2;
  fp.points.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < half; ++i) {
    const Vec p = table->point_at(i * h);
    fp.points[static_cast<std::size_t>(i)] = on_sphere(norm, p, kTol.search);
    fp.points[static_cast<std::size_t>(i + half)] = on_sphere(norm, Vec(-p), kTol.search);
  }
  fp.chords = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double c = norm(fp.points[static_cast<std::size_t>(i)].v - fp.points[static_cast<std::size_t>(j)].v);
      fp.chords(i, j) = c;
      fp.chords(j, i) = c;
    }
  }
  fp.table = std::move(table);
  return fp;
}

json Alignment::to_json() const {
  return json{{"shift", shift}, {"reflected", reflected}, {"phase", phase}, {"defect", defect}};
}

double alignment_defect(const ChordFingerprint& x, const ChordFingerprint& y, double position,
                        bool reflected) {
  if (x.n != y.n) throw PreconditionError("alignment needs equal sample counts");
  const auto q = resample(x, y, position, reflected);
  double worst = 0.0;
  for (int i = 0; i < x.n; ++i) {
    for (int j = i + 1; j < x.n; ++j) {
      worst = std::max(worst, relative_gap(x.chords(i, j),
                                           y.norm(q[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(j)])));
    }
  }
  return worst;
}

std::vector<Alignment> align(const ChordFingerprint& x, const ChordFingerprint& y, double tol) {
  if (x.n != y.n) {
    throw PreconditionError("align: sample counts differ (" + std::to_string(x.n) + " vs " +
                            std::to_string(y.n) + ")");
  }
  const int n = x.n;
  // Moving both ends of a chord by half a sample changes it by at most one
  // sample's arc length, so a true match is never further than that from a
  // screened integer candidate.
  const double screen = std::max(x.spacing(), y.spacing()) + tol;
  std::vector<Alignment> found;
  std::vector<std::pair<int, bool>> near_misses;
  for (bool reflected : {false, true}) {
    for (int s = 0; s < n; ++s) {
      double row = 0.0;
      for (int j = 1; j < n && row <= screen; ++j) {
        const int sj = wrap_index(reflected ? s - j : s + j, n);
        row = std::max(row, relative_gap(x.chords(0, j), y.chords(s, sj)));
      }
      if (row > screen) continue;
      const double d = integer_defect(x, y, s, reflected, tol);
      if (d <= tol) {
        found.push_back({s, reflected, 0.0, d});
      } else {
        near_misses.emplace_back(s, reflected);
      }
    }
  }
  for (const auto& [s, reflected] : near_misses) {
    const bool refl = reflected;
    const auto [u, partial] = numeric::golden_minimize(
        [&](double pos) { return rows_defect(x, y, pos, refl); }, s - 1.0, s + 1.0, 1e-12);
    if (partial > tol) continue;
    const bool duplicate = std::any_of(found.begin(), found.end(), [&](const Alignment& a) {
      return a.reflected == refl && circular_gap(a.position(), u, n) < 1e-6;
    });
    if (duplicate) continue;
    const double d = alignment_defect(x, y, u, refl);
    if (d > tol) continue;
    const double r = std::round(u);
    found.push_back({wrap_index(static_cast<long long>(r), n), refl, u - r, d});
  }
  std::sort(found.begin(), found.end(), [](const Alignment& a, const Alignment& b) {
    if (a.reflected != b.reflected) return !a.reflected;
    return a.position() < b.position();
  });
  return found;
}

SphereMapSample induced_map(const ChordFingerprint& x, const ChordFingerprint& y,
                            const Alignment& a) {
  if (x.n != y.n) throw PreconditionError("induced_map: sample counts differ");
  std::vector<std::pair<Vec, Vec>> pairs;
  pairs.reserve(static_cast<std::size_t>(x.n));
  if (a.phase == 0.0) {
    for (int i = 0; i < x.n; ++i) {
      const int j = wrap_index(a.reflected ? a.shift - i : a.shift + i, x.n);
      pairs.emplace_back(x.points[static_cast<std::size_t>(i)].v, y.points[static_cast<std::size_t>(j)].v);
    }
  } else {
    const auto q = resample(x, y, a.position(), a.reflected);
    for (int i = 0; i < x.n; ++i) pairs.emplace_back(x.points[static_cast<std::size_t>(i)].v, q[static_cast<std::size_t>(i)]);
  }
  return make_map_sample(x.norm, y.norm, std::move(pairs));
}

json IsometryGroup::to_json() const {
  json els = json::array();
  for (const auto& e : elements) els.push_back(e.to_json());
  return json{{"n", n},           {"order", order()},   {"rotations", rotations},
              {"reflections", reflections}, {"all_shifts", all_shifts}, {"pattern", pattern},
              {"elements", els}};
}

IsometryGroup isometry_group(const Norm& norm, int n, double tol) {
  const auto fp = fingerprint(norm, n);
  IsometryGroup g;
  g.n = n;
  g.elements = align(fp, fp, tol);
  for (const auto& e : g.elements) (e.reflected ? g.reflections : g.rotations)++;
  g.all_shifts = g.order() == 2 * n;
  if (g.all_shifts) {
    g.pattern = "continuous";
  } else if (g.order() == 1) {
    g.pattern = "trivial";
  } else if (g.reflections == 0) {
    g.pattern = "cyclic";
  } else {
    g.pattern = g.reflections == g.rotations ? "dihedral" : "irregular";
  }
  return g;
}

Vec baker_embedding(const Vec& u) {
  if (u.size() != 2) throw DimensionError("baker_embedding takes planar vectors");
  return vec3(0.5 * std::hypot(u(0), u(1)), u(0), u(1));
}

BakerCheck check_baker_embedding(const Norm& target, const std::vector<std::pair<Vec, Vec>>& pairs) {
  if (target.dim() != 3) throw DimensionError("baker embedding target must be three-dimensional");
  BakerCheck c;
  c.pairs = static_cast<int>(pairs.size());
  for (const auto& [u, v] : pairs) {
    const Vec iu = baker_embedding(u);
    const Vec iv = baker_embedding(v);
    const Vec2 d = as_vec2(u) - as_vec2(v);
    c.max_isometry_error = std::max(c.max_isometry_error, std::abs(target(iu - iv) - std::hypot(d.x(), d.y())));
    const double affinity = target(iu + iv - 2.0 * baker_embedding(Vec(0.5 * (u + v))));
    if (affinity > c.max_affinity_defect) {
      c.max_affinity_defect = affinity;
      c.witness_u = u;
      c.witness_v = v;
    }
  }
  return c;
}

}  // namespace minkowski
