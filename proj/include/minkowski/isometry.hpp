#pragma once

#include "minkowski/coordinates.hpp"
#include "minkowski/norm.hpp"
#include "minkowski/norm_json.hpp"

#include <memory>
#include <vector>

namespace minkowski {

/// Own-norm arc length along a planar sphere, from angle 0 counterclockwise.
/// Built from an equiangular polyline (plus the polygon corners), doubled
/// until the circumference changes by less than 1e-10.
class ArcLengthTable {
 public:
  explicit ArcLengthTable(const Norm& norm);

  double circumference() const { return circumference_; }
  std::size_t nodes() const { return angles_.size(); }
  /// The sphere point at arc length s (taken mod the circumference). The
  /// second half of the sphere is the exact negative of the first.
  Vec point_at(double s) const;

 private:
  Vec first_half_point(double s) const;

  Norm norm_;
  std::vector<double> angles_;
  std::vector<Vec2> points_;
  std::vector<double> cumulative_;
  double circumference_ = 0.0;
};

struct ChordFingerprint {
  Norm norm;
  int n = 0;
  std::vector<SpherePoint> points;
  Eigen::MatrixXd chords;
  double circumference = 0.0;
  std::shared_ptr<const ArcLengthTable> table;

  double spacing() const { return circumference / n; }
};

/// n points at own-norm arc length k * C / n and their pairwise distances.
/// n must be even and at least 4; point k + n/2 is exactly -point k.
ChordFingerprint fingerprint(const Norm& norm, int n);

/// Sample i of X goes to arc position (i + shift + phase) of Y, or to
/// (shift + phase - i) when reflected. phase is a sub-sample offset in
/// [-1, 1]; it is zero whenever an integer shift already matches.
struct Alignment {
  int shift = 0;
  bool reflected = false;
  double phase = 0.0;
  double defect = 0.0;  // max over i, j of |cX - cY| / max(1, cX)

  double position() const { return shift + phase; }
  json to_json() const;
};

/// Every (shift, orientation) under which the chord matrices agree within
/// tol, including sub-sample offsets found by refining near-miss shifts.
/// Throws PreconditionError when the sample counts differ.
std::vector<Alignment> align(const ChordFingerprint& x, const ChordFingerprint& y,
                             double tol = kTol.match);

/// Chord discrepancy of an arbitrary alignment position.
double alignment_defect(const ChordFingerprint& x, const ChordFingerprint& y, double position,
                        bool reflected);

/// The sampled sphere map X_i -> Y(sigma(i)) of an alignment.
SphereMapSample induced_map(const ChordFingerprint& x, const ChordFingerprint& y,
                            const Alignment& a);

struct IsometryGroup {
  int n = 0;
  std::vector<Alignment> elements;
  int rotations = 0;
  int reflections = 0;
  bool all_shifts = false;  // every one of the 2n candidates matched
  std::string pattern;      // "dihedral", "cyclic", "trivial" or "continuous"

  int order() const { return static_cast<int>(elements.size()); }
  json to_json() const;
};

IsometryGroup isometry_group(const Norm& norm, int n, double tol = kTol.match);

/// i(u) = (|u|_2 / 2, u): an isometric but non-affine embedding of the
/// Euclidean plane into R^3 with the revolution norm of the hexagon.
Vec baker_embedding(const Vec& u);

struct BakerCheck {
  int pairs = 0;
  double max_isometry_error = 0.0;  // | ||i(u) - i(v)||_X - ||u - v||_2 |
  double max_affinity_defect = 0.0;  // ||i(u) + i(v) - 2 i((u + v) / 2)||_X
  Vec witness_u;
  Vec witness_v;
};

BakerCheck check_baker_embedding(const Norm& target, const std::vector<std::pair<Vec, Vec>>& pairs);

}  // namespace minkowski
