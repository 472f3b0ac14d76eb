#pragma once

// Affine geometry of the standard apartment: walls, half-apartments, enclosed
// sets, the affine Weyl group and wall crossings of segments.

#include "masure/kmcore.hpp"
#include "masure/polyhedron.hpp"

#include <optional>
#include <vector>

namespace masure {

/// The admissible wall levels Lambda_alpha = spacing * Z, shared by all roots.
struct LevelPattern {
  Rational spacing = 1;

  bool admits(const Rational& k) const;
  Rational floor_level(const Rational& x) const;  // largest admissible k <= x
  Rational ceil_level(const Rational& x) const;   // smallest admissible k >= x
};

/// M(alpha, k) = {v : alpha(v) + k = 0}.
struct Wall {
  Root root;
  Rational level;

  bool contains(const Vector& v) const { return root(v) + level == 0; }
  /// The same hyperplane written with a positive root.
  Wall normalized() const;
  friend bool operator==(const Wall& a, const Wall& b);
  friend bool operator<(const Wall& a, const Wall& b);
};

/// D(alpha, k) = {v : alpha(v) + k >= 0}; strict gives the open half D°.
struct HalfApartment {
  Root root;
  Rational level;
  bool strict = false;
  bool everything = false;  // D(alpha, +infinity)

  static HalfApartment whole_space(const Root& root);

  bool contains(const Vector& v) const;
  Wall wall() const { return {root, level}; }
  Inequality as_inequality() const;
  friend bool operator==(const HalfApartment& a, const HalfApartment& b);
  friend bool operator<(const HalfApartment& a, const HalfApartment& b);
};

/// A finite intersection of half-apartments, held in canonical form: one
/// constraint per root, none implied by the others, sorted. An infeasible
/// conjunction canonicalizes to the distinguished empty set.
class EnclosedSet {
 public:
  explicit EnclosedSet(std::size_t dim) : dim_(dim) {}
  EnclosedSet(std::size_t dim, std::vector<HalfApartment> constraints);

  static EnclosedSet empty(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<HalfApartment>& constraints() const { return constraints_; }
  bool is_empty() const { return empty_; }
  bool is_everything() const { return !empty_ && constraints_.empty(); }
  /// Set by enclosure_of when roots above the height bound were ignored.
  bool height_truncated() const { return truncated_; }
  void set_height_truncated(bool t) { truncated_ = t; }

  bool contains(const Vector& v) const;
  std::vector<Inequality> inequalities() const;

 private:
  std::size_t dim_;
  std::vector<HalfApartment> constraints_;
  bool empty_ = false;
  bool truncated_ = false;
};

/// A point of E, if any.
std::optional<Vector> feasible(const EnclosedSet& e);

/// A point of a not in b, if any.
std::optional<Vector> inclusion_witness(const EnclosedSet& a, const EnclosedSet& b);
bool enclosed_includes(const EnclosedSet& outer, const EnclosedSet& inner);
bool enclosed_equal(const EnclosedSet& a, const EnclosedSet& b);
inline bool enclosed_contains(const EnclosedSet& e, const Vector& v) { return e.contains(v); }

/// Smallest enclosed set containing the points, over roots of height <= bound.
EnclosedSet enclosure_of(const RootGeneratingSystem& rgs, const std::vector<Vector>& points,
                         long height_bound, const LevelPattern& pattern = {});

/// r_alpha(v) - k alpha^vee, the reflection in M(alpha, k).
Vector affine_reflect(const RootGeneratingSystem& rgs, const Root& alpha, const Rational& k, const Vector& v);

/// Image of the wall w under the reflection in M(alpha, k).
Wall reflect_wall(const RootGeneratingSystem& rgs, const Wall& w, const Root& alpha, const Rational& k);

struct Crossing {
  Rational t;
  std::vector<Wall> walls;  // all walls met at t, normalized, sorted
};

/// Walls M(alpha, k) (alpha positive, height <= bound) crossed strictly inside
/// the segment [a, b], grouped by parameter and sorted by t.
std::vector<Crossing> walls_crossed(const RootGeneratingSystem& rgs, const Vector& a, const Vector& b,
                                    long height_bound, const LevelPattern& pattern = {});

/// Whether no t in [0, 1] puts a + t(b - a) on two distinct walls of the set.
/// With include_end = false the endpoint t = 1 is ignored, which is what the
/// path generator and the retraction suites need when b is a special point.
bool generic_position(const Vector& a, const Vector& b, const std::vector<Wall>& walls, bool include_end = true);

/// All walls of roots of height <= bound meeting the closed segment [a, b].
std::vector<Wall> walls_meeting(const RootGeneratingSystem& rgs, const Vector& a, const Vector& b,
                                long height_bound, const LevelPattern& pattern = {});

/// v -> w v + t, an element of W^v semidirect Q^vee.
class AffineWeylElement {
 public:
  AffineWeylElement(WeylElement linear, Vector translation)
      : linear_(std::move(linear)), translation_(std::move(translation)) {}

  static AffineWeylElement identity(const RootGeneratingSystem& rgs);
  static AffineWeylElement translation(const RootGeneratingSystem& rgs, Vector t);
  /// The reflection in M(alpha, k): linear part r_alpha, translation -k alpha^vee.
  static AffineWeylElement reflection(const RootGeneratingSystem& rgs, const Root& alpha, const Rational& k);

  const WeylElement& linear() const { return linear_; }
  const Vector& translation() const { return translation_; }
  bool translation_in_coroot_lattice(const RootGeneratingSystem& rgs) const;

  Vector apply(const Vector& v) const { return act(linear_, v) + translation_; }
  AffineWeylElement inverse() const;
  friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b);
  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.linear_ == b.linear_ && a.translation_ == b.translation_;
  }

 private:
  WeylElement linear_;
  Vector translation_;
};

/// x + sign * w . C^v_f.
struct Sector {
  Vector base;
  FaceSign sign = FaceSign::Positive;
  Word weyl;

  bool contains(const RootGeneratingSystem& rgs, const Vector& v) const;
};

/// The germ at infinity of a sector; only the direction matters.
struct SectorGerm {
  FaceSign sign = FaceSign::Positive;
  Word weyl;

  bool is_plus_infinity() const { return sign == FaceSign::Positive && weyl.empty(); }
  bool is_minus_infinity() const { return sign == FaceSign::Negative && weyl.empty(); }
  friend bool operator==(const SectorGerm&, const SectorGerm&) = default;
};

inline const SectorGerm PLUS_INFINITY{FaceSign::Positive, {}};
inline const SectorGerm MINUS_INFINITY{FaceSign::Negative, {}};

}  // namespace masure
