#pragma once

// The Bruhat-Tits building of SL3 over F_q((t)) as homothety classes of
// O-lattices, O = F_q[[t]]. An apartment is a frame g; its chart sends
// v = (v1, v2) to the class of g diag(t^v1, t^v2, 1) O^3.
//
// Realization of A2 on R^2: alpha_1 = (-1, 1), alpha_2 = (0, -1) as forms,
// alpha_1^vee = (-1, 1), alpha_2^vee = (-1, -2). This is lambda -> (l0 - l2,
// l1 - l2) applied to the usual eps_j - eps_i picture, so the root
// eps_j - eps_i corresponds to the elementary matrix E_ij and the upper
// unipotents fix +infinity. Special points are Z^2.
//
// Rational points are handled by ramification: a point with coordinates of
// common denominator D is the special point D v of the building over
// F_q((t^(1/D))), where g is read with t replaced by s^D.

#include "masure/lattice.hpp"
#include "masure/masure_model.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace masure::sl3 {

struct Apartment {
  Frame frame;
  Mat3 g, g_inv;
};

/// The class of g diag(t^v1, t^v2, 1) O^3.
struct Point {
  Mat3 g;
  Vector v;
};

class Sl3Model {
 public:
  using Point = sl3::Point;
  using Apartment = sl3::Apartment;

  explicit Sl3Model(int q, long precision = 40);

  int q() const { return field_->order(); }
  long precision() const { return precision_; }
  const FiniteField* field() const { return field_.get(); }
  const RootGeneratingSystem& system() const { return rgs_; }

  Apartment apartment(Frame frame) const;
  Apartment standard_apartment() const { return apartment(Frame{}); }
  /// The root group element x_alpha(u).
  Elementary root_element(const Root& alpha, Series u) const;

  Point chart(const Apartment& a, const Vector& v) const { return {a.g, v}; }
  std::optional<Vector> locate(const Apartment& a, const Point& p) const;
  bool same_point(const Point& p, const Point& r) const;
  LatticeClass canonical_form(const Point& p, long ramification) const;
  Vector retract(const Point& p, const SectorGerm& germ) const;
  /// Candidate breakpoints at wall crossings, validated by midpoint checks.
  PLPath retract_segment(const Apartment& a, const Vector& from, const Vector& to, const SectorGerm& germ) const {
    return retract_segment_generic(*this, a, from, to, germ, rgs_.max_root_height());
  }

  Apartment random_apartment(std::uint64_t seed, int complexity) const;
  bool identical(const Apartment& a, const Apartment& b) const;
  std::vector<Vector> window_points(long radius) const;
  bool on_window_boundary(const Vector& v, long radius) const;

 private:
  Mat3 lattice_basis(const Mat3& g, const Vector& v, long ramification) const;

  std::shared_ptr<const FiniteField> field_;
  long precision_;
  RootGeneratingSystem rgs_;
};

/// Least common denominator of the coordinates.
long common_denominator(const Vector& v);

}  // namespace masure::sl3
