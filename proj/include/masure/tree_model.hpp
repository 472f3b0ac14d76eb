#pragma once

// The (q+1)-regular tree as the building of a rank-one group over a local
// field. The standard apartment is the line (c, empty) for c in Z; every other
// vertex hangs off it as (c, w) with w a word of child labels. Parents point
// toward the end -infinity of the standard line.
//
// Realization: A1 with alpha(x) = x and alpha^vee = 2, so walls sit at the
// integers (the vertices), special points are the integers and Q^vee = 2Z.

#include "masure/masure_model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace masure::tree {

struct Vertex {
  long c = 0;
  std::vector<int> w;  // first label in [0, q-2], later ones in [0, q-1]

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// At distance t in [0,1) from x toward parent(x).
struct Point {
  Vertex x;
  Rational t = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// An end of the tree.
struct End {
  enum class Kind { MinusInfinity, PlusInfinity, Branch };
  Kind kind = Kind::MinusInfinity;
  long c = 0;               // Branch: leaves the standard line at (c, empty)
  std::vector<int> prefix;  // Branch: labels before the constant tail
  int tail = 0;             // Branch: label repeated forever

  static End minus_infinity() { return {Kind::MinusInfinity, 0, {}, 0}; }
  static End plus_infinity() { return {Kind::PlusInfinity, 0, {}, 0}; }
  /// Canonicalized: trailing prefix labels equal to the tail are dropped.
  static End branch(long c, std::vector<int> prefix, int tail);

  /// n-th label of the infinite label word (Branch only).
  int label(std::size_t n) const { return n < prefix.size() ? prefix[n] : tail; }
  friend bool operator==(const End&, const End&) = default;
};

/// The line between two distinct ends; its chart is oriented from e1 to e2.
struct Apartment {
  End e1;
  End e2;

  friend bool operator==(const Apartment&, const Apartment&) = default;
};

Vertex parent(const Vertex& x);
std::vector<Vertex> neighbors(const Vertex& x, int q);
long distance(const Vertex& a, const Vertex& b);

class TreeModel {
 public:
  using Point = tree::Point;
  using Apartment = tree::Apartment;

  explicit TreeModel(int q);

  int q() const { return q_; }
  const RootGeneratingSystem& system() const { return rgs_; }
  Apartment standard_apartment() const { return {End::minus_infinity(), End::plus_infinity()}; }

  void validate(const End& e) const;
  void validate(const Apartment& a) const;

  Vertex step_toward_end(const Vertex& x, const End& e) const;
  Vertex step_toward_vertex(const Vertex& x, const Vertex& target) const;
  bool on_line(const Apartment& a, const Vertex& x) const;
  /// The vertex of the line from which its chart is measured.
  Vertex junction(const Apartment& a) const;
  /// Chart coordinate of the junction.
  long junction_coordinate(const Apartment& a) const;
  /// Chart coordinate of a vertex of the line, if it lies on it.
  std::optional<long> vertex_coordinate(const Apartment& a, const Vertex& x) const;
  Vertex vertex_at(const Apartment& a, long s) const;

  Point chart(const Apartment& a, const Vector& v) const;
  std::optional<Vector> locate(const Apartment& a, const Point& p) const;
  bool same_point(const Point& p, const Point& r) const { return p == r; }
  Vector retract(const Point& p, const SectorGerm& germ) const;

  /// Exact retraction of a segment of the apartment: at most one fold, at the
  /// projection of the germ's end onto the line.
  PLPath retract_segment(const Apartment& a, const Vector& from, const Vector& to, const SectorGerm& germ) const;

  Apartment random_apartment(std::uint64_t seed, int complexity) const;
  bool identical(const Apartment& a, const Apartment& b) const;
  std::vector<Vector> window_points(long radius) const;
  bool on_window_boundary(const Vector& v, long radius) const;

 private:
  int q_;
  RootGeneratingSystem rgs_;
};

}  // namespace masure::tree
