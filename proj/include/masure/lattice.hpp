#pragma once

// Rank-3 lattices over F_q[[t]] inside F_q((t))^3, given by a basis matrix
// whose columns span the lattice, and the frames used as SL3 apartments.

#include "masure/laurent.hpp"

#include <array>
#include <variant>
#include <vector>

namespace masure::sl3 {

using Mat3 = std::array<std::array<Series, 3>, 3>;

Mat3 identity3(const FiniteField* f);
Mat3 operator*(const Mat3& a, const Mat3& b);
/// Column j multiplied by t^{e_j}.
Mat3 scale_columns(const Mat3& m, const std::array<long, 3>& e);
Mat3 ramified(const Mat3& m, long d);
Series determinant(const Mat3& m);

/// Canonical form of a homothety class of lattices: the unique basis
///   [ t^a0  x01   x02 ]
///   [ 0     t^a1  x12 ]
///   [ 0     0     1   ]
/// with x01, x02 exact polynomials in exponents < a0 and x12 in exponents < a1.
struct LatticeClass {
  std::array<long, 2> a{0, 0};
  Series x01, x02, x12;

  bool diagonal() const { return x01.terms().empty() && x02.terms().empty() && x12.terms().empty(); }
  friend bool operator==(const LatticeClass& l, const LatticeClass& r) {
    return l.a == r.a && l.x01.terms() == r.x01.terms() && l.x02.terms() == r.x02.terms() &&
           l.x12.terms() == r.x12.terms();
  }
};

/// Column reduction over F_q[[t]] with unit inverses at relative precision N.
LatticeClass hermite_form(Mat3 m, long precision);

enum class Triangle { Lower, Upper };
/// Valuations of the diagonal of a triangular basis of the lattice (the
/// diagonal of a triangular basis is unique up to units).
std::array<long, 3> triangular_valuations(Mat3 m, Triangle shape, long precision);

/// Generators of the frames: elementary unipotents, t-power diagonals of
/// determinant one and signed permutation matrices.
struct Elementary {
  int i = 0, j = 0;  // I + u E_ij, i != j
  Series u;
};
struct TorusPower {
  std::array<long, 3> e{0, 0, 0};  // diag(t^e0, t^e1, t^e2), sum zero
};
struct SignedPermutation {
  std::array<int, 3> image{0, 1, 2};  // column j is sign_j * e_{image_j}
  std::array<int, 3> sign{1, 1, 1};   // field elements 1 or -1, det one overall
};
using Generator = std::variant<Elementary, TorusPower, SignedPermutation>;

Mat3 generator_matrix(const FiniteField* f, const Generator& g);
Generator generator_inverse(const FiniteField* f, const Generator& g);

/// g = g_1 g_2 ... g_m.
struct Frame {
  std::vector<Generator> word;

  Mat3 matrix(const FiniteField* f) const;
  Frame inverse(const FiniteField* f) const;
};

}  // namespace masure::sl3
