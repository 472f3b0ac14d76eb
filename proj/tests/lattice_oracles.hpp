#pragma once

// Reduction-free oracles on exact lattice bases (Laurent polynomial entries):
// only ring arithmetic and valuations, no column operations.

#include "masure/lattice.hpp"
#include "masure/linalg.hpp"
#include "masure/rng.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <optional>

namespace oracle {

using masure::Series;
using masure::sl3::Mat3;

inline long val(const Series& x) { return x.terms().empty() ? LONG_MAX : x.terms().front().first; }

inline Series minor2(const Mat3& m, int r0, int r1, int c0, int c1) {
  return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
}

inline Mat3 adjugate(const Mat3& m) {
  Mat3 adj;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int rr[2], cc[2], k = 0, l = 0;
      for (int i = 0; i < 3; ++i) {
        if (i != c) rr[k++] = i;
        if (i != r) cc[l++] = i;
      }
      Series x = minor2(m, rr[0], rr[1], cc[0], cc[1]);
      adj[r][c] = (r + c) % 2 ? -x : x;
    }
  return adj;
}

/// Diagonal valuations of a lower (or upper) triangular basis from the ideals
/// of minors on the leading (or trailing) rows, which column operations over O
/// leave unchanged.
inline std::array<long, 3> minor_valuations(const Mat3& m, bool upper) {
  const int r1 = upper ? 2 : 0, r2 = 1;
  long m1 = LONG_MAX, m2 = LONG_MAX;
  for (int c = 0; c < 3; ++c) m1 = std::min(m1, val(m[r1][c]));
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = c0 + 1; c1 < 3; ++c1) m2 = std::min(m2, val(minor2(m, r1, r2, c0, c1)));
  long d = val(masure::sl3::determinant(m));
  std::array<long, 3> a{};
  a[static_cast<std::size_t>(r1)] = m1;
  a[1] = m2 - m1;
  a[static_cast<std::size_t>(upper ? 0 : 2)] = d - m2;
  return a;
}

/// [B1 O^3] = [B2 O^3] up to homothety iff t^-k B1^-1 B2 lies in GL3(O), with
/// B1^-1 = adj(B1) / det(B1).
inline bool same_class(const Mat3& b1, const Mat3& b2) {
  long d1 = val(masure::sl3::determinant(b1)), d2 = val(masure::sl3::determinant(b2));
  if ((d2 - d1) % 3 != 0) return false;
  long k = (d2 - d1) / 3;
  Mat3 p = masure::sl3::operator*(adjugate(b1), b2);
  for (const auto& row : p)
    for (const auto& x : row)
      if (!x.terms().empty() && val(x) - d1 < k) return false;
  return true;
}

inline Mat3 diagonal_basis(const masure::FiniteField* f, long a, long b) {
  Mat3 m = masure::sl3::identity3(f);
  m[0][0] = Series::monomial(f, 1, a);
  m[1][1] = Series::monomial(f, 1, b);
  return m;
}

/// Preimage of the class of b in the standard apartment by exhaustive search.
inline std::optional<std::array<long, 2>> standard_preimage(const masure::FiniteField* f, const Mat3& b, long box) {
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      if (same_class(diagonal_basis(f, x, y), b)) return std::array<long, 2>{x, y};
  return std::nullopt;
}

inline Series random_polynomial(masure::Rng& rng, const masure::FiniteField* f, long lo, long hi, int terms) {
  std::vector<Series::Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({rng.between(lo, hi), static_cast<int>(rng.below(static_cast<std::uint64_t>(f->order())))});
  return Series::polynomial(f, t);
}

inline Series random_unit(masure::Rng& rng, const masure::FiniteField* f, long hi, int terms) {
  Series u = random_polynomial(rng, f, 1, hi, terms);
  return u + Series::monomial(f, static_cast<int>(rng.between(1, f->order() - 1)), 0);
}

/// A random element of GL3(O): product of elementary matrices over O and
/// unit diagonals.
inline Mat3 random_unimodular(masure::Rng& rng, const masure::FiniteField* f, int steps) {
  Mat3 m = masure::sl3::identity3(f);
  for (int s = 0; s < steps; ++s) {
    Mat3 e = masure::sl3::identity3(f);
    int i = static_cast<int>(rng.below(3)), j = static_cast<int>(rng.below(2));
    if (j >= i) ++j;
    e[i][j] = random_polynomial(rng, f, 0, 3, 2);
    e[j][j] = random_unit(rng, f, 2, 1);
    m = masure::sl3::operator*(m, e);
  }
  return m;
}

}  // namespace oracle
