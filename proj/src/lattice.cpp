#include "masure/lattice.hpp"

#include <algorithm>
#include <optional>

namespace masure::sl3 {

Mat3 identity3(const FiniteField* f) {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = r == c ? Series::one(f) : Series(f);
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  const FiniteField* f = a[0][0].field();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Series s(f);
      for (int k = 0; k < 3; ++k)
        if (!a[r][k].is_exact_zero() && !b[k][c].is_exact_zero()) s = s + a[r][k] * b[k][c];
      out[r][c] = s;
    }
  return out;
}

Mat3 scale_columns(const Mat3& m, const std::array<long, 3>& e) {
  Mat3 out = m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r][c] = m[r][c].shifted(e[c]);
  return out;
}

Mat3 ramified(const Mat3& m, long d) {
  Mat3 out = m;
  for (auto& row : out)
    for (auto& x : row) x = x.ramified(d);
  return out;
}

Series determinant(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

void swap_columns(Mat3& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < 3; ++r) std::swap(m[r][a], m[r][b]);
}

// Column among `cols` whose entry in `row` has least valuation. Every other
// candidate must be known to have valuation at least that.
int pivot_column(const Mat3& m, int row, const std::vector<int>& cols) {
  std::optional<int> best;
  for (int c : cols) {
    const Series& x = m[row][c];
    if (!x.valuation_known()) continue;
    if (!best || x.valuation() < m[row][*best].valuation()) best = c;
  }
  if (!best) {
    bool all_zero = std::all_of(cols.begin(), cols.end(), [&](int c) { return m[row][c].is_exact_zero(); });
    throw Error(all_zero ? ErrorCode::SingularMatrix : ErrorCode::PrecisionExhausted,
                all_zero ? "lattice basis is singular" : "pivot valuation is beyond the known precision");
  }
  const long v = m[row][*best].valuation();
  for (int c : cols)
    if (!m[row][c].valuation_known() && m[row][c].cap() < v)
      throw Error(ErrorCode::PrecisionExhausted, "pivot valuation is beyond the known precision");
  return *best;
}

// Makes m[row][col] = t^v exactly and clears the other entries of `row` in
// the columns `others`. Returns v.
long eliminate(Mat3& m, int row, int col, const std::vector<int>& others, long precision) {
  const FiniteField* f = m[row][col].field();
  const long v = m[row][col].valuation();
  Series unit_inv = m[row][col].shifted(-v).inverse(precision);
  for (int r = 0; r < 3; ++r) m[r][col] = r == row ? Series::monomial(f, 1, v) : m[r][col] * unit_inv;
  for (int c : others) {
    if (m[row][c].is_exact_zero()) continue;
    Series quot = m[row][c].shifted(-v);
    for (int r = 0; r < 3; ++r)
      m[r][c] = r == row ? Series(f) : m[r][c] - quot * m[r][col];
  }
  return v;
}

// Subtracts from column c the multiple of column p that reduces m[row][c]
// modulo t^{a}, where column p is zero below `row` and has t^a at `row`.
void reduce_entry(Mat3& m, int row, int c, int p, long a) {
  Series quot = m[row][c].quotient_above(a);
  if (quot.is_exact_zero()) return;
  Series rest = m[row][c].below(a);
  for (int r = 0; r < row; ++r) m[r][c] = m[r][c] - quot * m[r][p];
  m[row][c] = rest;
}

}  // namespace

LatticeClass hermite_form(Mat3 m, long precision) {
  std::array<long, 3> a{};
  // Bottom-up: row i gets its pivot in column i among columns 0..i.
  for (int row = 2; row >= 0; --row) {
    std::vector<int> cols;
    for (int c = 0; c <= row; ++c) cols.push_back(c);
    swap_columns(m, pivot_column(m, row, cols), row);
    cols.pop_back();
    a[static_cast<std::size_t>(row)] = eliminate(m, row, row, cols, precision);
  }
  reduce_entry(m, 1, 2, 1, a[1]);
  reduce_entry(m, 0, 2, 0, a[0]);
  reduce_entry(m, 0, 1, 0, a[0]);
  LatticeClass out;
  const long s = a[2];
  out.a = {a[0] - s, a[1] - s};
  out.x01 = m[0][1].below(a[0]).shifted(-s);
  out.x02 = m[0][2].below(a[0]).shifted(-s);
  out.x12 = m[1][2].below(a[1]).shifted(-s);
  return out;
}

std::array<long, 3> triangular_valuations(Mat3 m, Triangle shape, long precision) {
  std::array<long, 3> a{};
  for (int k = 0; k < 3; ++k) {
    // Upper: rows bottom-up and pivots move right-to-left; Lower: the mirror.
    const int row = shape == Triangle::Upper ? 2 - k : k;
    std::vector<int> cols;
    for (int c = 0; c < 3; ++c)
      if (shape == Triangle::Upper ? c <= row : c >= row) cols.push_back(c);
    swap_columns(m, pivot_column(m, row, cols), row);
    cols.erase(std::find(cols.begin(), cols.end(), row));
    a[static_cast<std::size_t>(row)] = eliminate(m, row, row, cols, precision);
  }
  return a;
}

Mat3 generator_matrix(const FiniteField* f, const Generator& g) {
  Mat3 m = identity3(f);
  if (const auto* x = std::get_if<Elementary>(&g)) {
    m[x->i][x->j] = x->u;
  } else if (const auto* d = std::get_if<TorusPower>(&g)) {
    for (int i = 0; i < 3; ++i) m[i][i] = Series::monomial(f, 1, d->e[static_cast<std::size_t>(i)]);
  } else {
    const auto& p = std::get<SignedPermutation>(g);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = Series(f);
    for (int c = 0; c < 3; ++c) {
      int s = p.sign[static_cast<std::size_t>(c)] == 1 ? 1 : f->neg(1);
      m[p.image[static_cast<std::size_t>(c)]][c] = Series::monomial(f, s, 0);
    }
  }
  return m;
}

Generator generator_inverse(const FiniteField*, const Generator& g) {
  if (const auto* x = std::get_if<Elementary>(&g)) return Elementary{x->i, x->j, -x->u};
  if (const auto* d = std::get_if<TorusPower>(&g)) return TorusPower{{-d->e[0], -d->e[1], -d->e[2]}};
  const auto& p = std::get<SignedPermutation>(g);
  // column image_c of the inverse is sign_c * e_c
  SignedPermutation inv;
  for (int c = 0; c < 3; ++c) {
    auto ic = static_cast<std::size_t>(p.image[static_cast<std::size_t>(c)]);
    inv.image[ic] = c;
    inv.sign[ic] = p.sign[static_cast<std::size_t>(c)];
  }
  return inv;
}

Mat3 Frame::matrix(const FiniteField* f) const {
  Mat3 m = identity3(f);
  for (const auto& g : word) m = m * generator_matrix(f, g);
  return m;
}

Frame Frame::inverse(const FiniteField* f) const {
  Frame out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.word.push_back(generator_inverse(f, *it));
  return out;
}

}  // namespace masure::sl3
