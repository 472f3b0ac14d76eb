#include "masure/linalg.hpp"

#include "masure/error.hpp"

#include <sstream>

namespace masure {

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
}

std::string to_string(const Rational& r) { return r.str(); }

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

Integer floor_of(const Rational& r) {
  const Integer& n = boost::multiprecision::numerator(r);
  const Integer& d = boost::multiprecision::denominator(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(-r); }

Vector Vector::basis(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

Vector Vector::from_ints(const std::vector<long>& coords) {
  Vector v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = coords[i];
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

Rational LinearForm::operator()(const Vector& v) const {
  if (v.dim() != dim())
    throw Error(ErrorCode::DimensionMismatch, "form/vector dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && v[i] != 0) s += c_[i] * v[i];
  return s;
}

bool LinearForm::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "form dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "form dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string LinearForm::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.dim() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix/vector mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& m = (*this)(r, c);
      if (m != 0 && v[c] != 0) s += m * v[c];
    }
    out[r] = s;
  }
  return out;
}

LinearForm Matrix::pull_back(const LinearForm& phi) const {
  if (phi.dim() != rows_) throw Error(ErrorCode::DimensionMismatch, "matrix/form mismatch");
  LinearForm out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& m = (*this)(r, c);
      if (m != 0 && phi[r] != 0) s += phi[r] * m;
    }
    out[c] = s;
  }
  return out;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (b(k, c) != 0) out(r, c) += x * b(k, c);
    }
  return out;
}

std::size_t rank_of_rows(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<Vector>& columns,
                                                   const Vector& target) {
  const std::size_t n = columns.size();
  const std::size_t d = target.dim();
  // augmented d x (n+1)
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (columns[c].dim() != d)
        throw Error(ErrorCode::DimensionMismatch, "solve_in_span: column dimension mismatch");
      m[r][c] = columns[c][r];
    }
    m[r][n] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < d; ++col) {
    std::size_t p = row;
    while (p < d && m[p][col] == 0) ++p;
    if (p == d) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c <= n; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < d; ++r)
    if (m[r][n] != 0) return std::nullopt;
  if (pivot_col.size() != n) return std::nullopt;  // dependent columns: not unique
  std::vector<Rational> sol(n);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = m[r][n];
  return sol;
}

}  // namespace masure
