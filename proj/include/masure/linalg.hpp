#pragma once

// Exact rational linear algebra on the standard apartment: points/vectors,
// linear forms and small dense matrices. Everything is value-typed.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace masure {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
bool is_integer(const Rational& r);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

/// A point (or vector) of the standard apartment in a fixed basis.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : c_(dim) {}
  explicit Vector(std::vector<Rational> coords) : c_(std::move(coords)) {}
  Vector(std::initializer_list<Rational> coords) : c_(coords) {}

  static Vector basis(std::size_t dim, std::size_t i);
  static Vector from_ints(const std::vector<long>& coords);

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= Rational(-1); }
  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
  friend bool operator<(const Vector& a, const Vector& b) { return a.c_ < b.c_; }

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// A linear form on the standard apartment: phi(v) = sum_k coeff[k] * v[k].
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::size_t dim) : c_(dim) {}
  explicit LinearForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
  LinearForm(std::initializer_list<Rational> coeffs) : c_(coeffs) {}

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Vector& v) const;
  bool is_zero() const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& s);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
  friend LinearForm operator-(LinearForm a) { return a *= Rational(-1); }
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }
  friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.c_ < b.c_; }

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// Dense square-or-rectangular rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  Vector apply(const Vector& v) const;
  /// Row vector times matrix: (phi * M)(v) = phi(M v).
  LinearForm pull_back(const LinearForm& phi) const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.a_ < b.a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Rank of the matrix whose rows are the given coefficient vectors.
std::size_t rank_of_rows(std::vector<std::vector<Rational>> rows);

/// Solves sum_i c_i * columns[i] = target exactly. Returns the unique solution
/// when the columns are independent and the system is consistent.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Vector>& columns,
                                                   const Vector& target);

}  // namespace masure
