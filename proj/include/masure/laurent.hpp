#pragma once

// Finite fields F_q and sparse truncated Laurent series over them.
//
// A Series is known modulo t^cap: the stored terms are exactly the nonzero
// coefficients below cap. cap == EXACT marks a Laurent polynomial. Results of
// arithmetic carry the cap they are entitled to, and any request for a digit
// at or beyond the cap raises PrecisionExhausted.

#include "masure/error.hpp"

#include <climits>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace masure {

class FiniteField {
 public:
  /// q must be a prime power in [2, 256]; InvalidField otherwise.
  static std::shared_ptr<const FiniteField> make(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;

 private:
  FiniteField() = default;
  int q_ = 0, p_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

class Series {
 public:
  static constexpr long EXACT = LONG_MAX;
  using Term = std::pair<long, int>;  // (exponent, nonzero coefficient)

  Series() = default;
  explicit Series(const FiniteField* f) : f_(f) {}
  static Series monomial(const FiniteField* f, int coeff, long exp);
  /// Terms may be unsorted and contain zeros or repeated exponents.
  static Series polynomial(const FiniteField* f, std::vector<Term> terms);
  static Series one(const FiniteField* f) { return monomial(f, 1, 0); }

  const FiniteField* field() const { return f_; }
  const std::vector<Term>& terms() const { return terms_; }
  long cap() const { return cap_; }
  bool exact() const { return cap_ == EXACT; }

  bool is_exact_zero() const { return exact() && terms_.empty(); }
  /// True when some nonzero digit is known; otherwise the valuation is only
  /// bounded below by cap.
  bool valuation_known() const { return !terms_.empty(); }
  /// Lowest nonzero exponent, or cap when no digit is known.
  long valuation() const { return terms_.empty() ? cap_ : terms_.front().first; }
  int coefficient(long exp) const;
  bool is_monomial() const { return exact() && terms_.size() == 1; }

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series scaled(int c) const;
  /// Multiplication by t^k (exact).
  Series shifted(long k) const;
  /// Substitution t -> t^d, d >= 1 (exact on known digits).
  Series ramified(long d) const;
  /// The digits below e as an exact polynomial (no digit at or past cap may be needed).
  Series below(long e) const;
  /// (x - x.below(e)) / t^e, known modulo t^(cap - e).
  Series quotient_above(long e) const;
  Series with_cap(long cap) const;
  /// Inverse of a series with known valuation; exact for exact monomials,
  /// otherwise to relative precision `relative_precision` steps of the
  /// exponent lattice spanned by the series.
  Series inverse(long relative_precision) const;

  /// Equality of representations (same cap and same digits).
  friend bool operator==(const Series& a, const Series& b) { return a.cap_ == b.cap_ && a.terms_ == b.terms_; }
  friend bool operator<(const Series& a, const Series& b);

 private:
  const FiniteField* f_ = nullptr;
  std::vector<Term> terms_;
  long cap_ = EXACT;
};

long saturating_add(long a, long b);

}  // namespace masure
