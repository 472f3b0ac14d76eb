#include "masure/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace masure {

namespace {

// Smallest prime factor decomposition q = p^e, or (0, 0).
std::pair<int, int> prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p) continue;
    int e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) return {0, 0};
    return {p, e};
  }
  return {0, 0};
}

// Digits of a in base p, little-endian, of length e.
std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    d[static_cast<std::size_t>(i)] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Product in F_p[x] / (modulus), modulus monic of degree e given by its low
// coefficients.
int poly_mul_mod(int a, int b, int p, int e, const std::vector<int>& low) {
  auto da = digits(a, p, e), db = digits(b, p, e);
  std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
  for (int k = 2 * e - 1; k >= e; --k) {
    int c = prod[static_cast<std::size_t>(k)];
    if (!c) continue;
    prod[static_cast<std::size_t>(k)] = 0;
    // x^e = -low(x)
    for (int i = 0; i < e; ++i) {
      auto& slot = prod[static_cast<std::size_t>(k - e + i)];
      slot = ((slot - c * low[static_cast<std::size_t>(i)]) % p + p) % p;
    }
  }
  prod.resize(static_cast<std::size_t>(e));
  return undigits(prod, p);
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::make(int q) {
  if (q < 2 || q > 256) throw Error(ErrorCode::InvalidField, "field order must lie in [2, 256]");
  auto [p, e] = prime_power(q);
  if (p == 0) throw Error(ErrorCode::InvalidField, "field order must be a prime power");
  std::shared_ptr<FiniteField> f(new FiniteField());
  f->q_ = q;
  f->p_ = p;
  f->add_.assign(static_cast<std::size_t>(q * q), 0);
  f->neg_.assign(static_cast<std::size_t>(q), 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, e);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p - da[i]) % p;
    f->neg_[static_cast<std::size_t>(a)] = undigits(dn, p);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, e);
      std::vector<int> ds(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) ds[i] = (da[i] + db[i]) % p;
      f->add_[static_cast<std::size_t>(a * q + b)] = undigits(ds, p);
    }
  }
  // Search a monic modulus of degree e for which every nonzero element is invertible.
  for (int cand = 0; cand < q; ++cand) {
    auto low = digits(cand, p, e);
    if (e > 1 && low[0] == 0) continue;
    std::vector<int> mul(static_cast<std::size_t>(q * q));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) mul[static_cast<std::size_t>(a * q + b)] = poly_mul_mod(a, b, p, e, low);
    std::vector<int> inv(static_cast<std::size_t>(q), 0);
    bool field = true;
    for (int a = 1; a < q && field; ++a) {
      for (int b = 1; b < q; ++b)
        if (mul[static_cast<std::size_t>(a * q + b)] == 1) inv[static_cast<std::size_t>(a)] = b;
      field = inv[static_cast<std::size_t>(a)] != 0;
    }
    if (!field) continue;
    f->mul_ = std::move(mul);
    f->inv_ = std::move(inv);
    return f;
  }
  throw Error(ErrorCode::InvalidField, "no irreducible modulus found");
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error(ErrorCode::SingularMatrix, "inverse of zero in a finite field");
  return inv_[static_cast<std::size_t>(a)];
}

long saturating_add(long a, long b) {
  if (a == Series::EXACT || b == Series::EXACT) return Series::EXACT;
  if (b > 0 && a > LONG_MAX - b) return Series::EXACT;
  return a + b;
}

Series Series::monomial(const FiniteField* f, int coeff, long exp) {
  Series s(f);
  if (coeff != 0) s.terms_.push_back({exp, coeff});
  return s;
}

Series Series::polynomial(const FiniteField* f, std::vector<Term> terms) {
  std::map<long, int> acc;
  for (const auto& [e, c] : terms) acc[e] = f->add(acc[e], c);
  Series s(f);
  for (const auto& [e, c] : acc)
    if (c) s.terms_.push_back({e, c});
  return s;
}

int Series::coefficient(long exp) const {
  if (exp >= cap_) throw Error(ErrorCode::PrecisionExhausted, "digit beyond the known precision requested");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exp, 0});
  return it != terms_.end() && it->first == exp ? it->second : 0;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& t : r.terms_) t.second = f_->neg(t.second);
  return r;
}

Series operator+(const Series& a, const Series& b) {
  const FiniteField* f = a.f_ ? a.f_ : b.f_;
  Series r(f);
  r.cap_ = std::min(a.cap_, b.cap_);
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    Series::Term t;
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      t = *i++;
    } else if (i == a.terms_.end() || j->first < i->first) {
      t = *j++;
    } else {
      t = {i->first, f->add(i->second, j->second)};
      ++i;
      ++j;
    }
    if (t.first >= r.cap_) break;
    if (t.second) r.terms_.push_back(t);
  }
  return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  const FiniteField* f = a.f_ ? a.f_ : b.f_;
  Series r(f);
  if (a.is_exact_zero() || b.is_exact_zero()) return r;
  r.cap_ = std::min(saturating_add(a.cap_, b.valuation()), saturating_add(b.cap_, a.valuation()));
  std::map<long, int> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      long e = ea + eb;
      if (e >= r.cap_) break;
      int& slot = acc[e];
      slot = f->add(slot, f->mul(ca, cb));
    }
  for (const auto& [e, c] : acc)
    if (c) r.terms_.push_back({e, c});
  return r;
}

Series Series::scaled(int c) const {
  Series r(f_);
  r.cap_ = cap_;
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.push_back({e, f_->mul(x, c)});
  return r;
}

Series Series::shifted(long k) const {
  Series r = *this;
  for (auto& t : r.terms_) t.first += k;
  if (!exact()) r.cap_ += k;
  return r;
}

Series Series::ramified(long d) const {
  Series r = *this;
  for (auto& t : r.terms_) t.first *= d;
  if (!exact()) r.cap_ *= d;
  return r;
}

Series Series::below(long e) const {
  if (e > cap_) throw Error(ErrorCode::PrecisionExhausted, "reduction needs digits beyond the known precision");
  Series r(f_);
  for (const auto& t : terms_)
    if (t.first < e) r.terms_.push_back(t);
  return r;
}

Series Series::quotient_above(long e) const {
  Series r(f_);
  r.cap_ = exact() ? EXACT : cap_ - e;
  for (const auto& t : terms_)
    if (t.first >= e) r.terms_.push_back({t.first - e, t.second});
  return r;
}

Series Series::with_cap(long cap) const {
  Series r(f_);
  r.cap_ = std::min(cap, cap_);
  for (const auto& t : terms_)
    if (t.first < r.cap_) r.terms_.push_back(t);
  return r;
}

Series Series::inverse(long relative_precision) const {
  if (terms_.empty()) throw Error(ErrorCode::PrecisionExhausted, "inverse of a series with unknown valuation");
  const long v = terms_.front().first;
  const int c0inv = f_->inv(terms_.front().second);
  if (is_monomial()) return monomial(f_, c0inv, -v);

  long g = 0;
  for (const auto& t : terms_) g = std::gcd(g, t.first - v);
  if (g == 0) g = 1;
  long rel = relative_precision * g;
  if (!exact()) rel = std::min(rel, cap_ - v);

  // x = t^v (c_0 + c_1 t^g + ...), inverse = t^-v (b_0 + b_1 t^g + ...)
  const long steps = (rel + g - 1) / g;
  std::vector<int> c(static_cast<std::size_t>(steps), 0), b(static_cast<std::size_t>(steps), 0);
  for (const auto& t : terms_) {
    long k = (t.first - v) / g;
    if (k < steps) c[static_cast<std::size_t>(k)] = t.second;
  }
  b[0] = c0inv;
  for (long k = 1; k < steps; ++k) {
    int s = 0;
    for (long j = 1; j <= k; ++j)
      if (c[static_cast<std::size_t>(j)]) s = f_->add(s, f_->mul(c[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(k - j)]));
    b[static_cast<std::size_t>(k)] = f_->neg(f_->mul(s, c0inv));
  }
  Series r(f_);
  r.cap_ = -v + rel;
  for (long k = 0; k < steps; ++k)
    if (b[static_cast<std::size_t>(k)] && -v + k * g < r.cap_) r.terms_.push_back({-v + k * g, b[static_cast<std::size_t>(k)]});
  return r;
}

bool operator<(const Series& a, const Series& b) {
  if (a.cap_ != b.cap_) return a.cap_ < b.cap_;
  return a.terms_ < b.terms_;
}

}  // namespace masure
