#include "masure/polyhedron.hpp"

#include "masure/error.hpp"

#include <set>

namespace masure {

namespace {

using System = std::set<Inequality>;

// Scale so the first nonzero coefficient has absolute value 1; constant-only
// rows are scaled to constant in {-1, 0, 1}.
Inequality normalized(Inequality q) {
  Rational lead = 0;
  for (const auto& c : q.coeffs)
    if (c != 0) {
      lead = abs(c);
      break;
    }
  if (lead == 0) lead = q.constant == 0 ? Rational(1) : Rational(abs(q.constant));
  if (lead != 1) {
    for (auto& c : q.coeffs) c /= lead;
    q.constant /= lead;
  }
  return q;
}

bool trivially_true(const Inequality& q) {
  for (const auto& c : q.coeffs)
    if (c != 0) return false;
  return q.strict ? q.constant > 0 : q.constant >= 0;
}

bool trivially_false(const Inequality& q) {
  for (const auto& c : q.coeffs)
    if (c != 0) return false;
  return q.strict ? q.constant <= 0 : q.constant < 0;
}

// Eliminates variable k from a system in which variables > k are already absent.
System eliminate(const System& sys, std::size_t k) {
  System out;
  std::vector<const Inequality*> lower, upper;
  for (const auto& q : sys) {
    if (q.coeffs[k] > 0)
      lower.push_back(&q);
    else if (q.coeffs[k] < 0)
      upper.push_back(&q);
    else
      out.insert(q);
  }
  for (const auto* p : lower)
    for (const auto* n : upper) {
      Rational sp = -n->coeffs[k], sn = p->coeffs[k];
      Inequality c;
      c.coeffs.resize(p->coeffs.size());
      for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = sp * p->coeffs[i] + sn * n->coeffs[i];
      c.coeffs[k] = 0;
      c.constant = sp * p->constant + sn * n->constant;
      c.strict = p->strict || n->strict;
      if (trivially_true(c)) continue;
      out.insert(normalized(std::move(c)));
    }
  return out;
}

// Picks a value in the interval described by the bounds, preferring 0 and
// small integers.
Rational choose(const std::optional<Rational>& lo, bool lo_strict, const std::optional<Rational>& hi,
                bool hi_strict) {
  auto ok = [&](const Rational& x) {
    if (lo && (lo_strict ? x <= *lo : x < *lo)) return false;
    if (hi && (hi_strict ? x >= *hi : x > *hi)) return false;
    return true;
  };
  if (ok(0)) return 0;
  if (lo && *lo > 0) {
    Rational c(floor_of(*lo) + 1);
    if (!lo_strict && is_integer(*lo)) c = *lo;
    if (ok(c)) return c;
  }
  if (hi && *hi < 0) {
    Rational c(ceil_of(*hi) - 1);
    if (!hi_strict && is_integer(*hi)) c = *hi;
    if (ok(c)) return c;
  }
  if (lo && hi) return (*lo + *hi) / 2;
  if (lo) return *lo + 1;
  return *hi - 1;
}

}  // namespace

bool Inequality::satisfied_by(const Vector& x) const {
  if (x.dim() != coeffs.size()) throw Error(ErrorCode::DimensionMismatch, "inequality/point mismatch");
  Rational s = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) s += coeffs[i] * x[i];
  return strict ? s > 0 : s >= 0;
}

bool operator<(const Inequality& a, const Inequality& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  if (a.constant != b.constant) return a.constant < b.constant;
  return a.strict < b.strict;
}

std::optional<Vector> find_feasible_point(std::size_t dim, const std::vector<Inequality>& system) {
  System sys;
  for (const auto& q : system) {
    if (q.coeffs.size() != dim) throw Error(ErrorCode::DimensionMismatch, "inequality dimension mismatch");
    if (trivially_true(q)) continue;
    if (trivially_false(q)) return std::nullopt;
    sys.insert(normalized(q));
  }
  // levels[k] involves only variables 0..k-1 after eliminating k..dim-1.
  std::vector<System> levels(dim + 1);
  levels[dim] = std::move(sys);
  for (std::size_t k = dim; k-- > 0;) {
    levels[k] = eliminate(levels[k + 1], k);
    for (const auto& q : levels[k])
      if (trivially_false(q)) return std::nullopt;
  }
  Vector x(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& q : levels[k + 1]) {
      const Rational& a = q.coeffs[k];
      if (a == 0) continue;
      Rational rest = q.constant;
      for (std::size_t i = 0; i < k; ++i)
        if (q.coeffs[i] != 0) rest += q.coeffs[i] * x[i];
      Rational bound = -rest / a;
      if (a > 0) {
        if (!lo || bound > *lo || (bound == *lo && q.strict)) {
          lo = bound;
          lo_strict = q.strict;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && q.strict)) {
          hi = bound;
          hi_strict = q.strict;
        }
      }
    }
    x[k] = choose(lo, lo_strict, hi, hi_strict);
  }
  return x;
}

}  // namespace masure
