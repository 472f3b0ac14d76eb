#pragma once

// The interface a concrete building model provides, and the model-agnostic
// checks run on top of it: windowed apartment intersections (enclosedness,
// convexity, intertwiner) and retraction of segments to piecewise-linear paths.

#include "masure/heckepath.hpp"

#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace masure {

template <class M>
concept MasureModel = requires(const M& m, const typename M::Apartment& A, const typename M::Point& p,
                               const Vector& v, const SectorGerm& g, std::uint64_t seed, int complexity, long radius) {
  { m.system() } -> std::convertible_to<const RootGeneratingSystem&>;
  { m.standard_apartment() } -> std::convertible_to<typename M::Apartment>;
  { m.chart(A, v) } -> std::convertible_to<typename M::Point>;
  { m.locate(A, p) } -> std::convertible_to<std::optional<Vector>>;
  { m.same_point(p, p) } -> std::convertible_to<bool>;
  { m.retract(p, g) } -> std::convertible_to<Vector>;
  { m.random_apartment(seed, complexity) } -> std::convertible_to<typename M::Apartment>;
  { m.identical(A, A) } -> std::convertible_to<bool>;
  { m.window_points(radius) } -> std::convertible_to<std::vector<Vector>>;
  { m.on_window_boundary(v, radius) } -> std::convertible_to<bool>;
};

/// Outcome of one windowed intersection check of a pair of apartments.
struct IntersectionReport {
  Verdict verdict = Verdict::Pass;
  bool window_too_small = false;
  long radius = 0;
  std::size_t window_size = 0;
  std::vector<Vector> hits;               // chart coordinates in the first apartment
  EnclosedSet fitted{0};                  // enclosure of the hits, window constraints dropped
  bool enclosed = true;                   // no non-hit of the window lies in fitted
  bool convex = true;                     // lattice points between hits are hits
  std::optional<AffineWeylElement> intertwiner;
  std::optional<Vector> counterexample;
  std::string failure;
};

/// Special points of the segment [a, b] when both are special (integral).
inline std::vector<Vector> lattice_points_on_segment(const Vector& a, const Vector& b) {
  Vector d = b - a;
  Integer g = 0;
  for (std::size_t i = 0; i < d.dim(); ++i) g = gcd(g, Integer(abs(boost::multiprecision::numerator(d[i]))));
  std::vector<Vector> out;
  if (g == 0) return {a};
  long n = static_cast<long>(g);
  for (long j = 0; j <= n; ++j) out.push_back(a + Rational(j, n) * d);
  return out;
}

/// Searches W^v x Q^vee for w with w(lambda) = mu on every pair.
inline std::optional<AffineWeylElement> find_intertwiner(const RootGeneratingSystem& rgs,
                                                         const std::vector<std::pair<Vector, Vector>>& pairs,
                                                         std::size_t weyl_length, const Rational& translation_bound) {
  if (pairs.empty()) return AffineWeylElement::identity(rgs);
  for (const auto& w : weyl_ball(rgs, weyl_length)) {
    Vector t = pairs.front().second - act(w, pairs.front().first);
    auto c = coroot_coordinates(rgs, t);
    if (!c) continue;
    bool ok = true;
    for (const auto& x : *c) ok = ok && is_integer(x) && abs(x) <= translation_bound;
    if (!ok) continue;
    AffineWeylElement g(w, t);
    if (std::all_of(pairs.begin(), pairs.end(), [&](const auto& pr) { return g.apply(pr.first) == pr.second; }))
      return g;
  }
  return std::nullopt;
}

/// Intersection of A and B sampled at the special points of A's window.
template <MasureModel M>
IntersectionReport check_MA2(const M& model, const typename M::Apartment& A, const typename M::Apartment& B,
                             long radius) {
  const auto& rgs = model.system();
  IntersectionReport rep;
  rep.radius = radius;
  auto window = model.window_points(radius);
  rep.window_size = window.size();
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<bool> hit(window.size(), false);
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (auto mu = model.locate(B, model.chart(A, window[i]))) {
      hit[i] = true;
      rep.hits.push_back(window[i]);
      pairs.emplace_back(window[i], *mu);
    }
  }
  const long bound = rgs.finite_type() ? rgs.max_root_height() : 4;
  if (rep.hits.empty()) {
    rep.fitted = EnclosedSet::empty(rgs.dim());
  } else {
    // Constraints that no window point violates only restate the window.
    auto enclosure = enclosure_of(rgs, rep.hits, bound);
    std::vector<HalfApartment> cutting;
    for (const auto& h : enclosure.constraints())
      if (std::any_of(window.begin(), window.end(), [&](const Vector& v) { return !h.contains(v); }))
        cutting.push_back(h);
    rep.fitted = EnclosedSet(rgs.dim(), std::move(cutting));
    rep.fitted.set_height_truncated(enclosure.height_truncated());
  }

  for (std::size_t i = 0; i < window.size() && rep.enclosed; ++i)
    if (!hit[i] && rep.fitted.contains(window[i])) {
      rep.enclosed = false;
      rep.counterexample = window[i];
      rep.failure = "window point inside the fitted enclosed set is not in the intersection";
    }

  auto is_hit = [&](const Vector& v) {
    return std::find(rep.hits.begin(), rep.hits.end(), v) != rep.hits.end();
  };
  for (std::size_t i = 0; i < rep.hits.size() && rep.convex; ++i)
    for (std::size_t j = i + 1; j < rep.hits.size() && rep.convex; ++j)
      for (const auto& v : lattice_points_on_segment(rep.hits[i], rep.hits[j]))
        if (!is_hit(v)) {
          rep.convex = false;
          rep.counterexample = v;
          if (rep.failure.empty()) rep.failure = "special point between two hits is not in the intersection";
          break;
        }

  std::size_t length = rgs.finite_type() ? 64 : 8;
  rep.intertwiner = find_intertwiner(rgs, pairs, length, Rational(4 * radius));
  if (!rep.intertwiner && rep.failure.empty()) rep.failure = "no affine Weyl element intertwines the charts on the hits";

  bool boundary_all_hit = true, any_boundary = false;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (model.on_window_boundary(window[i], radius)) {
      any_boundary = true;
      boundary_all_hit = boundary_all_hit && hit[i];
    }
  rep.window_too_small = any_boundary && boundary_all_hit && !model.identical(A, B);

  if (!rep.enclosed || !rep.convex || !rep.intertwiner)
    rep.verdict = Verdict::Fail;
  else if (rep.window_too_small)
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

template <MasureModel M>
IntersectionReport intersect_with_standard(const M& model, const typename M::Apartment& A, long radius) {
  return check_MA2(model, model.standard_apartment(), A, radius);
}

/// Retraction of the segment [a, b] of A (chart coordinates): evaluated at
/// every wall crossing, then validated on each piece at its midpoint.
template <MasureModel M>
PLPath retract_segment_generic(const M& model, const typename M::Apartment& A, const Vector& a, const Vector& b,
                               const SectorGerm& germ, long height_bound) {
  const auto& rgs = model.system();
  std::vector<Rational> ts{0};
  for (const auto& c : walls_crossed(rgs, a, b, height_bound)) ts.push_back(c.t);
  ts.push_back(1);
  auto rho = [&](const Rational& t) { return model.retract(model.chart(A, a + t * (b - a)), germ); };
  std::vector<Vector> xs;
  for (const auto& t : ts) xs.push_back(rho(t));
  for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
    Rational mid = (ts[j] + ts[j + 1]) / 2;
    if (rho(mid) != Rational(1, 2) * (xs[j] + xs[j + 1]))
      throw Error(ErrorCode::NotPiecewiseAffine, "retraction is not affine between consecutive wall crossings");
  }
  return PLPath(std::move(ts), std::move(xs));
}

}  // namespace masure
