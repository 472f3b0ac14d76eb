#include "masure/apartment.hpp"

#include <algorithm>
#include <map>

namespace masure {

bool LevelPattern::admits(const Rational& k) const { return is_integer(k / spacing); }

Rational LevelPattern::floor_level(const Rational& x) const { return spacing * Rational(floor_of(x / spacing)); }

Rational LevelPattern::ceil_level(const Rational& x) const { return spacing * Rational(ceil_of(x / spacing)); }

Wall Wall::normalized() const {
  if (root.is_positive()) return *this;
  return {root.negated(), -level};
}

bool operator==(const Wall& a, const Wall& b) {
  Wall x = a.normalized(), y = b.normalized();
  return x.root == y.root && x.level == y.level;
}

bool operator<(const Wall& a, const Wall& b) {
  Wall x = a.normalized(), y = b.normalized();
  if (!(x.root == y.root)) return x.root < y.root;
  return x.level < y.level;
}

HalfApartment HalfApartment::whole_space(const Root& root) {
  HalfApartment h{root, 0};
  h.everything = true;
  return h;
}

bool HalfApartment::contains(const Vector& v) const {
  if (everything) return true;
  Rational s = root(v) + level;
  return strict ? s > 0 : s >= 0;
}

Inequality HalfApartment::as_inequality() const {
  return {root.form().coeffs(), level, strict};
}

bool operator==(const HalfApartment& a, const HalfApartment& b) {
  if (a.everything || b.everything) return a.everything == b.everything && a.root == b.root;
  return a.root == b.root && a.level == b.level && a.strict == b.strict;
}

bool operator<(const HalfApartment& a, const HalfApartment& b) {
  if (!(a.root == b.root)) return a.root < b.root;
  if (a.everything != b.everything) return b.everything;
  if (a.level != b.level) return a.level < b.level;
  return a.strict > b.strict;
}

namespace {

Inequality negation(const Inequality& q) {
  Inequality n = q;
  for (auto& c : n.coeffs) c = -c;
  n.constant = -n.constant;
  n.strict = !q.strict;
  return n;
}

// Tighter of two constraints on the same root.
bool tighter(const HalfApartment& a, const HalfApartment& b) {
  if (a.level != b.level) return a.level < b.level;
  return a.strict && !b.strict;
}

}  // namespace

EnclosedSet::EnclosedSet(std::size_t dim, std::vector<HalfApartment> constraints) : dim_(dim) {
  std::vector<HalfApartment> per_root;
  for (auto& h : constraints) {
    if (h.everything) continue;
    if (h.root.form().dim() != dim) throw Error(ErrorCode::DimensionMismatch, "constraint dimension mismatch");
    auto it = std::find_if(per_root.begin(), per_root.end(), [&](const HalfApartment& o) { return o.root == h.root; });
    if (it == per_root.end())
      per_root.push_back(std::move(h));
    else if (tighter(h, *it))
      *it = std::move(h);
  }
  std::sort(per_root.begin(), per_root.end());

  std::vector<Inequality> all;
  for (const auto& h : per_root) all.push_back(h.as_inequality());
  if (!find_feasible_point(dim, all)) {
    empty_ = true;
    return;
  }
  std::vector<bool> keep(per_root.size(), true);
  for (std::size_t c = 0; c < per_root.size(); ++c) {
    std::vector<Inequality> sys;
    for (std::size_t o = 0; o < per_root.size(); ++o)
      if (o != c && keep[o]) sys.push_back(all[o]);
    sys.push_back(negation(all[c]));
    if (!find_feasible_point(dim, sys)) keep[c] = false;
  }
  for (std::size_t c = 0; c < per_root.size(); ++c)
    if (keep[c]) constraints_.push_back(std::move(per_root[c]));
}

EnclosedSet EnclosedSet::empty(std::size_t dim) {
  EnclosedSet e(dim);
  e.empty_ = true;
  return e;
}

bool EnclosedSet::contains(const Vector& v) const {
  if (empty_) return false;
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const HalfApartment& h) { return h.contains(v); });
}

std::vector<Inequality> EnclosedSet::inequalities() const {
  std::vector<Inequality> out;
  for (const auto& h : constraints_) out.push_back(h.as_inequality());
  return out;
}

std::optional<Vector> feasible(const EnclosedSet& e) {
  if (e.is_empty()) return std::nullopt;
  return find_feasible_point(e.dim(), e.inequalities());
}

std::optional<Vector> inclusion_witness(const EnclosedSet& a, const EnclosedSet& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "enclosed sets of different dimension");
  if (a.is_empty()) return std::nullopt;
  if (b.is_empty()) return feasible(a);
  auto base = a.inequalities();
  for (const auto& c : b.constraints()) {
    auto sys = base;
    sys.push_back(negation(c.as_inequality()));
    if (auto p = find_feasible_point(a.dim(), sys)) return p;
  }
  return std::nullopt;
}

bool enclosed_includes(const EnclosedSet& outer, const EnclosedSet& inner) {
  return !inclusion_witness(inner, outer).has_value();
}

bool enclosed_equal(const EnclosedSet& a, const EnclosedSet& b) {
  return enclosed_includes(a, b) && enclosed_includes(b, a);
}

EnclosedSet enclosure_of(const RootGeneratingSystem& rgs, const std::vector<Vector>& points, long height_bound,
                         const LevelPattern& pattern) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "enclosure of an empty point set");
  std::vector<HalfApartment> cons;
  for (const auto& alpha : enumerate_real_roots(rgs, height_bound)) {
    Rational lowest = alpha(points.front());
    for (const auto& p : points) lowest = std::min(lowest, alpha(p));
    cons.push_back({alpha, pattern.ceil_level(-lowest)});
  }
  EnclosedSet e(rgs.dim(), std::move(cons));
  e.set_height_truncated(!(rgs.finite_type() && height_bound >= rgs.max_root_height()));
  return e;
}

Vector affine_reflect(const RootGeneratingSystem& rgs, const Root& alpha, const Rational& k, const Vector& v) {
  if (alpha.form().dim() != rgs.dim()) throw Error(ErrorCode::NotARealRoot, "root does not belong to this system");
  return v - (alpha(v) + k) * alpha.coroot();
}

Wall reflect_wall(const RootGeneratingSystem& rgs, const Wall& w, const Root& alpha, const Rational& k) {
  // beta(r(u)) + l = (r_alpha beta)(u) - k beta(alpha^vee) + l
  Rational pairing = w.root(alpha.coroot());
  if (!is_integer(pairing)) throw Error(ErrorCode::NotARealRoot, "non-integral root pairing");
  long p = static_cast<long>(boost::multiprecision::numerator(pairing));
  std::vector<long> coords = w.root.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= p * alpha.coords()[i];
  return {root_from_coords(rgs, coords), w.level - k * pairing};
}

std::vector<Crossing> walls_crossed(const RootGeneratingSystem& rgs, const Vector& a, const Vector& b,
                                    long height_bound, const LevelPattern& pattern) {
  if (a == b) throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  std::map<Rational, std::vector<Wall>> by_t;
  for (const auto& alpha : positive_real_roots(rgs, height_bound)) {
    Rational fa = alpha(a), fb = alpha(b);
    if (fa == fb) continue;
    Rational lo = std::min(-fa, -fb), hi = std::max(-fa, -fb);
    Rational k = pattern.floor_level(lo) + pattern.spacing;
    for (; k < hi; k += pattern.spacing) by_t[(-k - fa) / (fb - fa)].push_back({alpha, k});
  }
  std::vector<Crossing> out;
  for (auto& [t, walls] : by_t) {
    std::sort(walls.begin(), walls.end());
    out.push_back({t, std::move(walls)});
  }
  return out;
}

std::vector<Wall> walls_meeting(const RootGeneratingSystem& rgs, const Vector& a, const Vector& b,
                                long height_bound, const LevelPattern& pattern) {
  std::vector<Wall> out;
  for (const auto& alpha : positive_real_roots(rgs, height_bound)) {
    Rational fa = alpha(a), fb = alpha(b);
    Rational lo = std::min(-fa, -fb), hi = std::max(-fa, -fb);
    for (Rational k = pattern.ceil_level(lo); k <= hi; k += pattern.spacing) out.push_back({alpha, k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool generic_position(const Vector& a, const Vector& b, const std::vector<Wall>& walls, bool include_end) {
  if (a == b) throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  std::vector<Wall> distinct;
  for (const auto& w : walls) distinct.push_back(w.normalized());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::map<Rational, int> hits;
  int whole = 0;  // walls containing the whole segment
  int meeting = 0;
  for (const auto& w : distinct) {
    Rational fa = w.root(a) + w.level, fb = w.root(b) + w.level;
    if (fa == fb) {
      if (fa == 0) {
        ++whole;
        ++meeting;
      }
      continue;
    }
    Rational t = fa / (fa - fb);
    if (t < 0 || t > 1 || (!include_end && t == 1)) continue;
    ++meeting;
    if (++hits[t] > 1) return false;
  }
  if (whole > 0 && meeting > 1) return false;
  return true;
}

AffineWeylElement AffineWeylElement::identity(const RootGeneratingSystem& rgs) {
  return {WeylElement::identity(rgs), Vector(rgs.dim())};
}

AffineWeylElement AffineWeylElement::translation(const RootGeneratingSystem& rgs, Vector t) {
  return {WeylElement::identity(rgs), std::move(t)};
}

AffineWeylElement AffineWeylElement::reflection(const RootGeneratingSystem& rgs, const Root& alpha,
                                                const Rational& k) {
  return {reflection_of(rgs, alpha), -(k * alpha.coroot())};
}

bool AffineWeylElement::translation_in_coroot_lattice(const RootGeneratingSystem& rgs) const {
  auto c = coroot_coordinates(rgs, translation_);
  return c && std::all_of(c->begin(), c->end(), [](const Rational& x) { return is_integer(x); });
}

AffineWeylElement AffineWeylElement::inverse() const {
  WeylElement inv = linear_.inverse();
  Vector t = -act(inv, translation_);
  return {std::move(inv), std::move(t)};
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
  return {a.linear_ * b.linear_, act(a.linear_, b.translation_) + a.translation_};
}

bool Sector::contains(const RootGeneratingSystem& rgs, const Vector& v) const {
  VectorialFace f{sign, WeylElement::from_word(rgs, weyl), {}};
  return f.contains(rgs, v - base);
}

}  // namespace masure
