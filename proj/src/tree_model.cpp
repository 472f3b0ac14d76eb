#include "masure/tree_model.hpp"

#include "masure/rng.hpp"

#include <algorithm>

namespace masure::tree {

End End::branch(long c, std::vector<int> prefix, int tail) {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  End e{Kind::Branch, c, std::move(prefix), tail};
  return e;
}

Vertex parent(const Vertex& x) {
  if (x.w.empty()) return {x.c - 1, {}};
  Vertex p = x;
  p.w.pop_back();
  return p;
}

std::vector<Vertex> neighbors(const Vertex& x, int q) {
  std::vector<Vertex> out{parent(x)};
  if (x.w.empty()) {
    out.push_back({x.c + 1, {}});
    for (int l = 0; l <= q - 2; ++l) out.push_back({x.c, {l}});
  } else {
    for (int l = 0; l <= q - 1; ++l) {
      Vertex y = x;
      y.w.push_back(l);
      out.push_back(std::move(y));
    }
  }
  return out;
}

long distance(const Vertex& a, const Vertex& b) {
  long la = static_cast<long>(a.w.size()), lb = static_cast<long>(b.w.size());
  if (a.c != b.c) return la + lb + std::labs(a.c - b.c);
  long common = 0;
  while (common < la && common < lb && a.w[common] == b.w[common]) ++common;
  return la + lb - 2 * common;
}

namespace {

long horo_minus(const Vertex& x) { return x.c + static_cast<long>(x.w.size()); }
long horo_plus(const Vertex& x) { return x.c - static_cast<long>(x.w.size()); }

bool is_prefix_of_end(const std::vector<int>& w, const End& e) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != e.label(i)) return false;
  return true;
}

}  // namespace

TreeModel::TreeModel(int q)
    : q_(q),
      rgs_(RootGeneratingSystem::with_realization(make_matrix({{2}}), {Vector{2}}, {LinearForm{1}})) {
  if (q < 2) throw Error(ErrorCode::ConfigError, "tree model needs q >= 2");
}

void TreeModel::validate(const End& e) const {
  if (e.kind != End::Kind::Branch) return;
  auto bad = [](const std::string& why) { throw Error(ErrorCode::ConfigError, "invalid tree end: " + why); };
  if (e.label(0) < 0 || e.label(0) > q_ - 2) bad("first label must lie in [0, q-2]");
  for (std::size_t i = 1; i <= e.prefix.size(); ++i)
    if (e.label(i) < 0 || e.label(i) > q_ - 1) bad("labels must lie in [0, q-1]");
}

void TreeModel::validate(const Apartment& a) const {
  validate(a.e1);
  validate(a.e2);
  if (a.e1 == a.e2) throw Error(ErrorCode::ConfigError, "an apartment needs two distinct ends");
}

Vertex TreeModel::step_toward_end(const Vertex& x, const End& e) const {
  switch (e.kind) {
    case End::Kind::MinusInfinity: return parent(x);
    case End::Kind::PlusInfinity: return x.w.empty() ? Vertex{x.c + 1, {}} : parent(x);
    case End::Kind::Branch: break;
  }
  if (x.c == e.c && is_prefix_of_end(x.w, e)) {
    Vertex y = x;
    y.w.push_back(e.label(x.w.size()));
    return y;
  }
  if (!x.w.empty()) return parent(x);
  return {x.c < e.c ? x.c + 1 : x.c - 1, {}};
}

Vertex TreeModel::step_toward_vertex(const Vertex& x, const Vertex& target) const {
  if (x == target) throw Error(ErrorCode::DegenerateSegment, "step toward the vertex itself");
  if (x.c == target.c && x.w.size() < target.w.size() && std::equal(x.w.begin(), x.w.end(), target.w.begin())) {
    Vertex y = x;
    y.w.push_back(target.w[x.w.size()]);
    return y;
  }
  if (!x.w.empty()) return parent(x);
  return {target.c > x.c ? x.c + 1 : x.c - 1, {}};
}

bool TreeModel::on_line(const Apartment& a, const Vertex& x) const {
  return step_toward_end(x, a.e1) != step_toward_end(x, a.e2);
}

Vertex TreeModel::junction(const Apartment& a) const {
  using K = End::Kind;
  const End& e1 = a.e1;
  const End& e2 = a.e2;
  if (e1.kind != K::Branch && e2.kind != K::Branch) return {0, {}};
  if (e1.kind != K::Branch) return {e2.c, {}};
  if (e2.kind != K::Branch || e1.c != e2.c) return {e1.c, {}};
  std::size_t limit = std::max(e1.prefix.size(), e2.prefix.size()) + 1;
  Vertex o{e1.c, {}};
  for (std::size_t i = 0; i < limit && e1.label(i) == e2.label(i); ++i) o.w.push_back(e1.label(i));
  return o;
}

long TreeModel::junction_coordinate(const Apartment& a) const { return horo_minus(junction(a)); }

std::optional<long> TreeModel::vertex_coordinate(const Apartment& a, const Vertex& x) const {
  if (!on_line(a, x)) return std::nullopt;
  Vertex o = junction(a);
  long so = horo_minus(o);
  if (x == o) return so;
  long d = distance(o, x);
  return step_toward_vertex(o, x) == step_toward_end(o, a.e2) ? so + d : so - d;
}

Vertex TreeModel::vertex_at(const Apartment& a, long s) const {
  Vertex x = junction(a);
  long d = s - horo_minus(x);
  const End& e = d >= 0 ? a.e2 : a.e1;
  for (long i = 0; i < std::labs(d); ++i) x = step_toward_end(x, e);
  return x;
}

Point TreeModel::chart(const Apartment& a, const Vector& v) const {
  if (v.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "tree charts are one-dimensional");
  const Rational& s = v[0];
  long f = static_cast<long>(floor_of(s));
  if (s == f) return {vertex_at(a, f), 0};
  Vertex lo = vertex_at(a, f), hi = vertex_at(a, f + 1);
  if (parent(lo) == hi) return {lo, s - f};
  return {hi, Rational(f + 1) - s};
}

std::optional<Vector> TreeModel::locate(const Apartment& a, const Point& p) const {
  auto sx = vertex_coordinate(a, p.x);
  if (!sx) return std::nullopt;
  if (p.t == 0) return Vector{Rational(*sx)};
  auto sp = vertex_coordinate(a, parent(p.x));
  if (!sp) return std::nullopt;
  return Vector{Rational(*sx) + p.t * Rational(*sp - *sx)};
}

Vector TreeModel::retract(const Point& p, const SectorGerm& germ) const {
  if (germ.is_minus_infinity()) return Vector{Rational(horo_minus(p.x)) - p.t};
  if (germ.is_plus_infinity()) {
    long g = horo_plus(p.x), gp = horo_plus(parent(p.x));
    return Vector{Rational(g) + p.t * Rational(gp - g)};
  }
  throw Error(ErrorCode::OutOfRange, "retractions are implemented for the germs +infinity and -infinity");
}

PLPath TreeModel::retract_segment(const Apartment& a, const Vector& from, const Vector& to,
                                  const SectorGerm& germ) const {
  if (from == to) throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  Vector ra = retract(chart(a, from), germ), rb = retract(chart(a, to), germ);
  End target = germ.is_minus_infinity() ? End::minus_infinity() : End::plus_infinity();
  if (!germ.is_minus_infinity() && !germ.is_plus_infinity())
    throw Error(ErrorCode::OutOfRange, "retractions are implemented for the germs +infinity and -infinity");
  if (a.e1 == target || a.e2 == target) return PLPath::segment(ra, rb);

  // The ray from any point of the line toward the germ's end leaves the line at p.
  Vertex p = junction(a);
  for (;;) {
    Vertex next = step_toward_end(p, target);
    if (!on_line(a, next)) break;
    p = next;
  }
  Rational sp(*vertex_coordinate(a, p));
  Rational s0 = from[0], s1 = to[0];
  if ((sp - s0) * (sp - s1) >= 0) return PLPath::segment(ra, rb);
  Rational t = (sp - s0) / (s1 - s0);
  return PLPath({0, t, 1}, {ra, retract(chart(a, Vector{sp}), germ), rb});
}

Apartment TreeModel::random_apartment(std::uint64_t seed, int complexity) const {
  if (complexity <= 0) return standard_apartment();
  Rng rng(seed);
  const long k = complexity;
  auto draw = [&](End standard) {
    if (rng.below(3) == 0) return standard;
    long c = rng.between(-3 * k, 3 * k);
    std::vector<int> prefix;
    long len = rng.between(0, k);
    for (long i = 0; i < len; ++i) prefix.push_back(static_cast<int>(rng.between(0, i == 0 ? q_ - 2 : q_ - 1)));
    int tail = static_cast<int>(rng.between(0, prefix.empty() ? q_ - 2 : q_ - 1));
    return End::branch(c, std::move(prefix), tail);
  };
  for (;;) {
    Apartment a{draw(End::minus_infinity()), draw(End::plus_infinity())};
    if (!(a.e1 == a.e2)) return a;
  }
}

bool TreeModel::identical(const Apartment& a, const Apartment& b) const {
  return (a.e1 == b.e1 && a.e2 == b.e2) || (a.e1 == b.e2 && a.e2 == b.e1);
}

std::vector<Vector> TreeModel::window_points(long radius) const {
  std::vector<Vector> out;
  for (long s = -radius; s <= radius; ++s) out.push_back(Vector{Rational(s)});
  return out;
}

bool TreeModel::on_window_boundary(const Vector& v, long radius) const { return abs(v[0]) == radius; }

static_assert(MasureModel<TreeModel>);

}  // namespace masure::tree
