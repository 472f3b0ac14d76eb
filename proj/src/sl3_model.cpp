#include "masure/sl3_model.hpp"

#include "masure/rng.hpp"

#include <numeric>

namespace masure::sl3 {

namespace {

RootGeneratingSystem a2_system() {
  auto m = make_matrix({{2, -1}, {-1, 2}});
  return RootGeneratingSystem::with_realization(m, {Vector{-1, 1}, Vector{-1, -2}},
                                                {LinearForm{-1, 1}, LinearForm{0, -1}});
}

}  // namespace

long common_denominator(const Vector& v) {
  long d = 1;
  for (std::size_t i = 0; i < v.dim(); ++i)
    d = std::lcm(d, static_cast<long>(boost::multiprecision::denominator(v[i])));
  return d;
}

Sl3Model::Sl3Model(int q, long precision)
    : field_(FiniteField::make(q)), precision_(precision), rgs_(a2_system()) {
  if (precision < 1) throw Error(ErrorCode::OutOfRange, "precision must be positive");
}

Apartment Sl3Model::apartment(Frame frame) const {
  Apartment a;
  a.g = frame.matrix(field());
  a.g_inv = frame.inverse(field()).matrix(field());
  a.frame = std::move(frame);
  return a;
}

Elementary Sl3Model::root_element(const Root& alpha, Series u) const {
  // alpha = c1 alpha_1 + c2 alpha_2 with alpha_1 = eps_1 - eps_0, alpha_2 = eps_2 - eps_1
  const auto& c = alpha.coords();
  std::array<long, 3> eps{-c[0], c[0] - c[1], c[1]};
  int plus = -1, minus = -1;
  for (int i = 0; i < 3; ++i) {
    if (eps[static_cast<std::size_t>(i)] == 1) plus = i;
    if (eps[static_cast<std::size_t>(i)] == -1) minus = i;
  }
  if (plus < 0 || minus < 0) throw Error(ErrorCode::NotARealRoot, "not a root of A2");
  return Elementary{minus, plus, std::move(u)};
}

Mat3 Sl3Model::lattice_basis(const Mat3& g, const Vector& v, long d) const {
  if (v.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "SL3 points have two coordinates");
  auto scaled = [&](const Rational& x) {
    Rational y = x * d;
    if (!is_integer(y)) throw Error(ErrorCode::OutOfRange, "ramification does not clear the denominators");
    return static_cast<long>(numerator(y));
  };
  std::array<long, 3> e{scaled(v[0]), scaled(v[1]), 0};
  return scale_columns(d == 1 ? g : ramified(g, d), e);
}

std::optional<Vector> Sl3Model::locate(const Apartment& a, const Point& p) const {
  const long d = common_denominator(p.v);
  auto form = hermite_form(lattice_basis(a.g_inv * p.g, p.v, d), precision_);
  if (!form.diagonal()) return std::nullopt;
  return Vector{Rational(form.a[0], d), Rational(form.a[1], d)};
}

LatticeClass Sl3Model::canonical_form(const Point& p, long d) const {
  return hermite_form(lattice_basis(p.g, p.v, d), precision_);
}

bool Sl3Model::same_point(const Point& p, const Point& r) const {
  const long d = std::lcm(common_denominator(p.v), common_denominator(r.v));
  return canonical_form(p, d) == canonical_form(r, d);
}

Vector Sl3Model::retract(const Point& p, const SectorGerm& germ) const {
  if (!germ.is_plus_infinity() && !germ.is_minus_infinity())
    throw Error(ErrorCode::OutOfRange, "retraction is implemented for the germs +infinity and -infinity");
  const long d = common_denominator(p.v);
  auto a = triangular_valuations(lattice_basis(p.g, p.v, d), germ.is_plus_infinity() ? Triangle::Upper : Triangle::Lower,
                                 precision_);
  return Vector{Rational(a[0] - a[2], d), Rational(a[1] - a[2], d)};
}

Apartment Sl3Model::random_apartment(std::uint64_t seed, int complexity) const {
  if (complexity <= 0) return standard_apartment();
  Rng rng(seed);
  const long k = complexity;
  const auto roots = enumerate_real_roots(rgs_, 2);
  auto coeff = [&] { return static_cast<int>(rng.between(1, q() - 1)); };
  for (;;) {
    Frame f;
    const long len = rng.between(1, k + 1);
    for (long n = 0; n < len; ++n) {
      auto kind = rng.below(8);
      if (kind < 6) {
        const Root& alpha = roots[rng.below(roots.size())];
        long e = rng.between(-k, k);
        std::vector<Series::Term> terms{{e, coeff()}};
        if (rng.chance(0.5)) terms.push_back({e + rng.between(1, k), coeff()});
        f.word.push_back(root_element(alpha, Series::polynomial(field(), terms)));
      } else if (kind == 6) {
        long a = rng.between(-1, 1), b = rng.between(-1, 1);
        if (std::abs(a + b) > 1) b = 0;
        f.word.push_back(TorusPower{{a, b, -a - b}});
      } else {
        SignedPermutation s;
        for (int i = 2; i > 0; --i) std::swap(s.image[static_cast<std::size_t>(i)], s.image[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        f.word.push_back(s);
      }
    }
    Apartment a = apartment(std::move(f));
    // Frames are invertible by construction; this checks it within the precision budget.
    try {
      hermite_form(a.g, precision_);
      hermite_form(a.g_inv, precision_);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      continue;
    }
    return a;
  }
}

bool Sl3Model::identical(const Apartment& a, const Apartment& b) const {
  Mat3 h = b.g_inv * a.g;
  for (int r = 0; r < 3; ++r) {
    int nonzero = 0;
    for (int c = 0; c < 3; ++c) nonzero += h[r][c].is_exact_zero() ? 0 : 1;
    if (nonzero != 1) return false;
  }
  for (int c = 0; c < 3; ++c) {
    int nonzero = 0;
    for (int r = 0; r < 3; ++r) nonzero += h[r][c].is_exact_zero() ? 0 : 1;
    if (nonzero != 1) return false;
  }
  return true;
}

std::vector<Vector> Sl3Model::window_points(long radius) const {
  std::vector<Vector> out;
  for (long x = -radius; x <= radius; ++x)
    for (long y = -radius; y <= radius; ++y) out.push_back(Vector{Rational(x), Rational(y)});
  return out;
}

bool Sl3Model::on_window_boundary(const Vector& v, long radius) const {
  return abs(v[0]) == radius || abs(v[1]) == radius;
}

static_assert(MasureModel<Sl3Model>);

}  // namespace masure::sl3
