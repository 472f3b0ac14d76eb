#include "doctest.h"
#include "lattice_oracles.hpp"

#include "masure/sl3_model.hpp"

#include <map>

using namespace masure;
using namespace masure::sl3;

namespace {

Vector V(long x, long y) { return Vector{Rational(x), Rational(y)}; }

Mat3 random_basis(Rng& rng, const FiniteField* f) {
  for (;;) {
    Mat3 m;
    for (auto& row : m)
      for (auto& x : row) x = oracle::random_polynomial(rng, f, -2, 3, 2);
    if (!determinant(m).terms().empty()) return m;
  }
}

}  // namespace

TEST_CASE("finite fields satisfy the field axioms") {
  for (int q : {2, 3, 4, 5, 8, 9}) {
    auto f = FiniteField::make(q);
    CHECK(f->order() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        }
      }
    }
  }
  for (int q : {5, 7}) {
    auto f = FiniteField::make(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) CHECK(f->mul(a, b) == a * b % q);
  }
}

TEST_CASE("invalid field orders are rejected") {
  for (int q : {0, 1, 6, 12, 257}) {
    try {
      FiniteField::make(q);
      FAIL("accepted q=" << q);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidField);
    }
  }
}

TEST_CASE("series multiplication matches dense convolution") {
  auto f = FiniteField::make(5);
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    auto a = oracle::random_polynomial(rng, f.get(), -3, 4, 4);
    auto b = oracle::random_polynomial(rng, f.get(), -3, 4, 4);
    std::map<long, int> dense;
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) dense[ea + eb] = (dense[ea + eb] + ca * cb) % 5;
    auto p = a * b;
    CHECK(p.exact());
    for (long e = -8; e <= 8; ++e) CHECK(p.coefficient(e) == dense[e]);
  }
}

TEST_CASE("inverses carry their precision and never fake digits") {
  auto f = FiniteField::make(3);
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    auto x = oracle::random_unit(rng, f.get(), 4, 3).shifted(rng.between(-3, 3));
    for (long n : {1L, 5L, 40L}) {
      auto y = x.inverse(n);
      auto p = x * y;
      // known digits of x * y are those of 1
      CHECK(p.coefficient(0) == 1);
      CHECK(p.terms().size() == 1);
      CHECK(p.cap() >= n);
      CHECK_THROWS_AS(y.coefficient(y.cap()), Error);
    }
  }
  auto m = Series::monomial(f.get(), 2, 3);
  CHECK(m.inverse(1).exact());
  CHECK(m.inverse(1).coefficient(-3) == 2);
  Series unknown = Series(f.get()).with_cap(5);
  CHECK_THROWS_AS(unknown.inverse(10), Error);
}

TEST_CASE("ramification multiplies exponents") {
  auto f = FiniteField::make(2);
  auto x = Series::polynomial(f.get(), {{-1, 1}, {2, 1}});
  auto r = x.ramified(3);
  CHECK(r.coefficient(-3) == 1);
  CHECK(r.coefficient(6) == 1);
  CHECK(r.terms().size() == 2);
}

TEST_CASE("canonical form is a normal form for lattice classes") {
  auto f = FiniteField::make(2);
  Rng rng(11);
  for (int k = 0; k < 150; ++k) {
    Mat3 b = random_basis(rng, f.get());
    Mat3 u = oracle::random_unimodular(rng, f.get(), 4);
    Mat3 b2 = b * u;
    long s = rng.between(-3, 3);
    for (auto& row : b2)
      for (auto& x : row) x = x.shifted(s);
    auto c1 = hermite_form(b, 40), c2 = hermite_form(b2, 40);
    CHECK(c1 == c2);
    CHECK(oracle::same_class(b, b2));
    // an unrelated basis: both criteria agree
    Mat3 other = random_basis(rng, f.get());
    CHECK((hermite_form(other, 40) == c1) == oracle::same_class(other, b));
  }
}

TEST_CASE("canonical form of a diagonal lattice reads its exponents") {
  auto f = FiniteField::make(3);
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y) {
      auto c = hermite_form(oracle::diagonal_basis(f.get(), x, y), 40);
      CHECK(c.diagonal());
      CHECK(c.a == std::array<long, 2>{x, y});
    }
}

TEST_CASE("low precision either reproduces the result or raises PrecisionExhausted") {
  auto f = FiniteField::make(2);
  Rng rng(12);
  int exhausted = 0;
  for (int k = 0; k < 200; ++k) {
    Mat3 b = random_basis(rng, f.get()) * oracle::random_unimodular(rng, f.get(), 3);
    auto full = hermite_form(b, 40);
    try {
      auto low = hermite_form(b, 1);
      CHECK(low == full);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PrecisionExhausted);
      ++exhausted;
    }
  }
  CHECK(exhausted > 0);
}

TEST_CASE("triangular valuations agree with the minor-ideal oracle") {
  for (int q : {2, 3, 4}) {
    auto f = FiniteField::make(q);
    Rng rng(static_cast<std::uint64_t>(20 + q));
    for (int k = 0; k < 100; ++k) {
      Mat3 b = random_basis(rng, f.get());
      CHECK(triangular_valuations(b, Triangle::Lower, 40) == oracle::minor_valuations(b, false));
      CHECK(triangular_valuations(b, Triangle::Upper, 40) == oracle::minor_valuations(b, true));
    }
  }
}

TEST_CASE("realization is A2 with Z^2 special points") {
  Sl3Model m(2);
  const auto& rgs = m.system();
  CHECK(rgs.rank() == 2);
  CHECK(rgs.dim() == 2);
  CHECK(rgs.finite_type());
  CHECK(rgs.max_root_height() == 2);
  CHECK(m.window_points(6).size() == 169);
  CHECK(m.on_window_boundary(V(6, 0), 6));
  CHECK(m.on_window_boundary(V(-3, -6), 6));
  CHECK_FALSE(m.on_window_boundary(V(5, -5), 6));
}

TEST_CASE("standard chart and retractions are the identity on the standard apartment") {
  Sl3Model m(3);
  auto std_ap = m.standard_apartment();
  for (const auto& v : m.window_points(3)) {
    auto p = m.chart(std_ap, v);
    CHECK(m.locate(std_ap, p) == v);
    CHECK(m.retract(p, PLUS_INFINITY) == v);
    CHECK(m.retract(p, MINUS_INFINITY) == v);
  }
  Vector r{Rational(1, 3), Rational(-5, 2)};
  CHECK(m.locate(std_ap, m.chart(std_ap, r)) == r);
  CHECK(m.retract(m.chart(std_ap, r), MINUS_INFINITY) == r);
}

TEST_CASE("lower unipotents over O retract toward -infinity to the chart point") {
  auto m = Sl3Model(2);
  const auto* f = m.field();
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    Mat3 u = identity3(f);
    u[1][0] = oracle::random_polynomial(rng, f, 0, 4, 3);
    u[2][0] = oracle::random_polynomial(rng, f, 0, 4, 3);
    u[2][1] = oracle::random_polynomial(rng, f, 0, 4, 3);
    Vector v = V(rng.between(-4, 4), rng.between(-4, 4));
    CHECK(m.retract(Point{u, v}, MINUS_INFINITY) == v);
    Mat3 ut = identity3(f);
    ut[0][1] = u[1][0];
    ut[0][2] = u[2][0];
    ut[1][2] = u[2][1];
    CHECK(m.retract(Point{ut, v}, PLUS_INFINITY) == v);
  }
}

TEST_CASE("x_alpha(u) fixes exactly D(alpha, omega(u))") {
  for (int q : {2, 3}) {
    Sl3Model m(q);
    const auto& rgs = m.system();
    for (const auto& alpha : enumerate_real_roots(rgs, 2)) {
      for (long k : {0L, 1L, 2L}) {
        std::vector<Series::Term> terms{{k, 1}};
        if (q == 3) terms.push_back({k + 1, 2});
        auto A = m.apartment(Frame{{m.root_element(alpha, Series::polynomial(m.field(), terms))}});
        auto rep = intersect_with_standard(m, A, 6);
        CHECK(rep.verdict == Verdict::Pass);
        for (const auto& v : m.window_points(6)) {
          bool in = alpha(v) + k >= 0;
          CHECK((std::find(rep.hits.begin(), rep.hits.end(), v) != rep.hits.end()) == in);
        }
        EnclosedSet expected(2, {HalfApartment{alpha, Rational(k)}});
        CHECK(enclosed_equal(rep.fitted, expected));
      }
    }
  }
}

TEST_CASE("membership agrees with the exhaustive class oracle") {
  Sl3Model m(2);
  const auto* f = m.field();
  auto std_ap = m.standard_apartment();
  Rng rng(6);
  for (int k = 0; k < 12; ++k) {
    auto A = m.random_apartment(derive_seed(6, 0, static_cast<std::uint64_t>(k)), 2);
    for (int s = 0; s < 6; ++s) {
      Vector v = V(rng.between(-3, 3), rng.between(-3, 3));
      auto p = m.chart(A, v);
      auto located = m.locate(std_ap, p);
      std::array<long, 3> e{static_cast<long>(numerator(v[0])), static_cast<long>(numerator(v[1])), 0};
      auto pre = oracle::standard_preimage(f, scale_columns(A.g, e), 10);
      REQUIRE(located.has_value() == pre.has_value());
      if (pre) CHECK(*located == V((*pre)[0], (*pre)[1]));
    }
  }
}

TEST_CASE("same_point agrees with the adjugate oracle") {
  Sl3Model m(2);
  Rng rng(8);
  for (int k = 0; k < 60; ++k) {
    auto A = m.random_apartment(derive_seed(8, 0, static_cast<std::uint64_t>(k)), 2);
    auto B = m.random_apartment(derive_seed(8, 1, static_cast<std::uint64_t>(k)), 2);
    Vector v = V(rng.between(-2, 2), rng.between(-2, 2)), w = V(rng.between(-2, 2), rng.between(-2, 2));
    std::array<long, 3> ev{static_cast<long>(numerator(v[0])), static_cast<long>(numerator(v[1])), 0};
    std::array<long, 3> ew{static_cast<long>(numerator(w[0])), static_cast<long>(numerator(w[1])), 0};
    CHECK(m.same_point(m.chart(A, v), m.chart(B, w)) ==
          oracle::same_class(scale_columns(A.g, ev), scale_columns(B.g, ew)));
    CHECK(m.same_point(m.chart(A, v), m.chart(A, v)));
  }
}

TEST_CASE("retraction of rational points interpolates over alcoves") {
  Sl3Model m(2);
  Rng rng(9);
  for (int k = 0; k < 40; ++k) {
    auto A = m.random_apartment(derive_seed(9, 0, static_cast<std::uint64_t>(k)), 2);
    Vector v{Rational(rng.between(-30, 30), 7), Rational(rng.between(-30, 30), 5)};
    // Freudenthal alcove of v: walls are v1, v2, v1 - v2 in Z
    Rational f1 = v[0] - Rational(floor_of(v[0])), f2 = v[1] - Rational(floor_of(v[1]));
    Vector base{Rational(floor_of(v[0])), Rational(floor_of(v[1]))};
    Vector mid = f1 >= f2 ? base + V(1, 0) : base + V(0, 1);
    Vector top = base + V(1, 1);
    Rational wb = 1 - (f1 >= f2 ? f1 : f2), wm = f1 >= f2 ? f1 - f2 : f2 - f1, wt = f1 >= f2 ? f2 : f1;
    CHECK(wb * base + wm * mid + wt * top == v);
    for (const auto& germ : {PLUS_INFINITY, MINUS_INFINITY}) {
      auto r = [&](const Vector& x) { return m.retract(m.chart(A, x), germ); };
      CHECK(r(v) == wb * r(base) + wm * r(mid) + wt * r(top));
    }
  }
}

TEST_CASE("retraction is idempotent on sampled points") {
  Sl3Model m(3);
  auto std_ap = m.standard_apartment();
  Rng rng(10);
  for (int k = 0; k < 40; ++k) {
    auto A = m.random_apartment(derive_seed(10, 0, static_cast<std::uint64_t>(k)), 2);
    Vector v{Rational(rng.between(-9, 9), 3), Rational(rng.between(-9, 9), 2)};
    for (const auto& germ : {PLUS_INFINITY, MINUS_INFINITY}) {
      Vector r = m.retract(m.chart(A, v), germ);
      CHECK(m.retract(m.chart(std_ap, r), germ) == r);
    }
  }
}

TEST_CASE("random apartments are deterministic and complexity 0 is standard") {
  Sl3Model m(2);
  CHECK(m.identical(m.random_apartment(1, 0), m.standard_apartment()));
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto a = m.random_apartment(s, 2), b = m.random_apartment(s, 2);
    CHECK(a.g == b.g);
    CHECK(m.identical(a, b));
  }
}

TEST_CASE("identical detects frames differing by monomial matrices") {
  Sl3Model m(3);
  auto std_ap = m.standard_apartment();
  auto permuted = m.apartment(Frame{{SignedPermutation{{1, 2, 0}, {1, 1, 1}}, TorusPower{{2, -1, -1}}}});
  CHECK(m.identical(std_ap, permuted));
  CHECK(intersect_with_standard(m, permuted, 4).hits.size() == 81);
  auto alpha = simple_root(m.system(), 0);
  auto moved = m.apartment(Frame{{m.root_element(alpha, Series::one(m.field()))}});
  CHECK_FALSE(m.identical(std_ap, moved));
}

TEST_CASE("random pairs satisfy the intersection axiom in a small window") {
  Sl3Model m(2);
  int inconclusive = 0;
  for (std::uint64_t k = 0; k < 15; ++k) {
    auto A = m.random_apartment(derive_seed(13, 0, k), 2), B = m.random_apartment(derive_seed(13, 1, k), 2);
    auto rep = check_MA2(m, A, B, 4);
    CHECK(rep.verdict != Verdict::Fail);
    inconclusive += rep.verdict == Verdict::Inconclusive;
    if (rep.intertwiner)
      for (const auto& v : rep.hits) CHECK(m.same_point(m.chart(A, v), m.chart(B, rep.intertwiner->apply(v))));
  }
  CHECK(inconclusive < 15);
}

TEST_CASE("retracted segments pass the growth verifier") {
  Sl3Model m(2);
  const auto& rgs = m.system();
  Rng rng(14);
  int folded = 0;
  for (int k = 0; k < 12; ++k) {
    auto A = m.random_apartment(derive_seed(14, 0, static_cast<std::uint64_t>(k)), 2);
    Vector a{Rational(rng.between(-40, 40), 13), Rational(rng.between(-40, 40), 17)};
    Vector b = V(rng.between(-3, 3), rng.between(-3, 3));
    if (a == b) continue;
    auto path = retract_segment_generic(m, A, a, b, MINUS_INFINITY, 2);
    CHECK(path.at(0) == m.retract(m.chart(A, a), MINUS_INFINITY));
    CHECK(path.at(1) == m.retract(m.chart(A, b), MINUS_INFINITY));
    auto rep = verify_growth(rgs, path, 2, 8);
    CHECK(rep.overall == Verdict::Pass);
    folded += path.vertices().size() > 2;
  }
  CHECK(folded > 0);
}
