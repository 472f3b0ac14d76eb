#include "masure/kmcore.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace masure {

// ---------------------------------------------------------------- matrices

std::string MatrixViolation::message() const {
  std::ostringstream os;
  os << to_string(code);
  switch (code) {
    case ErrorCode::NotSquare: break;
    case ErrorCode::DiagonalNotTwo: os << '(' << i << ')'; break;
    default: os << '(' << i << ',' << j << ')'; break;
  }
  return os.str();
}

MatrixValidation validate_matrix(const std::vector<std::vector<long>>& raw) {
  MatrixValidation out;
  const std::size_t n = raw.size();
  for (const auto& row : raw) {
    if (row.size() != n) {
      out.violations.push_back({ErrorCode::NotSquare});
      return out;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i][i] != 2) out.violations.push_back({ErrorCode::DiagonalNotTwo, i, i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && raw[i][j] > 0) out.violations.push_back({ErrorCode::PositiveOffDiagonal, i, j});
  // Reported at the zero entry: a_ij = 0 while a_ji != 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && raw[i][j] == 0 && raw[j][i] != 0)
        out.violations.push_back({ErrorCode::AsymmetricZero, i, j});
  if (n == 0) out.violations.push_back({ErrorCode::NotSquare});
  if (out.violations.empty()) out.matrix = KacMoodyMatrix(raw);
  return out;
}

KacMoodyMatrix make_matrix(const std::vector<std::vector<long>>& raw) {
  auto v = validate_matrix(raw);
  if (!v.ok()) throw Error(v.violations.front().code, "invalid Kac-Moody matrix: " + v.violations.front().message());
  return *v.matrix;
}

// ---------------------------------------------------------------- realization

namespace {

// Positive-root closure on integer coordinates; returns nullopt when more than
// `cap` positive roots are produced.
std::optional<std::vector<std::vector<long>>> saturate_positive_roots(const KacMoodyMatrix& a,
                                                                      std::size_t cap) {
  const std::size_t n = a.size();
  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> c(n, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      long pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing += beta[k] * a(i, k);
      if (pairing == 0) continue;
      auto img = beta;
      img[i] -= pairing;
      if (std::any_of(img.begin(), img.end(), [](long x) { return x < 0; })) continue;
      if (seen.insert(img).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(img);
      }
    }
  }
  return std::vector<std::vector<long>>(seen.begin(), seen.end());
}

}  // namespace

RootGeneratingSystem::RootGeneratingSystem(KacMoodyMatrix m, std::vector<Vector> coroots,
                                           std::vector<LinearForm> roots, bool is_default)
    : matrix_(std::move(m)), coroots_(std::move(coroots)), roots_(std::move(roots)), default_(is_default) {
  dim_ = coroots_.empty() ? 0 : coroots_.front().dim();
  auto sat = saturate_positive_roots(matrix_, 2000);
  finite_ = sat.has_value();
  if (finite_) {
    for (const auto& c : *sat) {
      long h = 0;
      for (long x : c) h += x;
      max_height_ = std::max<int>(max_height_, static_cast<int>(h));
    }
  }
}

RootGeneratingSystem RootGeneratingSystem::default_realization(const KacMoodyMatrix& m) {
  const std::size_t n = m.size();
  // Column j of the matrix, as a row vector, is the restriction of alpha_j.
  std::vector<std::vector<Rational>> columns(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) columns[j][i] = m(i, j);

  // Greedy basis of the column space scanned from the largest index down.
  std::vector<std::vector<Rational>> basis;
  std::vector<bool> in_basis(n, false);
  for (std::size_t jj = n; jj-- > 0;) {
    auto trial = basis;
    trial.push_back(columns[jj]);
    if (rank_of_rows(trial) > basis.size()) {
      basis = std::move(trial);
      in_basis[jj] = true;
    }
  }
  std::vector<std::size_t> completed;
  for (std::size_t j = 0; j < n; ++j)
    if (!in_basis[j]) completed.push_back(j);
  const std::size_t c = completed.size();
  const std::size_t dim = n + c;

  std::vector<Vector> coroots;
  for (std::size_t i = 0; i < n; ++i) coroots.push_back(Vector::basis(dim, i));
  std::vector<LinearForm> roots(n, LinearForm(dim));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) roots[j][i] = m(i, j);
  for (std::size_t k = 0; k < c; ++k) roots[completed[k]][n + k] = 1;
  return RootGeneratingSystem(m, std::move(coroots), std::move(roots), true);
}

RootGeneratingSystem RootGeneratingSystem::with_realization(const KacMoodyMatrix& m,
                                                            std::vector<Vector> coroots,
                                                            std::vector<LinearForm> roots) {
  const std::size_t n = m.size();
  if (coroots.size() != n || roots.size() != n)
    throw Error(ErrorCode::InvalidRealization, "realization must give one root and one coroot per index");
  const std::size_t dim = coroots.front().dim();
  for (std::size_t i = 0; i < n; ++i)
    if (coroots[i].dim() != dim || roots[i].dim() != dim)
      throw Error(ErrorCode::InvalidRealization, "realization vectors have inconsistent dimensions");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (roots[j](coroots[i]) != m(i, j)) {
        std::ostringstream os;
        os << "compatibility alpha_j(alpha_i^vee) = a_ij fails at (" << i << ',' << j << ')';
        throw Error(ErrorCode::InvalidRealization, os.str());
      }
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : coroots) rows.push_back(v.coords());
  if (rank_of_rows(rows) != n) throw Error(ErrorCode::InvalidRealization, "simple coroots are not free");
  rows.clear();
  for (const auto& f : roots) rows.push_back(f.coeffs());
  if (rank_of_rows(rows) != n) throw Error(ErrorCode::InvalidRealization, "simple roots are not free");
  return RootGeneratingSystem(m, std::move(coroots), std::move(roots), false);
}

const Vector& RootGeneratingSystem::simple_coroot(std::size_t i) const {
  if (i >= coroots_.size()) throw Error(ErrorCode::IndexOutOfRange, "simple coroot index out of range");
  return coroots_[i];
}

const LinearForm& RootGeneratingSystem::simple_root(std::size_t i) const {
  if (i >= roots_.size()) throw Error(ErrorCode::IndexOutOfRange, "simple root index out of range");
  return roots_[i];
}

// ---------------------------------------------------------------- reflections

Vector reflect_simple(const RootGeneratingSystem& rgs, std::size_t i, const Vector& v) {
  const auto& a = rgs.simple_root(i);
  Rational s = a(v);
  if (s == 0) return v;
  return v - s * rgs.simple_coroot(i);
}

LinearForm reflect_simple_form(const RootGeneratingSystem& rgs, std::size_t i, const LinearForm& phi) {
  const auto& cv = rgs.simple_coroot(i);
  Rational s = phi(cv);
  if (s == 0) return phi;
  return phi - s * rgs.simple_root(i);
}

namespace {

Matrix simple_reflection_matrix(const RootGeneratingSystem& rgs, std::size_t i) {
  const std::size_t d = rgs.dim();
  Matrix m = Matrix::identity(d);
  const auto& cv = rgs.simple_coroot(i);
  const auto& a = rgs.simple_root(i);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (cv[r] != 0 && a[c] != 0) m(r, c) -= cv[r] * a[c];
  return m;
}

}  // namespace

WeylElement WeylElement::identity(const RootGeneratingSystem& rgs) {
  return WeylElement({}, Matrix::identity(rgs.dim()), Matrix::identity(rgs.dim()));
}

WeylElement WeylElement::from_word(const RootGeneratingSystem& rgs, Word word) {
  Matrix m = Matrix::identity(rgs.dim());
  Matrix inv = Matrix::identity(rgs.dim());
  for (std::size_t i : word) {
    if (i >= rgs.rank()) throw Error(ErrorCode::IndexOutOfRange, "Weyl word letter out of range");
    Matrix r = simple_reflection_matrix(rgs, i);
    m = m * r;
    inv = r * inv;
  }
  return WeylElement(std::move(word), std::move(m), std::move(inv));
}

WeylElement WeylElement::inverse() const {
  Word w(word_.rbegin(), word_.rend());
  return WeylElement(std::move(w), inv_, m_);
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  Word w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return WeylElement(std::move(w), a.m_ * b.m_, b.inv_ * a.inv_);
}

Vector act(const WeylElement& w, const Vector& v) { return w.matrix().apply(v); }

LinearForm act_on_form(const WeylElement& w, const LinearForm& phi) {
  return w.inverse_matrix().pull_back(phi);
}

// ---------------------------------------------------------------- roots

long Root::height() const {
  long h = 0;
  for (long x : coords_) h += x < 0 ? -x : x;
  return h;
}

bool Root::is_positive() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long x) { return x >= 0; });
}

Root Root::negated() const {
  Root r = *this;
  for (auto& x : r.coords_) x = -x;
  r.form_ = -form_;
  r.coroot_ = -coroot_;
  r.word_.push_back(simple_);  // -(w a_i) = w r_i a_i
  return r;
}

bool operator<(const Root& a, const Root& b) {
  bool pa = a.is_positive(), pb = b.is_positive();
  if (pa != pb) return pa;
  long ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  if (pa) return a.coords_ < b.coords_;
  return b.coords_ < a.coords_;
}

std::string Root::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << '>';
  return os.str();
}

Root make_root_from_provenance(const RootGeneratingSystem& rgs, Word word, std::size_t index) {
  const auto& a = rgs.matrix();
  const std::size_t n = rgs.rank();
  if (index >= n) throw Error(ErrorCode::IndexOutOfRange, "simple root index out of range");
  Root r;
  r.coords_.assign(n, 0);
  r.coords_[index] = 1;
  r.coroot_ = rgs.simple_coroot(index);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::size_t i = *it;
    if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "Weyl word letter out of range");
    long pairing = 0;
    for (std::size_t k = 0; k < n; ++k) pairing += r.coords_[k] * a(i, k);
    r.coords_[i] -= pairing;
    r.coroot_ = reflect_simple(rgs, i, r.coroot_);
  }
  r.form_ = LinearForm(rgs.dim());
  for (std::size_t k = 0; k < n; ++k)
    if (r.coords_[k] != 0) r.form_ += Rational(r.coords_[k]) * rgs.simple_root(k);
  r.word_ = std::move(word);
  r.simple_ = index;
  return r;
}

Root simple_root(const RootGeneratingSystem& rgs, std::size_t i) {
  return make_root_from_provenance(rgs, {}, i);
}

Root root_from_coords(const RootGeneratingSystem& rgs, const std::vector<long>& coords) {
  const std::size_t n = rgs.rank();
  if (coords.size() != n) throw Error(ErrorCode::DimensionMismatch, "root coordinate length mismatch");
  bool pos = std::all_of(coords.begin(), coords.end(), [](long x) { return x >= 0; });
  bool neg = std::all_of(coords.begin(), coords.end(), [](long x) { return x <= 0; });
  if (!pos && !neg) throw Error(ErrorCode::NotARealRoot, "root coordinates have mixed signs");
  std::vector<long> beta = coords;
  if (!pos) for (auto& x : beta) x = -x;
  long h = 0;
  for (long x : beta) h += x;
  if (h == 0) throw Error(ErrorCode::NotARealRoot, "zero is not a root");
  const auto& a = rgs.matrix();
  Word word;
  while (h > 1) {
    bool lowered = false;
    for (std::size_t i = 0; i < n; ++i) {
      long pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing += beta[k] * a(i, k);
      if (pairing <= 0) continue;
      beta[i] -= pairing;
      if (beta[i] < 0) throw Error(ErrorCode::NotARealRoot, "not a real root (descent leaves Q+)");
      h -= pairing;
      word.push_back(i);
      lowered = true;
      break;
    }
    if (!lowered) throw Error(ErrorCode::NotARealRoot, "not a real root (no lowering reflection)");
  }
  std::size_t index = static_cast<std::size_t>(std::find(beta.begin(), beta.end(), 1) - beta.begin());
  Root r = make_root_from_provenance(rgs, std::move(word), index);
  return pos ? r : r.negated();
}

std::vector<Root> positive_real_roots(const RootGeneratingSystem& rgs, long height_bound) {
  const std::size_t n = rgs.rank();
  std::vector<Root> found;
  std::set<std::vector<long>> seen;
  std::deque<std::size_t> queue;
  if (height_bound < 1) return found;
  for (std::size_t i = 0; i < n; ++i) {
    found.push_back(simple_root(rgs, i));
    seen.insert(found.back().coords());
    queue.push_back(found.size() - 1);
  }
  const auto& a = rgs.matrix();
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& beta = found[idx].coords();
      long pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing += beta[k] * a(i, k);
      if (pairing == 0) continue;
      std::vector<long> img = beta;
      img[i] -= pairing;
      if (std::any_of(img.begin(), img.end(), [](long x) { return x < 0; })) continue;
      long h = 0;
      for (long x : img) h += x;
      if (h > height_bound) continue;
      if (!seen.insert(img).second) continue;
      Word w;
      w.push_back(i);
      const auto& pw = found[idx].provenance_word();
      w.insert(w.end(), pw.begin(), pw.end());
      found.push_back(make_root_from_provenance(rgs, std::move(w), found[idx].provenance_index()));
      queue.push_back(found.size() - 1);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Root> enumerate_real_roots(const RootGeneratingSystem& rgs, long height_bound) {
  auto pos = positive_real_roots(rgs, height_bound);
  std::vector<Root> all = pos;
  for (const auto& r : pos) all.push_back(r.negated());
  return all;
}

WeylElement reflection_of(const RootGeneratingSystem& rgs, const Root& alpha) {
  Word w = alpha.provenance_word();
  w.push_back(alpha.provenance_index());
  const auto& pw = alpha.provenance_word();
  w.insert(w.end(), pw.rbegin(), pw.rend());
  return WeylElement::from_word(rgs, std::move(w));
}

std::vector<WeylElement> weyl_ball(const RootGeneratingSystem& rgs, std::size_t length_bound) {
  std::vector<WeylElement> ball{WeylElement::identity(rgs)};
  std::set<Matrix> seen{ball.front().matrix()};
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < rgs.rank(); ++i) gens.push_back(WeylElement::from_word(rgs, {i}));
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= length_bound; ++len) {
    std::size_t level_end = ball.size();
    for (std::size_t k = level_begin; k < level_end; ++k)
      for (const auto& g : gens) {
        WeylElement cand = ball[k] * g;
        if (seen.insert(cand.matrix()).second) ball.push_back(std::move(cand));
      }
    if (ball.size() == level_end) break;
    level_begin = level_end;
  }
  return ball;
}

bool parabolic_is_finite(const RootGeneratingSystem& rgs, const std::vector<std::size_t>& J,
                         std::size_t order_cap) {
  // W_J acts faithfully on the root lattice; an element is stored as the images
  // of the simple roots, flattened.
  const std::size_t n = rgs.rank();
  const auto& a = rgs.matrix();
  std::vector<long> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::set<std::vector<long>> seen{id};
  std::deque<std::vector<long>> queue{id};
  while (!queue.empty()) {
    auto m = queue.front();
    queue.pop_front();
    for (std::size_t j : J) {
      auto img = m;
      for (std::size_t col = 0; col < n; ++col) {
        long pairing = 0;
        for (std::size_t k = 0; k < n; ++k) pairing += m[col * n + k] * a(j, k);
        img[col * n + j] -= pairing;
      }
      if (seen.insert(img).second) {
        if (seen.size() > order_cap) return false;
        queue.push_back(std::move(img));
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- Tits cone

std::string_view to_string(ConeKind k) {
  switch (k) {
    case ConeKind::InteriorPos: return "InteriorPos";
    case ConeKind::BoundaryPos: return "BoundaryPos";
    case ConeKind::InteriorNeg: return "InteriorNeg";
    case ConeKind::BoundaryNeg: return "BoundaryNeg";
    case ConeKind::Zero: return "Zero";
    case ConeKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

struct Descent {
  bool dominant = false;
  Vector rep;
  std::size_t steps = 0;
};

Descent descend(const RootGeneratingSystem& rgs, Vector v, std::size_t step_bound) {
  Descent d;
  for (;;) {
    std::size_t neg = rgs.rank();
    for (std::size_t i = 0; i < rgs.rank(); ++i)
      if (rgs.simple_root(i)(v) < 0) {
        neg = i;
        break;
      }
    if (neg == rgs.rank()) {
      d.dominant = true;
      break;
    }
    if (d.steps == step_bound) break;
    v = reflect_simple(rgs, neg, v);
    ++d.steps;
  }
  d.rep = std::move(v);
  return d;
}

}  // namespace

ConeMembership tits_membership(const RootGeneratingSystem& rgs, const Vector& v,
                               std::size_t step_bound, std::size_t order_cap) {
  ConeMembership out;
  if (v.dim() != rgs.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  if (v.is_zero()) {
    out.kind = ConeKind::Zero;
    return out;
  }
  for (int sign : {1, -1}) {
    Descent d = descend(rgs, sign > 0 ? v : -v, step_bound);
    if (!d.dominant) {
      out.steps += d.steps;
      continue;
    }
    for (std::size_t i = 0; i < rgs.rank(); ++i)
      if (rgs.simple_root(i)(d.rep) == 0) out.J.push_back(i);
    bool finite = parabolic_is_finite(rgs, out.J, order_cap);
    if (sign > 0)
      out.kind = finite ? ConeKind::InteriorPos : ConeKind::BoundaryPos;
    else
      out.kind = finite ? ConeKind::InteriorNeg : ConeKind::BoundaryNeg;
    out.dominant = std::move(d.rep);
    out.steps += d.steps;
    return out;
  }
  out.kind = ConeKind::Unknown;
  return out;
}

std::string_view to_string(Preorder p) {
  switch (p) {
    case Preorder::LE: return "LE";
    case Preorder::GE: return "GE";
    case Preorder::EQ: return "EQ";
    case Preorder::LE_strict_interior: return "LE_strict_interior";
    case Preorder::GE_strict_interior: return "GE_strict_interior";
    case Preorder::Incomparable: return "Incomparable";
    case Preorder::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool implies_le(Preorder p) {
  return p == Preorder::LE || p == Preorder::LE_strict_interior || p == Preorder::EQ;
}

bool implies_ge(Preorder p) {
  return p == Preorder::GE || p == Preorder::GE_strict_interior || p == Preorder::EQ;
}

Preorder tits_preorder(const RootGeneratingSystem& rgs, const Vector& x, const Vector& y,
                       std::size_t step_bound) {
  auto m = tits_membership(rgs, y - x, step_bound);
  switch (m.kind) {
    case ConeKind::Zero: return Preorder::EQ;
    case ConeKind::InteriorPos: return Preorder::LE_strict_interior;
    case ConeKind::BoundaryPos: return Preorder::LE;
    case ConeKind::InteriorNeg: return Preorder::GE_strict_interior;
    case ConeKind::BoundaryNeg: return Preorder::GE;
    case ConeKind::Unknown: return Preorder::Unknown;
  }
  return Preorder::Unknown;
}

// ---------------------------------------------------------------- dominance

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::LE: return "LE";
    case Dominance::GE: return "GE";
    case Dominance::EQ: return "EQ";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

std::optional<std::vector<Rational>> coroot_coordinates(const RootGeneratingSystem& rgs,
                                                        const Vector& v) {
  if (v.dim() != rgs.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  return solve_in_span(rgs.simple_coroots(), v);
}

Dominance dominance_compare(const RootGeneratingSystem& rgs, const Vector& x, const Vector& y) {
  Vector d = y - x;
  if (d.is_zero()) return Dominance::EQ;
  auto c = coroot_coordinates(rgs, d);
  if (!c) return Dominance::Incomparable;
  bool nonneg = std::all_of(c->begin(), c->end(), [](const Rational& q) { return q >= 0; });
  bool nonpos = std::all_of(c->begin(), c->end(), [](const Rational& q) { return q <= 0; });
  if (nonneg) return Dominance::LE;
  if (nonpos) return Dominance::GE;
  return Dominance::Incomparable;
}

bool VectorialFace::contains(const RootGeneratingSystem& rgs, const Vector& v) const {
  Vector u = act(weyl.inverse(), v);
  if (sign == FaceSign::Negative) u = -u;
  for (std::size_t i = 0; i < rgs.rank(); ++i) {
    Rational s = rgs.simple_root(i)(u);
    bool in_j = std::find(subset.begin(), subset.end(), i) != subset.end();
    if (in_j ? s != 0 : s <= 0) return false;
  }
  return true;
}

}  // namespace masure
