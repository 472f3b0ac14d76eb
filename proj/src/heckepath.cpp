#include "masure/heckepath.hpp"

#include "masure/rng.hpp"

#include <algorithm>

namespace masure {

PLPath::PLPath(std::vector<Rational> breakpoints, std::vector<Vector> vertices) {
  if (breakpoints.size() < 2 || breakpoints.size() != vertices.size())
    throw Error(ErrorCode::InvalidPath, "a path needs matching breakpoints and vertices, at least two");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw Error(ErrorCode::InvalidPath, "breakpoints must run from 0 to 1");
  for (std::size_t j = 1; j < breakpoints.size(); ++j) {
    if (breakpoints[j] <= breakpoints[j - 1]) throw Error(ErrorCode::InvalidPath, "breakpoints must increase");
    if (vertices[j].dim() != vertices[0].dim()) throw Error(ErrorCode::DimensionMismatch, "path vertex dimensions differ");
  }
  t_.push_back(breakpoints[0]);
  x_.push_back(vertices[0]);
  for (std::size_t j = 1; j + 1 < breakpoints.size(); ++j) {
    Vector before = Rational(1) / (breakpoints[j] - t_.back()) * (vertices[j] - x_.back());
    Vector after = Rational(1) / (breakpoints[j + 1] - breakpoints[j]) * (vertices[j + 1] - vertices[j]);
    if (before == after) continue;
    t_.push_back(breakpoints[j]);
    x_.push_back(vertices[j]);
  }
  t_.push_back(breakpoints.back());
  x_.push_back(vertices.back());
}

PLPath PLPath::segment(const Vector& a, const Vector& b) { return PLPath({0, 1}, {a, b}); }

Vector PLPath::piece_derivative(std::size_t j) const {
  return Rational(1) / (t_[j + 1] - t_[j]) * (x_[j + 1] - x_[j]);
}

Vector PLPath::at(const Rational& t) const {
  if (t < 0 || t > 1) throw Error(ErrorCode::OutOfRange, "path parameter outside [0,1]");
  std::size_t j = static_cast<std::size_t>(std::upper_bound(t_.begin(), t_.end(), t) - t_.begin());
  if (j >= t_.size()) return x_.back();
  --j;
  return x_[j] + (t - t_[j]) * piece_derivative(j);
}

std::pair<std::optional<Vector>, std::optional<Vector>> PLPath::derivatives(const Rational& t) const {
  if (t < 0 || t > 1) throw Error(ErrorCode::OutOfRange, "path parameter outside [0,1]");
  std::pair<std::optional<Vector>, std::optional<Vector>> out;
  if (t > 0) {
    std::size_t j = static_cast<std::size_t>(std::lower_bound(t_.begin(), t_.end(), t) - t_.begin());
    out.first = piece_derivative(j - 1);
  }
  if (t < 1) {
    std::size_t j = static_cast<std::size_t>(std::upper_bound(t_.begin(), t_.end(), t) - t_.begin());
    out.second = piece_derivative(j - 1);
  }
  return out;
}

PLPath PLPath::negated() const {
  std::vector<Vector> v;
  for (const auto& x : x_) v.push_back(-x);
  return PLPath(t_, std::move(v));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

namespace {

std::optional<Root> folding_root(const std::vector<Root>& positive, const Vector& left, const Vector& right) {
  for (const auto& alpha : positive) {
    Rational s = alpha(left);
    if (s >= 0) continue;
    if (left - s * alpha.coroot() == right) return alpha;
  }
  return std::nullopt;
}

}  // namespace

GrowthReport verify_growth(const RootGeneratingSystem& rgs, const PLPath& path, long height_bound,
                           std::size_t weyl_length_bound) {
  GrowthReport rep;
  const std::size_t m = path.pieces();
  std::vector<Vector> xi;
  for (std::size_t j = 0; j < m; ++j) xi.push_back(path.piece_derivative(j));
  const auto positive = positive_real_roots(rgs, height_bound);
  const bool roots_exhaustive = rgs.finite_type() && height_bound >= rgs.max_root_height();

  auto fail = [&](std::optional<Rational> t, const std::string& why) {
    if (rep.failure_reason.empty()) {
      rep.failure_reason = why;
      rep.first_failure = t;
    }
  };

  bool chain_of_reflections = true;
  for (std::size_t j = 1; j < m; ++j) {
    BreakpointRecord b{path.breakpoints()[j], xi[j - 1], xi[j], Dominance::Incomparable, Verdict::Pass, std::nullopt, {}};
    b.dominance = dominance_compare(rgs, b.left, b.right);
    if (b.dominance != Dominance::LE) {
      b.verdict = Verdict::Fail;
      b.reason = "derivative does not increase in the dominance order";
      rep.chain = Verdict::Fail;
    } else if (auto alpha = folding_root(positive, b.left, b.right)) {
      b.reflection = *alpha;
    } else {
      b.verdict = roots_exhaustive ? Verdict::Fail : Verdict::Inconclusive;
      b.reason = "no positive root alpha with right = r_alpha(left) and alpha(left) < 0";
    }
    if (!b.reflection) chain_of_reflections = false;
    if (b.verdict == Verdict::Fail) fail(b.t, b.reason);
    rep.breakpoints.push_back(std::move(b));
  }
  for (std::size_t j = 1; j < m && rep.chain == Verdict::Pass; ++j)
    if (dominance_compare(rgs, xi[0], xi[j]) != Dominance::LE) {
      rep.chain = Verdict::Fail;
      fail(path.breakpoints()[j], "derivative not above the initial derivative");
    }

  if (!chain_of_reflections) {
    auto ball = weyl_ball(rgs, weyl_length_bound);
    bool ball_complete = rgs.finite_type() && weyl_ball(rgs, weyl_length_bound + 1).size() == ball.size();
    for (std::size_t j = 1; j < m; ++j) {
      bool found = std::any_of(ball.begin(), ball.end(), [&](const WeylElement& w) { return act(w, xi[0]) == xi[j]; });
      if (found) continue;
      if (ball_complete) {
        rep.orbit = Verdict::Fail;
        fail(path.breakpoints()[j], "derivative outside the Weyl orbit of the initial derivative");
      } else if (rep.orbit == Verdict::Pass) {
        rep.orbit = Verdict::Inconclusive;
      }
    }
  }

  Vector total = path.vertices().back() - path.vertices().front();
  rep.endpoint_relation = dominance_compare(rgs, xi[0], total);
  bool endpoint_ok = m == 1 ? rep.endpoint_relation == Dominance::EQ : rep.endpoint_relation == Dominance::LE;
  if (!endpoint_ok) {
    rep.endpoint = Verdict::Fail;
    fail(std::nullopt, m == 1 ? "segment displacement differs from its derivative"
                              : "endpoint displacement not strictly above the initial derivative");
  }

  rep.overall = combine(rep.chain, combine(rep.orbit, rep.endpoint));
  for (const auto& b : rep.breakpoints) rep.overall = combine(rep.overall, b.verdict);
  return rep;
}

PLPath fold_tail(const RootGeneratingSystem& rgs, const PLPath& path, const Rational& t, const Root& alpha,
                 const Rational& k, bool require_legal) {
  if (t <= 0 || t >= 1) throw Error(ErrorCode::OutOfRange, "fold parameter must lie in (0,1)");
  Vector p = path.at(t);
  if (alpha(p) + k != 0) throw Error(ErrorCode::NotOnWall, "path does not meet the wall at the fold parameter");
  if (require_legal && alpha(*path.derivatives(t).first) >= 0)
    throw Error(ErrorCode::IllegalFold, "alpha(left derivative) must be negative for a legal fold");
  std::vector<Rational> ts;
  std::vector<Vector> xs;
  const auto& bt = path.breakpoints();
  const auto& bx = path.vertices();
  for (std::size_t j = 0; j < bt.size(); ++j) {
    if (bt[j] < t) {
      ts.push_back(bt[j]);
      xs.push_back(bx[j]);
    }
  }
  ts.push_back(t);
  xs.push_back(p);
  for (std::size_t j = 0; j < bt.size(); ++j)
    if (bt[j] > t) {
      ts.push_back(bt[j]);
      xs.push_back(affine_reflect(rgs, alpha, k, bx[j]));
    }
  return PLPath(std::move(ts), std::move(xs));
}

FoldTrace generate_folded_path(const RootGeneratingSystem& rgs, std::uint64_t seed, const Vector& a,
                               const Vector& b, const FoldOptions& options) {
  if (a == b) throw Error(ErrorCode::DegenerateSegment, "segment endpoints coincide");
  Rng rng(seed);
  Vector start = a;
  for (int attempt = 0;; ++attempt) {
    if (start != b && generic_position(start, b, walls_meeting(rgs, start, b, options.height_bound), false)) break;
    if (attempt == 256) throw Error(ErrorCode::DegenerateSegment, "could not perturb the start into generic position");
    start = a;
    for (std::size_t i = 0; i < start.dim(); ++i) start[i] += Rational(rng.between(-90, 90), 997);
  }

  FoldTrace trace{PLPath::segment(start, b), start, {}, false};
  Rational last = 0;
  bool restart = true;
  while (restart) {
    restart = false;
    const PLPath& cur = trace.path;
    Vector from = cur.at(last), to = cur.vertices().back();
    if (from == to) break;
    Vector xi = to - from;
    for (const auto& c : walls_crossed(rgs, from, to, options.height_bound)) {
      if (c.walls.size() != 1) continue;
      const Wall& w = c.walls.front();
      Rational s = w.root(xi);
      Rational t = last + c.t * (1 - last);
      bool legal = s < 0;
      bool fold = false;
      if (legal)
        fold = rng.chance(options.fold_probability);
      else if (options.insert_illegal_fold && !trace.mutated)
        fold = rng.chance(0.5);
      if (!fold) continue;
      trace.path = fold_tail(rgs, cur, t, w.root, w.level, false);
      trace.folds.push_back({t, w, legal});
      if (!legal) trace.mutated = true;
      last = t;
      restart = true;
      break;
    }
  }
  return trace;
}

}  // namespace masure
