#pragma once

// Piecewise-linear paths in the standard apartment, folding along walls, and
// the verifier for the growth laws satisfied by retracted segments.

#include "masure/apartment.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace masure {

/// Continuous path, affine on [t_j, t_{j+1}], parameterized on [0, 1]. Pieces
/// with equal derivatives are merged on construction.
class PLPath {
 public:
  PLPath(std::vector<Rational> breakpoints, std::vector<Vector> vertices);
  static PLPath segment(const Vector& a, const Vector& b);

  const std::vector<Rational>& breakpoints() const { return t_; }
  const std::vector<Vector>& vertices() const { return x_; }
  std::size_t pieces() const { return t_.size() - 1; }
  std::size_t dim() const { return x_.front().dim(); }

  Vector at(const Rational& t) const;
  Vector piece_derivative(std::size_t j) const;
  /// One-sided derivatives; left is empty at t = 0, right is empty at t = 1.
  std::pair<std::optional<Vector>, std::optional<Vector>> derivatives(const Rational& t) const;

  PLPath negated() const;
  friend bool operator==(const PLPath&, const PLPath&) = default;

 private:
  std::vector<Rational> t_;
  std::vector<Vector> x_;
};

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v);
Verdict combine(Verdict a, Verdict b);

struct BreakpointRecord {
  Rational t;
  Vector left;
  Vector right;
  Dominance dominance = Dominance::Incomparable;  // of (left, right)
  Verdict verdict = Verdict::Pass;
  std::optional<Root> reflection;  // right = r_alpha(left), alpha(left) < 0
  std::string reason;
};

struct GrowthReport {
  std::vector<BreakpointRecord> breakpoints;
  Verdict chain = Verdict::Pass;     // derivatives increase along the path
  Verdict orbit = Verdict::Pass;     // every derivative lies in W^v . pi'_+(0)
  Verdict endpoint = Verdict::Pass;  // pi'_+(0) <= pi(1) - pi(0), strict iff folded
  Dominance endpoint_relation = Dominance::EQ;
  Verdict overall = Verdict::Pass;
  std::optional<Rational> first_failure;
  std::string failure_reason;
};

GrowthReport verify_growth(const RootGeneratingSystem& rgs, const PLPath& path, long height_bound,
                           std::size_t weyl_length_bound);

/// Reflects the part of the path after t in the wall M(alpha, k), which must
/// contain path(t). With require_legal, alpha(pi'_-(t)) < 0 is enforced.
PLPath fold_tail(const RootGeneratingSystem& rgs, const PLPath& path, const Rational& t, const Root& alpha,
                 const Rational& k, bool require_legal);

struct FoldRecord {
  Rational t;
  Wall wall;
  bool legal = true;
};

struct FoldTrace {
  PLPath path;
  Vector start;  // the (possibly re-sampled) starting point
  std::vector<FoldRecord> folds;
  bool mutated = false;  // an illegal fold was inserted
};

struct FoldOptions {
  long height_bound = 4;
  double fold_probability = 0.5;
  bool insert_illegal_fold = false;
};

/// Folds the segment a -> b at randomly chosen single-wall crossings where the
/// fold is legal. With insert_illegal_fold, exactly one fold is made at a
/// crossing where it is illegal (if the path meets any such crossing).
FoldTrace generate_folded_path(const RootGeneratingSystem& rgs, std::uint64_t seed, const Vector& a,
                               const Vector& b, const FoldOptions& options);

inline PLPath random_folded_path(const RootGeneratingSystem& rgs, std::uint64_t seed, const Vector& a,
                                 const Vector& b, long height_bound, double fold_probability) {
  return generate_folded_path(rgs, seed, a, b, {height_bound, fold_probability, false}).path;
}

}  // namespace masure
