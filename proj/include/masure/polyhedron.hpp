#pragma once

// Exact feasibility of small systems of rational linear inequalities by
// Fourier-Motzkin elimination.

#include "masure/linalg.hpp"

#include <optional>
#include <vector>

namespace masure {

/// coeffs . x + constant >= 0, or > 0 when strict.
struct Inequality {
  std::vector<Rational> coeffs;
  Rational constant;
  bool strict = false;

  bool satisfied_by(const Vector& x) const;
  friend bool operator==(const Inequality&, const Inequality&) = default;
  friend bool operator<(const Inequality& a, const Inequality& b);
};

/// A witness point when the system is feasible. Witness coordinates prefer 0,
/// then the integer nearest to 0, then the midpoint of the admissible range.
std::optional<Vector> find_feasible_point(std::size_t dim, const std::vector<Inequality>& system);

}  // namespace masure
