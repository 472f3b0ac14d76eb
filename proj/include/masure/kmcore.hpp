#pragma once

// Kac-Moody matrices, root generating systems and the vectorial Weyl group.
//
// Indices of the simple roots are 0-based throughout. A Weyl word
// (i_1, ..., i_m) denotes the product r_{i_1} r_{i_2} ... r_{i_m}, so the
// last letter acts first.

#include "masure/error.hpp"
#include "masure/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace masure {

using Word = std::vector<std::size_t>;

struct MatrixValidation;
MatrixValidation validate_matrix(const std::vector<std::vector<long>>& raw);

class KacMoodyMatrix {
 public:
  KacMoodyMatrix() = default;

  std::size_t size() const { return a_.size(); }
  long operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<long>>& entries() const { return a_; }

  friend bool operator==(const KacMoodyMatrix&, const KacMoodyMatrix&) = default;

 private:
  explicit KacMoodyMatrix(std::vector<std::vector<long>> a) : a_(std::move(a)) {}
  friend MatrixValidation validate_matrix(const std::vector<std::vector<long>>& raw);

  std::vector<std::vector<long>> a_;
};

struct MatrixViolation {
  ErrorCode code;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message() const;
};

struct MatrixValidation {
  std::optional<KacMoodyMatrix> matrix;
  std::vector<MatrixViolation> violations;
  bool ok() const { return matrix.has_value(); }
};

/// Checks the three Kac-Moody axioms and reports every violation.
MatrixValidation validate_matrix(const std::vector<std::vector<long>>& raw);

/// Like validate_matrix but throws on the first violation.
KacMoodyMatrix make_matrix(const std::vector<std::vector<long>>& raw);

class RootGeneratingSystem {
 public:
  /// Minimal free realization: dim = n + corank, coroots are the first n basis
  /// vectors, alpha_j reads the j-th column on the first n coordinates and a
  /// 0/1 completion on the remaining ones. The completion is assigned (in
  /// increasing index order) to the indices whose columns are dependent on the
  /// columns of larger index.
  static RootGeneratingSystem default_realization(const KacMoodyMatrix& m);

  /// User-supplied realization; both freeness conditions and the compatibility
  /// alpha_j(alpha_i^vee) = a_ij are checked (InvalidRealization otherwise).
  static RootGeneratingSystem with_realization(const KacMoodyMatrix& m,
                                               std::vector<Vector> coroots,
                                               std::vector<LinearForm> roots);

  const KacMoodyMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.size(); }
  std::size_t dim() const { return dim_; }
  const Vector& simple_coroot(std::size_t i) const;
  const LinearForm& simple_root(std::size_t i) const;
  const std::vector<Vector>& simple_coroots() const { return coroots_; }
  const std::vector<LinearForm>& simple_roots() const { return roots_; }

  /// W^v finite (detected by saturation of the positive-root closure).
  bool finite_type() const { return finite_; }
  /// Largest height of a positive root; 0 when the type is not finite.
  int max_root_height() const { return max_height_; }
  bool is_default_realization() const { return default_; }

  friend bool operator==(const RootGeneratingSystem& a, const RootGeneratingSystem& b) {
    return a.matrix_ == b.matrix_ && a.coroots_ == b.coroots_ && a.roots_ == b.roots_;
  }

 private:
  RootGeneratingSystem(KacMoodyMatrix m, std::vector<Vector> coroots,
                       std::vector<LinearForm> roots, bool is_default);

  KacMoodyMatrix matrix_;
  std::size_t dim_ = 0;
  std::vector<Vector> coroots_;
  std::vector<LinearForm> roots_;
  bool finite_ = false;
  int max_height_ = 0;
  bool default_ = false;
};

/// r_i(v) = v - alpha_i(v) alpha_i^vee.
Vector reflect_simple(const RootGeneratingSystem& rgs, std::size_t i, const Vector& v);
/// r_i . phi = phi o r_i = phi - phi(alpha_i^vee) alpha_i.
LinearForm reflect_simple_form(const RootGeneratingSystem& rgs, std::size_t i,
                               const LinearForm& phi);

class WeylElement {
 public:
  static WeylElement identity(const RootGeneratingSystem& rgs);
  static WeylElement from_word(const RootGeneratingSystem& rgs, Word word);

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  const Matrix& matrix() const { return m_; }
  const Matrix& inverse_matrix() const { return inv_; }
  bool is_identity() const { return m_.is_identity(); }

  WeylElement inverse() const;
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  /// Group equality: same matrix (the word is only a representative).
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }

 private:
  WeylElement(Word w, Matrix m, Matrix inv) : word_(std::move(w)), m_(std::move(m)), inv_(std::move(inv)) {}
  Word word_;
  Matrix m_;
  Matrix inv_;
};

Vector act(const WeylElement& w, const Vector& v);
/// (w.phi)(x) = phi(w^{-1} x).
LinearForm act_on_form(const WeylElement& w, const LinearForm& phi);

/// A real root, stored with its coordinates in the simple-root basis, the
/// induced linear form, its coroot and a provenance pair (word, simple index)
/// with root = word . alpha_index.
class Root {
 public:
  const std::vector<long>& coords() const { return coords_; }
  const LinearForm& form() const { return form_; }
  const Vector& coroot() const { return coroot_; }
  const Word& provenance_word() const { return word_; }
  std::size_t provenance_index() const { return simple_; }

  long height() const;
  bool is_positive() const;
  Root negated() const;

  Rational operator()(const Vector& v) const { return form_(v); }

  friend bool operator==(const Root& a, const Root& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Root& a, const Root& b);

  std::string str() const;

 private:
  friend Root make_root_from_provenance(const RootGeneratingSystem&, Word, std::size_t);
  std::vector<long> coords_;
  LinearForm form_;
  Vector coroot_;
  Word word_;
  std::size_t simple_ = 0;
};

/// word . alpha_index, with coords computed in the root lattice and the form /
/// coroot computed along the word.
Root make_root_from_provenance(const RootGeneratingSystem& rgs, Word word, std::size_t index);
Root simple_root(const RootGeneratingSystem& rgs, std::size_t i);
/// Decides realness by height descent; throws NotARealRoot otherwise.
Root root_from_coords(const RootGeneratingSystem& rgs, const std::vector<long>& coords);

/// All real roots of height <= bound: positive ones sorted by (height, coords),
/// followed by their negatives in the same order.
std::vector<Root> enumerate_real_roots(const RootGeneratingSystem& rgs, long height_bound);
std::vector<Root> positive_real_roots(const RootGeneratingSystem& rgs, long height_bound);

/// The reflection r_alpha = w r_i w^{-1} for alpha = w . alpha_i.
WeylElement reflection_of(const RootGeneratingSystem& rgs, const Root& alpha);

/// All elements of length <= bound, deduplicated by matrix, BFS order, each
/// with a shortest word.
std::vector<WeylElement> weyl_ball(const RootGeneratingSystem& rgs, std::size_t length_bound);

/// Whether the parabolic subgroup <r_j : j in J> has order <= order_cap.
bool parabolic_is_finite(const RootGeneratingSystem& rgs, const std::vector<std::size_t>& J,
                         std::size_t order_cap = 10000);

enum class ConeKind { InteriorPos, BoundaryPos, InteriorNeg, BoundaryNeg, Zero, Unknown };
std::string_view to_string(ConeKind k);

struct ConeMembership {
  ConeKind kind = ConeKind::Unknown;
  std::vector<std::size_t> J;       // vanishing simple roots at the dominant representative
  std::optional<Vector> dominant;   // dominant representative of v (or of -v)
  std::size_t steps = 0;
};

ConeMembership tits_membership(const RootGeneratingSystem& rgs, const Vector& v,
                               std::size_t step_bound, std::size_t order_cap = 10000);

enum class Preorder { LE, GE, EQ, LE_strict_interior, GE_strict_interior, Incomparable, Unknown };
std::string_view to_string(Preorder p);
bool implies_le(Preorder p);
bool implies_ge(Preorder p);

Preorder tits_preorder(const RootGeneratingSystem& rgs, const Vector& x, const Vector& y,
                       std::size_t step_bound);

enum class Dominance { LE, GE, EQ, Incomparable };
std::string_view to_string(Dominance d);

/// Coordinates of v in the basis of simple coroots, if v lies in their span.
std::optional<std::vector<Rational>> coroot_coordinates(const RootGeneratingSystem& rgs,
                                                        const Vector& v);
Dominance dominance_compare(const RootGeneratingSystem& rgs, const Vector& x, const Vector& y);

enum class FaceSign { Positive, Negative };

/// The vectorial face sign * w . F^v(J).
struct VectorialFace {
  FaceSign sign = FaceSign::Positive;
  WeylElement weyl;
  std::vector<std::size_t> subset;

  bool contains(const RootGeneratingSystem& rgs, const Vector& v) const;
};

}  // namespace masure
