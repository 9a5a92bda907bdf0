#pragma once

// Der S as a Lie algebra of operators, its series and the socle bounds.

#include "artinlab/artin.hpp"

namespace artinlab {

/// A Lie algebra of derivations of an ArtinAlgebra, stored as operators on S.
///
/// Derivations are determined by their values on the generator images, so each
/// operator D is encoded as (D x̄_1, ..., D x̄_n). The basis is re-chosen so the
/// encodings are in reduced echelon form; coordinates of any member are then
/// read off at the pivots.
class LieAlgebraRep {
 public:
  /// Verifies that every operator is a derivation of `s` and that the span is
  /// closed under the commutator; throws InvariantViolation otherwise.
  LieAlgebraRep(const ArtinAlgebra& s, const std::vector<Matrix>& operators);

  Index ambient_dim() const { return ambient_; }
  Index dimension() const { return static_cast<Index>(basis_.size()); }
  const std::vector<Matrix>& basis_operators() const { return basis_; }

  Vector encode(const Matrix& op) const;
  bool contains(const Matrix& op) const;
  /// Coordinates of a member of the span in basis_operators().
  Vector coordinates(const Matrix& op) const;

  /// [b_i, b_j] in basis coordinates.
  SparseVector<Rational> bracket(Index i, Index j) const;
  /// Bracket of two elements given in basis coordinates.
  SparseVector<Rational> bracket(const SparseVector<Rational>& u, const SparseVector<Rational>& v) const;

 private:
  Index ambient_;
  std::vector<Vector> generators_;
  std::vector<Matrix> basis_;
  std::vector<SparseColumns<Rational>> sparse_basis_;
  QSubspace encoded_;
  // Brackets of basis pairs i < j, row-major over the upper triangle.
  std::vector<SparseVector<Rational>> brackets_;
};

/// True when D(1) = 0 and D(ab) = D(a)b + aD(b) on every basis pair.
bool is_derivation(const ArtinAlgebra& s, const Matrix& op);

/// Der S from the defining Gröbner basis: unknowns D(x̄_i), one linear
/// condition Σ_i (∂g/∂x_i)(x̄)·D(x̄_i) = 0 per basis element g.
LieAlgebraRep compute_derivations(const ArtinAlgebra& s, const GroebnerBasis& gb);

/// Der S from the structure constants alone: D(1) = 0 and the Leibniz rule on
/// every (generator, basis element) pair.
LieAlgebraRep compute_derivations(const ArtinAlgebra& s);

struct SeriesReport {
  std::vector<Index> derived_dims;
  std::vector<Index> lower_central_dims;
  bool solvable = true;
  bool nilpotent = true;
  bool all_nilpotent_operators = true;
};

SeriesReport series(const LieAlgebraRep& l);

/// Engel flag test: true iff every element of the span acts nilpotently on S.
bool all_nilpotent(const LieAlgebraRep& l);

struct SocleBound {
  Index dim_der = 0;
  Index embedding_dim = 0;
  Index socle_dim = 0;
  /// dim(m̄/m̄²)·dim Soc S.
  Index bound = 0;
  bool holds = true;
  /// dim Der S ≥ 1 whenever S ≠ K.
  bool positive = true;
};

SocleBound socle_bound_check(const ArtinAlgebra& s, const LieAlgebraRep& l);

struct UnipotentSubgroup {
  Index usoc_dim = 0;
  Index lsoc_dim = 0;
  Index socle_dim = 0;
  Index embedding_dim = 0;
  /// s·dim USoc + n·dim LSoc with s = dim USoc.
  Index dim_u = 0;
  /// Number of tangent derivations x̄_i ↦ F_i built from the socle:
  /// dim LSoc·n + dim USoc·(n − dim USoc).
  Index constructed = 0;
  std::vector<Matrix> derivations;
  bool all_derivations = true;
};

UnipotentSubgroup unipotent_subgroup_dim(const ArtinAlgebra& s);

}  // namespace artinlab
