#pragma once

// Isolated hypersurface singularities at the origin: Jacobian ideals, moduli
// (Tjurina) algebras, quasi-homogeneity and the splitting lemma.

#include <optional>

#include "artinlab/criteria.hpp"
#include "artinlab/liealg.hpp"

namespace artinlab {

/// (∂p/∂x_1, ..., ∂p/∂x_n), zero partials dropped.
Ideal jacobian_ideal(const Polynomial& p);

struct QuasiHomogeneousWeights {
  std::vector<long long> weights;
  long long degree = 0;
};

/// Positive integer weights making every monomial of p of one weighted degree,
/// primitive (gcd 1), or nullopt when none exist. Homogeneous p gets all ones.
std::optional<QuasiHomogeneousWeights> quasi_homogeneous_weights(const Polynomial& p);

struct ModuliAlgebra {
  /// Local factor of (p, J(p)) at the origin.
  LocalComponent component;
  ArtinAlgebra algebra;
  Index tjurina = 0;
  /// Local dimension of K[x]/J(p) at the origin.
  Index milnor = 0;
  std::optional<QuasiHomogeneousWeights> weights;
  /// p lies in J(p) in the local ring at the origin.
  bool p_in_jacobian = false;
};

/// Requires p(0) = 0 and no linear part. Throws NonIsolated when the local
/// dimension does not stabilise below `cap`.
ModuliAlgebra moduli_algebra(const Polynomial& p, int cap = kDefaultTruncationCap, std::stop_token stop = {});

struct SplitResult {
  /// Rank of the quadratic part.
  int rank = 0;
  /// Split variables (positions in the VarSet) and their scalars λ_i.
  std::vector<std::size_t> split_vars;
  std::vector<Rational> lambdas;
  /// Remaining variables, in VarSet order.
  std::vector<std::size_t> residual_vars;
  /// q over the full VarSet, involving only residual_vars.
  Polynomial residual;
  /// q over a VarSet holding only the residual variables; null when none remain.
  std::optional<Polynomial> residual_reduced;
  /// x_i ↦ change[i]; p(change) ≡ Σ λ_i x_{s_i}² + q mod m^{N+1}.
  std::vector<Polynomial> change;
  int truncation = 0;
};

/// Splitting lemma for p ∈ m², exact over Q: the quadratic part is diagonalised
/// by congruence and each split variable is completed to λx² by iteration.
SplitResult splitting_normal_form(const Polynomial& p, int truncation);

struct YauReport {
  ModuliAlgebra moduli;
  std::optional<SplitResult> split;
  /// Tjurina number of the residual q when p was split.
  std::optional<Index> residual_tjurina;
  CriteriaReport criteria;
  /// Minimal generator count of (p, J(p)) at the origin.
  Index jacobian_min_gens = 0;
  Index dim_der = 0;
  SeriesReport der_series;
  bool solvable = false;
};

/// Moduli algebra, splitting reduction, criteria and the direct solvability
/// decision for Der A(p).
YauReport yau_report(const Polynomial& p, int cap = kDefaultTruncationCap, std::stop_token stop = {});

}  // namespace artinlab
