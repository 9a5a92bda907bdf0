#pragma once

// Finite-dimensional commutative algebras given by structure constants.

#include <string>
#include <vector>

#include "artinlab/groebner.hpp"

namespace artinlab {

/// A commutative associative algebra with unit, stored as left multiplication
/// matrices of its basis elements: b_i·b_j = Σ_k L_i(k, j) b_k.
///
/// The generator images x̄_1..x̄_n define the ideal m̄ = (x̄_1..x̄_n); the
/// filtration holds its powers m̄^0 = S ⊇ m̄ ⊇ m̄² ⊇ ... down to the point where
/// the chain stops shrinking.
class ArtinAlgebra {
 public:
  /// Validates commutativity, associativity (exhaustively over basis triples)
  /// and the unit; throws InvariantViolation otherwise.
  ArtinAlgebra(std::vector<std::string> labels, std::vector<Matrix> left_multiplication, Vector unit,
               std::vector<Vector> generators, std::vector<std::string> generator_names = {});

  static ArtinAlgebra from_groebner(const GroebnerBasis& gb);

  Index dim() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  const std::vector<Vector>& generator_images() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  /// Names of the generators (variable names for algebras built from an ideal).
  const std::vector<std::string>& generator_names() const { return generator_names_; }

  /// Structure constant c_ijk: coefficient of b_k in b_i·b_j.
  const Rational& structure_constant(Index i, Index j, Index k) const {
    return left_[static_cast<std::size_t>(i)](k, j);
  }
  const Matrix& basis_multiplication(Index i) const { return left_[static_cast<std::size_t>(i)]; }
  const SparseColumns<Rational>& sparse_multiplication(Index i) const {
    return sparse_left_[static_cast<std::size_t>(i)];
  }
  /// Matrix of z ↦ a·z.
  Matrix multiplication_operator(const Vector& a) const;
  Vector multiply(const Vector& a, const Vector& b) const;

  /// powers()[k] = m̄^k; the last entry is the point where the chain stabilises.
  const std::vector<QSubspace>& powers() const { return powers_; }
  const QSubspace& maximal_ideal() const { return powers_.at(1); }
  /// m̄^k, or the stable tail for k past the stored range.
  const QSubspace& power(int k) const;
  /// Least N with m̄^N = 0 (filtration depth); 0 when the algebra is not local.
  int nilpotency_exponent() const { return local_ ? static_cast<int>(powers_.size()) - 1 : 0; }
  bool is_local() const { return local_; }
  /// dim m̄/m̄².
  Index embedding_dim() const;

 private:
  void check_axioms() const;
  void build_filtration();

  std::vector<std::string> labels_;
  std::vector<Matrix> left_;
  Vector unit_;
  std::vector<Vector> generators_;
  std::vector<std::string> generator_names_;
  std::vector<SparseColumns<Rational>> sparse_left_;
  std::vector<QSubspace> powers_;
  bool local_ = false;
};

/// Ann X = {z : z·v = 0 for every v in X}.
QSubspace annihilator(const ArtinAlgebra& s, const QSubspace& sub);

struct SocleData {
  QSubspace socle;
  QSubspace lsoc;
  QSubspace usoc;
};

/// Soc S = Ann m̄, LSoc = Soc ∩ m̄², and a complement USoc chosen by echelon
/// pivoting that prefers the coordinates of the generator images.
SocleData socle_data(const ArtinAlgebra& s);

/// dim(I/mI) for an ideal with an isolated zero at the origin, computed in
/// K[x]/m^{r+2} with r the least power of m contained in I.
int minimal_generator_count(const Ideal& ideal);

/// gr S with its degreewise presentation data.
struct GradedAlgebra {
  std::vector<Index> component_dims;
  /// Degree of each basis element of `algebra`.
  std::vector<int> degrees;
  /// gr S on an adapted basis; its generator images are the degree-1 classes of x̄_i.
  ArtinAlgebra algebra;
  /// Indices of the generators whose degree-1 classes form a basis of m̄/m̄².
  std::vector<std::size_t> chosen_generators;
  /// Variables y_1..y_e of the presentation K[y] → gr S (named after the chosen generators).
  VarSetPtr presentation_vars;
  /// For k = 0 .. top+1: dim Sym^k, dim I*_k and dim (m·I*)_k.
  std::vector<Index> sym_dims;
  std::vector<Index> kernel_dims;
  std::vector<Index> m_kernel_dims;
  /// Bases of I*_k as homogeneous polynomials in the presentation variables.
  std::vector<std::vector<Polynomial>> kernels;

  int top_degree() const { return static_cast<int>(component_dims.size()) - 1; }
};

GradedAlgebra associated_graded(const ArtinAlgebra& s);

/// Invariants of a minimal presentation S ≅ K[[y_1..y_e]]/I' with I' ⊆ m²,
/// computed intrinsically from the algebra (no defining ideal needed).
struct MinimalPresentation {
  /// e = dim m̄/m̄².
  Index embedding_dim = 0;
  /// Largest l with I' ⊆ m^l.
  int order = 0;
  /// dim(I'/mI').
  Index min_gens = 0;
  std::vector<std::size_t> chosen_generators;
};

/// Requires a local algebra of dimension > 1.
MinimalPresentation minimal_presentation(const ArtinAlgebra& s);

ArtinAlgebra tensor_product(const ArtinAlgebra& a, const ArtinAlgebra& b);

/// Direct product with orthogonal idempotent units; generators are concatenated
/// factor by factor.
ArtinAlgebra direct_product(const std::vector<ArtinAlgebra>& factors);

struct LocalFactor {
  std::vector<Rational> point;
  LocalComponent component;
  ArtinAlgebra algebra;
};

/// One local factor per rational zero; throws IrrationalPoints when some
/// coordinate operator does not split over Q.
std::vector<LocalFactor> decompose_local(const Ideal& ideal, int cap = kDefaultTruncationCap,
                                         std::stop_token stop = {});

}  // namespace artinlab
