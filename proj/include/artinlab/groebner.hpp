#pragma once

// Buchberger's algorithm, normal forms, staircases, rational point finding and
// localisation of zero-dimensional ideals.

#include <stop_token>
#include <vector>

#include "artinlab/poly.hpp"

namespace artinlab {

/// An ideal of Q[x_1..x_n] given by nonzero generators, in the order supplied.
class Ideal {
 public:
  Ideal(VarSetPtr vars, std::vector<Polynomial> generators);

  const VarSetPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<Polynomial>& generators() const& { return gens_; }
  std::vector<Polynomial> generators() && { return std::move(gens_); }
  std::size_t size() const { return gens_.size(); }

 private:
  VarSetPtr vars_;
  std::vector<Polynomial> gens_;
};

/// Reduced Gröbner basis: monic elements sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(VarSetPtr vars, MonomialOrder order, std::vector<Polynomial> reduced_elements);

  const VarSetPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& staircase() const { return staircase_; }
  /// True when the ideal is the whole ring.
  bool is_unit() const;

 private:
  VarSetPtr vars_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> staircase_;
};

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

/// Fully reduced remainder of p modulo the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool is_finite_dimensional(const GroebnerBasis& gb);

/// Monomials outside the staircase ideal, ascending in the basis order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// Least r with m^r ⊆ I, m = (x_1..x_n). Throws when no such r exists.
int min_power_of_maximal_inside(const GroebnerBasis& gb);

struct RationalPoints {
  std::vector<std::vector<Rational>> points;
  /// True when every coordinate multiplication operator has a characteristic
  /// polynomial that splits over Q; then `points` is the complete zero set.
  bool complete = true;
  /// Variable whose operator failed to split, if any.
  std::optional<std::size_t> offending_variable;
};

RationalPoints rational_points(const Ideal& ideal);

struct LocalComponent {
  std::vector<Rational> point;
  /// Coordinates shifted so that the point is the origin.
  Ideal shifted_ideal;
  /// Basis of I + m^N in shifted coordinates.
  GroebnerBasis basis;
  /// Stabilisation exponent: the local algebra satisfies m̄^N = 0.
  int exponent;
};

inline constexpr int kDefaultTruncationCap = 50;

/// Localisation of `ideal` at a rational zero by truncation stabilisation:
/// d_N = dim Q[x]/(I + m^N) is computed for N = 1, 2, ... until d_N = d_{N+1}.
LocalComponent local_component(const Ideal& ideal, const std::vector<Rational>& point,
                               int cap = kDefaultTruncationCap, std::stop_token stop = {});

/// Ideal translated so that `point` becomes the origin (x ↦ x + point).
Ideal shift_to_origin(const Ideal& ideal, const std::vector<Rational>& point);

/// Dense multiplication-by-polynomial matrix on the standard monomial basis.
Matrix multiplication_matrix(const Polynomial& p, const GroebnerBasis& gb, const std::vector<Monomial>& basis);

/// Coordinates of a normal form on the standard monomial basis.
Vector coordinates(const Polynomial& normal, const std::vector<Monomial>& basis);

// Univariate helpers over Q; coefficient vectors are lowest degree first.
using UPoly = std::vector<Rational>;

UPoly characteristic_polynomial(const Matrix& m);
/// Distinct rational roots with multiplicities and the cofactor that has no rational roots.
struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;
  UPoly cofactor;
};
RationalRoots rational_roots(const UPoly& f);

}  // namespace artinlab
