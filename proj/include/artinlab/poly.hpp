#pragma once

// Sparse multivariate polynomials over Q.

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artinlab/linalg.hpp"

namespace artinlab {

/// Ordered, named variables x_1..x_n of the ambient polynomial ring.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names);

/// Parses "x, y, z" or "x y z".
VarSetPtr parse_varset(std::string_view text);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;
  /// Index of the variable if this is a pure power x_i^k with k > 0.
  std::optional<std::size_t> pure_power_variable() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  // Exponent-vector comparison; a storage key only, not a monomial order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

int weighted_degree(const Monomial& m, const std::vector<int>& weights);

/// All monomials in nvars variables of the given total degree, ascending exponent vectors.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

enum class OrderKind { Lex, DegLex, DegRevLex };

/// A monomial order together with a variable priority (priority[0] is the largest variable).
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

  /// Priority equal to the declaration order of the variables.
  static MonomialOrder natural(OrderKind kind, std::size_t nvars);

  /// Parses "deglex", "deglex:y,x" or "deglex:y>x" against a VarSet.
  static MonomialOrder parse(std::string_view text, const VarSet& vars);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::string to_string(const VarSet& vars) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> priority_;
};

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// A polynomial with terms stored in strictly decreasing order under its monomial order.
class Polynomial {
 public:
  Polynomial(VarSetPtr vars, MonomialOrder order);
  explicit Polynomial(VarSetPtr vars);

  static Polynomial constant(VarSetPtr vars, const Rational& c);
  static Polynomial variable(VarSetPtr vars, std::size_t i);
  static Polynomial monomial(VarSetPtr vars, const Monomial& m, const Rational& c = Rational(1));
  static Polynomial from_terms(VarSetPtr vars, MonomialOrder order, std::vector<Term> terms);

  const VarSetPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coeff() const { return leading_term().coeff; }
  Rational coeff(const Monomial& m) const;

  /// Same polynomial, re-sorted under another order.
  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial monic() const;

  int total_degree() const;
  /// Minimal total degree of a term; kInfiniteOrder for zero.
  int order_of() const;
  Rational evaluate(const std::vector<Rational>& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// c·m·p for a monomial m.
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  /// this − c·m·p, fused.
  Polynomial sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& p) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& b) const;
  Polynomial aligned(const Polynomial& b) const;

  VarSetPtr vars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, int exponent);
Polynomial partial_derivative(const Polynomial& p, std::size_t var);
/// Composition: each variable x_i is replaced by images[i]. Images live over the result VarSet.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
/// Drops every term of total degree > degree.
Polynomial truncate(const Polynomial& p, int degree);
Polynomial homogeneous_component(const Polynomial& p, int degree);
/// Product truncated at the given total degree.
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int degree);

/// Parses the polynomial grammar: signed terms with + - * ^, integer or p/q coefficients,
/// parenthesised subexpressions. Implicit multiplication is rejected.
Polynomial parse_polynomial(std::string_view text, VarSetPtr vars);
Polynomial parse_polynomial(std::string_view text, VarSetPtr vars, const MonomialOrder& order);

/// Splits a comma/semicolon/newline separated list, honouring parentheses.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, VarSetPtr vars);

std::string to_string(const Rational& r);

namespace detail {
/// a + scale·shift·b for term lists sorted descending under `order`.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, const Rational& scale,
                              const Monomial* shift, const MonomialOrder& order);
}  // namespace detail

}  // namespace artinlab
