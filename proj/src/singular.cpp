#include "artinlab/singular.hpp"

#include <algorithm>
#include <numeric>

namespace artinlab {

Ideal jacobian_ideal(const Polynomial& p) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto d = partial_derivative(p, i);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  return Ideal(p.vars(), std::move(gens));
}

namespace {

// a·t ≥ b over Q^r.
struct Inequality {
  std::vector<Rational> a;
  Rational b;
};

// Fourier–Motzkin: eliminate t_{r-1}, ..., t_0, then back-substitute picking the
// tightest available bound at each level.
std::optional<std::vector<Rational>> feasible_point(std::vector<Inequality> system, std::size_t r) {
  std::vector<std::vector<Inequality>> levels(r + 1);
  levels[r] = std::move(system);
  for (std::size_t j = r; j-- > 0;) {
    const auto& cur = levels[j + 1];
    std::vector<Inequality> next, pos, neg;
    for (const auto& q : cur) {
      if (q.a[j] > 0) pos.push_back(q);
      else if (q.a[j] < 0) neg.push_back(q);
      else next.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // (−n_j)·p + p_j·n cancels t_j.
        const Rational sp = -n.a[j], sn = p.a[j];
        Inequality c{std::vector<Rational>(r), sp * p.b + sn * n.b};
        for (std::size_t i = 0; i < r; ++i) c.a[i] = sp * p.a[i] + sn * n.a[i];
        c.a[j] = 0;
        next.push_back(std::move(c));
      }
    levels[j] = std::move(next);
  }
  for (const auto& q : levels[0])
    if (q.b > 0) return std::nullopt;

  std::vector<Rational> t(r, Rational(0));
  for (std::size_t j = 0; j < r; ++j) {
    std::optional<Rational> lo, hi;
    for (const auto& q : levels[j + 1]) {
      if (q.a[j] == 0) continue;
      Rational rest = q.b;
      for (std::size_t i = 0; i < j; ++i) rest -= q.a[i] * t[i];
      const Rational bound = rest / q.a[j];
      if (q.a[j] > 0) lo = lo ? std::max(*lo, bound) : bound;
      else hi = hi ? std::min(*hi, bound) : bound;
    }
    t[j] = lo ? *lo : hi ? *hi : Rational(0);
  }
  return t;
}

}  // namespace

std::optional<QuasiHomogeneousWeights> quasi_homogeneous_weights(const Polynomial& p) {
  require(!p.is_zero(), "quasi-homogeneity of the zero polynomial");
  const std::size_t n = p.nvars();
  const auto& terms = p.terms();
  const int d0 = terms.front().monomial.degree();
  if (std::all_of(terms.begin(), terms.end(), [&](const Term& t) { return t.monomial.degree() == d0; }))
    return QuasiHomogeneousWeights{std::vector<long long>(n, 1), d0};

  // (e_t − e_0)·w = 0 for every term t.
  Matrix diff(static_cast<Index>(terms.size() - 1), static_cast<Index>(n));
  for (std::size_t t = 1; t < terms.size(); ++t)
    for (std::size_t i = 0; i < n; ++i)
      diff(static_cast<Index>(t - 1), static_cast<Index>(i)) = terms[t].monomial[i] - terms[0].monomial[i];
  const auto ker = kernel_basis(diff);
  const std::size_t r = static_cast<std::size_t>(ker.dim());
  if (r == 0) return std::nullopt;

  // w = B·t with every w_i ≥ 1.
  std::vector<Inequality> system;
  for (std::size_t i = 0; i < n; ++i) {
    Inequality q{std::vector<Rational>(r), Rational(1)};
    for (std::size_t c = 0; c < r; ++c) q.a[c] = ker.basis()(static_cast<Index>(i), static_cast<Index>(c));
    system.push_back(std::move(q));
  }
  const auto t = feasible_point(std::move(system), r);
  if (!t) return std::nullopt;

  std::vector<Rational> w(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < r; ++c) w[i] += ker.basis()(static_cast<Index>(i), static_cast<Index>(c)) * (*t)[c];
  BigInt den = 1, num = 0;
  for (const auto& x : w) den = boost::multiprecision::lcm(den, BigInt(denominator(x)));
  for (const auto& x : w) num = boost::multiprecision::gcd(num, BigInt(numerator(x) * (den / denominator(x))));
  QuasiHomogeneousWeights out;
  for (const auto& x : w) {
    const BigInt k = numerator(x) * (den / denominator(x)) / num;
    ensure(k >= 1, "quasi-homogeneous weight is not positive");
    out.weights.push_back(k.convert_to<long long>());
  }
  for (std::size_t i = 0; i < n; ++i) out.degree += out.weights[i] * terms[0].monomial[i];
  for (const auto& term : terms) {
    long long deg = 0;
    for (std::size_t i = 0; i < n; ++i) deg += out.weights[i] * term.monomial[i];
    ensure(deg == out.degree, "quasi-homogeneous weights do not balance");
  }
  return out;
}

ModuliAlgebra moduli_algebra(const Polynomial& p, int cap, std::stop_token stop) {
  require(!p.is_zero(), "moduli algebra of the zero polynomial");
  require(p.order_of() >= 2, "p must vanish to order at least 2 at the origin (p(0) = 0, no linear part)");
  const Ideal jac = jacobian_ideal(p);
  std::vector<Polynomial> gens{p};
  gens.insert(gens.end(), jac.generators().begin(), jac.generators().end());
  const std::vector<Rational> origin(p.nvars(), Rational(0));

  auto tjurina = local_component(Ideal(p.vars(), gens), origin, cap, stop);
  auto algebra = ArtinAlgebra::from_groebner(tjurina.basis);
  auto milnor = local_component(jac, origin, cap, stop);
  const Index mu = static_cast<Index>(standard_monomials(milnor.basis).size());
  const bool member = normal_form(p, milnor.basis).is_zero();
  const Index tau = algebra.dim();
  return ModuliAlgebra{std::move(tjurina), std::move(algebra), tau, mu, quasi_homogeneous_weights(p), member};
}

namespace {

std::vector<Polynomial> identity_map(const VarSetPtr& v) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < v->size(); ++i) out.push_back(Polynomial::variable(v, i));
  return out;
}

Polynomial set_variable(const Polynomial& p, std::size_t i, const Polynomial& value) {
  auto images = identity_map(p.vars());
  images[i] = value;
  return substitute(p, images);
}

// Terms of p with x_i-degree ≥ 2, divided by x_i².
Polynomial divide_by_square(const Polynomial& p, std::size_t i) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    ensure(t.monomial[i] == 0 || t.monomial[i] >= 2, "linear term in a split variable survived");
    if (t.monomial[i] < 2) continue;
    Monomial m = t.monomial;
    m[i] -= 2;
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(p.vars(), p.order(), std::move(terms));
}

// (1 + h)^{-1/2} for h ∈ m, truncated.
Polynomial inverse_sqrt(const Polynomial& h, int degree) {
  const auto& v = h.vars();
  Polynomial sum = Polynomial::constant(v, Rational(1));
  Polynomial power = sum;
  Rational c = 1;
  for (int k = 1; k <= degree; ++k) {
    c *= (Rational(-1, 2) - Rational(k - 1)) / Rational(k);
    power = mul_truncated(power, h, degree);
    if (power.is_zero()) break;
    sum += c * power;
  }
  return sum;
}

std::vector<Polynomial> compose(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& inner, int degree) {
  std::vector<Polynomial> out;
  for (const auto& f : outer) out.push_back(truncate(substitute(f, inner), degree));
  return out;
}

}  // namespace

SplitResult splitting_normal_form(const Polynomial& p, int N) {
  require(!p.is_zero(), "splitting of the zero polynomial");
  require(p.order_of() >= 2, "p has a linear part; the splitting lemma needs p ∈ m²");
  require(N >= 3, "splitting truncation degree must be at least 3");
  const auto& v = p.vars();
  const std::size_t n = p.nvars();
  const Index ni = static_cast<Index>(n);

  // Congruence diagonalisation of the quadratic part: Aᵀ ← Eᵀ A E, P ← P E.
  Matrix A = Matrix::Zero(ni, ni);
  for (const auto& t : homogeneous_component(p, 2).terms()) {
    std::vector<Index> at;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < t.monomial[i]; ++k) at.push_back(static_cast<Index>(i));
    if (at[0] == at[1]) A(at[0], at[0]) = t.coeff;
    else A(at[0], at[1]) = A(at[1], at[0]) = t.coeff / 2;
  }
  Matrix P = Matrix::Identity(ni, ni);
  std::vector<bool> done(n, false);
  std::vector<std::size_t> split;
  std::vector<Rational> lambdas;
  auto add_column = [&](Index target, Index source, const Rational& c) {
    // e_target += c·e_source
    P.col(target) += c * P.col(source);
    A.col(target) += c * A.col(source);
    A.row(target) += c * A.row(source);
  };
  for (;;) {
    std::optional<Index> pivot;
    for (Index i = 0; i < ni && !pivot; ++i)
      if (!done[i] && A(i, i) != 0) pivot = i;
    if (!pivot) {
      for (Index i = 0; i < ni && !pivot; ++i)
        for (Index j = 0; j < ni && !pivot; ++j)
          if (i != j && !done[i] && !done[j] && A(i, j) != 0) {
            add_column(i, j, Rational(1));
            pivot = i;
          }
    }
    if (!pivot) break;
    const Index i = *pivot;
    for (Index j = 0; j < ni; ++j)
      if (j != i && !done[j] && A(i, j) != 0) add_column(j, i, -A(i, j) / A(i, i));
    done[i] = true;
    split.push_back(static_cast<std::size_t>(i));
    lambdas.push_back(A(i, i));
  }

  std::vector<Polynomial> change;
  for (Index i = 0; i < ni; ++i) {
    Polynomial img(v);
    for (Index j = 0; j < ni; ++j)
      if (P(i, j) != 0) img += P(i, j) * Polynomial::variable(v, static_cast<std::size_t>(j));
    change.push_back(img);
  }
  Polynomial cur = truncate(substitute(p, change), N);

  for (std::size_t s = 0; s < split.size(); ++s) {
    const std::size_t i = split[s];
    const Rational& lambda = lambdas[s];
    const Polynomial zero(v);
    // y_i ↦ y_i + g with g free of y_i, chosen so the y_i-linear coefficient vanishes.
    Polynomial g(v);
    Polynomial shifted = cur;
    for (int iter = 0;; ++iter) {
      ensure(iter <= N + 2, "splitting iteration did not converge");
      shifted = truncate(set_variable(cur, i, Polynomial::variable(v, i) + g), N);
      const Polynomial a1 = set_variable(partial_derivative(shifted, i), i, zero);
      if (a1.is_zero()) break;
      g = truncate(g - a1 * (Rational(1) / (2 * lambda)), N);
    }
    auto step = identity_map(v);
    step[i] = Polynomial::variable(v, i) + g;
    change = compose(change, step, N);

    // shifted = c0 + y_i²·u with u(0) = λ; y_i ↦ y_i·c with c²·u(c·y_i) = λ.
    const Polynomial c0 = set_variable(shifted, i, zero);
    const Polynomial u = divide_by_square(shifted - c0, i);
    Polynomial c = Polynomial::constant(v, Rational(1));
    for (int iter = 0;; ++iter) {
      ensure(iter <= N + 2, "rescaling iteration did not converge");
      const Polynomial ui = truncate(set_variable(u, i, Polynomial::variable(v, i) * c), N);
      const Polynomial h = ui * (Rational(1) / lambda) - Polynomial::constant(v, Rational(1));
      const Polynomial next = inverse_sqrt(h, N);
      if (next == c) break;
      c = next;
    }
    step = identity_map(v);
    step[i] = truncate(Polynomial::variable(v, i) * c, N);
    change = compose(change, step, N);
    cur = truncate(substitute(p, change), N);
    ensure(truncate(cur - c0 - lambda * pow(Polynomial::variable(v, i), 2), N).is_zero(),
           "split variable was not separated");
  }

  // Residual and final checks.
  Polynomial quad(v);
  for (std::size_t s = 0; s < split.size(); ++s) quad += lambdas[s] * pow(Polynomial::variable(v, split[s]), 2);
  const Polynomial residual = cur - quad;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(split.begin(), split.end(), i) == split.end()) rest.push_back(i);
  for (const auto& t : residual.terms())
    for (std::size_t i : split) ensure(t.monomial[i] == 0, "residual depends on a split variable");
  ensure(residual.order_of() >= 3, "residual has a quadratic part");

  Matrix jac(ni, ni);
  for (Index r = 0; r < ni; ++r)
    for (Index c = 0; c < ni; ++c)
      jac(r, c) = change[static_cast<std::size_t>(r)].coeff(Monomial::variable(n, static_cast<std::size_t>(c)));
  ensure(determinant(jac) != 0, "coordinate change is not invertible");

  std::optional<Polynomial> reduced;
  if (!rest.empty()) {
    std::vector<std::string> names;
    for (std::size_t i : rest) names.push_back(v->name(i));
    auto rv = make_varset(names);
    std::vector<Term> terms;
    for (const auto& t : residual.terms()) {
      std::vector<int> e;
      for (std::size_t i : rest) e.push_back(t.monomial[i]);
      terms.push_back({Monomial(e), t.coeff});
    }
    Polynomial q(rv);
    for (const auto& t : terms) q += Polynomial::monomial(rv, t.monomial, t.coeff);
    reduced = q;
  }
  return SplitResult{static_cast<int>(split.size()), split, lambdas, rest, residual, reduced, change, N};
}

YauReport yau_report(const Polynomial& p, int cap, std::stop_token stop) {
  auto moduli = moduli_algebra(p, cap, stop);
  std::optional<SplitResult> split;
  std::optional<Index> residual_tjurina;
  if (p.order_of() == 2) {
    // Lemma 3.2 reduction; raise N until the residual reproduces dim A(p).
    int N = std::max(3, moduli.algebra.nilpotency_exponent() + 2);
    for (int attempt = 0;; ++attempt) {
      ensure(attempt < 4, "splitting residual never matched the Tjurina number");
      split = splitting_normal_form(p, N);
      if (!split->residual_reduced) residual_tjurina = 1;
      else if (split->residual_reduced->is_zero()) residual_tjurina.reset();
      else residual_tjurina = moduli_algebra(*split->residual_reduced, cap, stop).tjurina;
      if (residual_tjurina == moduli.tjurina) break;
      N *= 2;
    }
  }

  std::vector<Polynomial> gens{p};
  const Ideal jac = jacobian_ideal(p);
  gens.insert(gens.end(), jac.generators().begin(), jac.generators().end());
  const Index jmin = minimal_generator_count(Ideal(p.vars(), gens));

  auto criteria = local_criteria(moduli.algebra);
  const auto der = compute_derivations(moduli.algebra, moduli.component.basis);
  auto ser = series(der);
  const bool solvable = ser.solvable;
  const Index dim_der = der.dimension();
  return YauReport{std::move(moduli), std::move(split), residual_tjurina, std::move(criteria), jmin, dim_der,
                   std::move(ser), solvable};
}

}  // namespace artinlab
