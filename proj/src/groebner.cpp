#include "artinlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace artinlab {

// ---------------------------------------------------------------- Ideal / GroebnerBasis

Ideal::Ideal(VarSetPtr vars, std::vector<Polynomial> generators) : vars_(std::move(vars)) {
  require(vars_ != nullptr, "ideal without a variable set");
  for (auto& g : generators) {
    require(*g.vars() == *vars_, "generator over a different variable set");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(VarSetPtr vars, MonomialOrder order, std::vector<Polynomial> reduced_elements)
    : vars_(std::move(vars)), order_(std::move(order)), elements_(std::move(reduced_elements)) {
  for (auto& e : elements_) e = e.with_order(order_);
  std::sort(elements_.begin(), elements_.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order_.less(a.leading_monomial(), b.leading_monomial());
  });
  for (const auto& e : elements_) staircase_.push_back(e.leading_monomial());
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

// ---------------------------------------------------------------- reduction

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis)
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

// Full reduction of p by `basis` (any list of nonzero polynomials in p's order).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
  const MonomialOrder& order = p.order();
  std::vector<Term> work = p.terms();
  std::size_t start = 0;
  std::vector<Term> remainder;
  while (start < work.size()) {
    const Term& lead = work[start];
    const Polynomial* g = find_reducer(lead.monomial, basis);
    if (!g) {
      remainder.push_back(lead);
      ++start;
      continue;
    }
    const Rational c = lead.coeff / g->leading_coeff();
    const Monomial shift = lead.monomial / g->leading_monomial();
    std::span<const Term> rest(work.data() + start, work.size() - start);
    work = detail::merge_terms(rest, g->terms(), -c, &shift, order);
    start = 0;
  }
  return Polynomial::from_terms(p.vars(), order, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.mul_term(Rational(1) / f.leading_coeff(), l / f.leading_monomial());
  return a.sub_mul_term(Rational(1) / g.leading_coeff(), l / g.leading_monomial(), g);
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& order) {
  // Minimalise: drop elements whose leading monomial is divisible by another's.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g.monic());
  }
  // Reduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term lead = minimal[i].leading_term();
    std::vector<Term> tail(minimal[i].terms().begin() + 1, minimal[i].terms().end());
    Polynomial t = reduce(Polynomial::from_terms(minimal[i].vars(), order, std::move(tail)), others);
    minimal[i] = Polynomial::monomial(minimal[i].vars(), lead.monomial, lead.coeff).with_order(order) + t;
  }
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  require(order.priority().size() == ideal.nvars(), "monomial order does not match variable count");
  std::vector<Polynomial> g;
  for (const auto& f : ideal.generators()) {
    Polynomial r = reduce(f.with_order(order), g);
    if (!r.is_zero()) g.push_back(r.monic());
  }
  for (const auto& p : g)
    if (p.is_constant()) return GroebnerBasis(ideal.vars(), order, {p});

  // Pair queue ordered by lcm (normal selection strategy).
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    const auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      queue.insert(Pair{i, k, lcm(g[i].leading_monomial(), g[k].leading_monomial())});
      pending.emplace(i, k);
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_pairs_for(k);

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!queue.empty()) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    const Monomial& li = g[pr.i].leading_monomial();
    const Monomial& lj = g[pr.j].leading_monomial();
    if (coprime(li, lj)) continue;  // product criterion
    bool chain = false;             // chain criterion
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (g[k].leading_monomial().divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;
    Polynomial r = reduce(s_polynomial(g[pr.i], g[pr.j]), g);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.is_constant()) return GroebnerBasis(ideal.vars(), order, {r});
    g.push_back(std::move(r));
    add_pairs_for(g.size() - 1);
  }
  return GroebnerBasis(ideal.vars(), order, interreduce(std::move(g), order));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return reduce(p.with_order(gb.order()), gb.elements());
}

bool is_finite_dimensional(const GroebnerBasis& gb) {
  if (gb.is_unit()) return true;
  std::vector<bool> has_power(gb.nvars(), false);
  for (const auto& m : gb.staircase())
    if (auto v = m.pure_power_variable()) has_power[*v] = true;
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (!is_finite_dimensional(gb)) fail(ErrorKind::InfiniteDimensional, "quotient algebra is infinite-dimensional");
  std::vector<Monomial> out;
  if (gb.is_unit()) return out;
  auto in_staircase = [&](const Monomial& m) {
    return std::any_of(gb.staircase().begin(), gb.staircase().end(),
                       [&](const Monomial& s) { return s.divides(m); });
  };
  // Standard monomials form an order ideal; grow it from 1.
  std::set<Monomial> seen;
  std::vector<Monomial> frontier{Monomial(gb.nvars())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      out.push_back(m);
      for (std::size_t i = 0; i < gb.nvars(); ++i) {
        Monomial n = m;
        ++n[i];
        if (seen.count(n) || in_staircase(n)) continue;
        seen.insert(n);
        next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return gb.order().less(a, b); });
  return out;
}

int min_power_of_maximal_inside(const GroebnerBasis& gb) {
  const auto basis = standard_monomials(gb);
  if (basis.empty()) return 0;
  const int bound = static_cast<int>(basis.size());
  for (int r = 1; r <= bound; ++r) {
    bool inside = true;
    for (const auto& m : monomials_of_degree(gb.nvars(), r)) {
      if (!normal_form(Polynomial::monomial(gb.vars(), m), gb).is_zero()) {
        inside = false;
        break;
      }
    }
    if (inside) return r;
  }
  fail(ErrorKind::InvalidArgument, "no power of the maximal ideal at the origin lies in the ideal (not local at 0)");
}

Vector coordinates(const Polynomial& normal, const std::vector<Monomial>& basis) {
  std::unordered_map<Monomial, Index, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<Index>(i));
  Vector v = Vector::Zero(static_cast<Index>(basis.size()));
  for (const auto& t : normal.terms()) {
    auto it = index.find(t.monomial);
    ensure(it != index.end(), "normal form contains a non-standard monomial");
    v(it->second) = t.coeff;
  }
  return v;
}

Matrix multiplication_matrix(const Polynomial& p, const GroebnerBasis& gb, const std::vector<Monomial>& basis) {
  const Index d = static_cast<Index>(basis.size());
  Matrix m = Matrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) {
    const Polynomial prod = p * Polynomial::monomial(gb.vars(), basis[static_cast<std::size_t>(j)]);
    m.col(j) = coordinates(normal_form(prod, gb), basis);
  }
  return m;
}

// ---------------------------------------------------------------- univariate helpers

namespace {

void trim_upoly(UPoly& f) {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
}

Rational eval_upoly(const UPoly& f, const Rational& x) {
  Rational v(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
  return v;
}

// Synthetic division by (x - r); returns quotient, asserts zero remainder.
UPoly deflate(const UPoly& f, const Rational& r) {
  const std::size_t n = f.size();
  UPoly q(n - 1);
  Rational carry(0);
  for (std::size_t k = n; k-- > 1;) {
    carry = f[k] + carry * r;
    q[k - 1] = carry;
  }
  ensure(is_zero(f[0] + carry * r), "deflation by a non-root");
  return q;
}

UPoly derivative(const UPoly& f) {
  UPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<int>(k));
  trim_upoly(d);
  return d;
}

UPoly poly_rem(UPoly a, const UPoly& b) {
  trim_upoly(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    trim_upoly(a);
  }
  return a;
}

UPoly poly_quot(UPoly a, const UPoly& b) {
  trim_upoly(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    trim_upoly(a);
  }
  return q;
}

UPoly poly_gcd(UPoly a, UPoly b) {
  trim_upoly(a);
  trim_upoly(b);
  while (!b.empty()) {
    UPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, int>> factors;
  for (BigInt p = 2; p * p <= n && p <= 1000000; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  // Any remaining cofactor is treated as prime; a missed root only makes the
  // splitting check fail, which is reported as incompleteness.
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

UPoly characteristic_polynomial(const Matrix& input) {
  require(input.rows() == input.cols(), "characteristic polynomial of a non-square matrix");
  const Index n = input.rows();
  Matrix h = input;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (Index m = 1; m + 1 < n; ++m) {
    Index i = m;
    while (i < n && is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      h.row(i).swap(h.row(m));
      h.col(i).swap(h.col(m));
    }
    const Rational t = h(m, m - 1);
    for (Index r = m + 1; r < n; ++r) {
      if (is_zero(h(r, m - 1))) continue;
      const Rational u = h(r, m - 1) / t;
      h.row(r) -= u * h.row(m);
      h.col(m) += u * h.col(r);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod subdiagonal) p_{k-i-1}, 1-indexed.
  std::vector<UPoly> p(static_cast<std::size_t>(n) + 1);
  p[0] = {Rational(1)};
  for (Index m = 1; m <= n; ++m) {
    const UPoly& prev = p[static_cast<std::size_t>(m - 1)];
    UPoly cur(prev.size() + 1, Rational(0));
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] += prev[k];
      cur[k] -= h(m - 1, m - 1) * prev[k];
    }
    Rational t(1);
    for (Index i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (is_zero(t)) break;
      const Rational c = h(m - i - 1, m - 1) * t;
      const UPoly& q = p[static_cast<std::size_t>(m - i - 1)];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] -= c * q[k];
    }
    p[static_cast<std::size_t>(m)] = std::move(cur);
  }
  return p[static_cast<std::size_t>(n)];
}

RationalRoots rational_roots(const UPoly& input) {
  UPoly f = input;
  trim_upoly(f);
  require(!f.empty(), "rational roots of the zero polynomial");
  RationalRoots out;
  // Root 0.
  int zero_mult = 0;
  while (f.size() > 1 && is_zero(f[0])) {
    f.erase(f.begin());
    ++zero_mult;
  }
  if (zero_mult) out.roots.emplace_back(Rational(0), zero_mult);
  if (f.size() > 1) {
    // Candidates from the square-free part, cleared to integer coefficients.
    UPoly sq = poly_quot(f, poly_gcd(f, derivative(f)));
    BigInt den_lcm = 1;
    for (const auto& c : sq) den_lcm = boost::multiprecision::lcm(den_lcm, BigInt(denominator(c)));
    std::vector<BigInt> ints;
    for (const auto& c : sq) ints.push_back(BigInt(numerator(c * Rational(den_lcm))));
    std::vector<Rational> candidates;
    for (const auto& p : divisors(ints.front()))
      for (const auto& q : divisors(ints.back())) {
        candidates.emplace_back(p, q);
        candidates.emplace_back(-p, q);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (!is_zero(eval_upoly(f, r))) continue;
      int mult = 0;
      while (f.size() > 1 && is_zero(eval_upoly(f, r))) {
        f = deflate(f, r);
        ++mult;
      }
      out.roots.emplace_back(r, mult);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  const Rational lc = f.back();
  for (auto& c : f) c /= lc;
  out.cofactor = f;
  return out;
}

// ---------------------------------------------------------------- points & localisation

RationalPoints rational_points(const Ideal& ideal) {
  const auto order = MonomialOrder::natural(OrderKind::DegRevLex, ideal.nvars());
  const GroebnerBasis gb = buchberger(ideal, order);
  if (!is_finite_dimensional(gb)) fail(ErrorKind::InfiniteDimensional, "quotient algebra is infinite-dimensional");
  RationalPoints out;
  const auto basis = standard_monomials(gb);
  if (basis.empty()) return out;
  std::vector<std::vector<Rational>> coordinate_values(ideal.nvars());
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    const Matrix m = multiplication_matrix(Polynomial::variable(ideal.vars(), i), gb, basis);
    const RationalRoots roots = rational_roots(characteristic_polynomial(m));
    if (roots.cofactor.size() > 1 && out.complete) {
      out.complete = false;
      out.offending_variable = i;
    }
    for (const auto& [r, mult] : roots.roots) coordinate_values[i].push_back(r);
  }
  // Cartesian product filtered by the generators.
  std::vector<Rational> point(ideal.nvars());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ideal.nvars()) {
      for (const auto& g : ideal.generators())
        if (!is_zero(g.evaluate(point))) return;
      out.points.push_back(point);
      return;
    }
    for (const auto& v : coordinate_values[i]) {
      point[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

Ideal shift_to_origin(const Ideal& ideal, const std::vector<Rational>& point) {
  require(point.size() == ideal.nvars(), "point dimension does not match variable count");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ideal.nvars(); ++i)
    images.push_back(Polynomial::variable(ideal.vars(), i) + Polynomial::constant(ideal.vars(), point[i]));
  std::vector<Polynomial> shifted;
  for (const auto& g : ideal.generators()) shifted.push_back(substitute(g, images));
  return Ideal(ideal.vars(), std::move(shifted));
}

LocalComponent local_component(const Ideal& ideal, const std::vector<Rational>& point, int cap,
                               std::stop_token stop) {
  for (const auto& g : ideal.generators())
    require(is_zero(g.evaluate(point)), "generator " + g.to_string() + " does not vanish at the point");
  Ideal shifted = shift_to_origin(ideal, point);
  const auto order = MonomialOrder::natural(OrderKind::DegRevLex, ideal.nvars());
  const GroebnerBasis base = buchberger(shifted, order);

  auto truncated_basis = [&](int n) {
    std::vector<Polynomial> gens = base.elements();
    for (const auto& m : monomials_of_degree(ideal.nvars(), n)) gens.push_back(Polynomial::monomial(ideal.vars(), m));
    return buchberger(Ideal(ideal.vars(), std::move(gens)), order);
  };

  GroebnerBasis current = truncated_basis(1);
  std::size_t current_dim = standard_monomials(current).size();
  for (int n = 1; n <= cap; ++n) {
    if (stop.stop_requested()) fail(ErrorKind::Cancelled, "localisation cancelled");
    GroebnerBasis next = truncated_basis(n + 1);
    const std::size_t next_dim = standard_monomials(next).size();
    if (next_dim == current_dim) return LocalComponent{point, std::move(shifted), std::move(current), n};
    current = std::move(next);
    current_dim = next_dim;
  }
  fail(ErrorKind::NonIsolated,
       "local dimension did not stabilise below truncation cap " + std::to_string(cap) + " (non-isolated zero)");
}

}  // namespace artinlab
