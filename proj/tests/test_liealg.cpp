#include "doctest.h"

#include <chrono>
#include <random>

#include "artinlab/liealg.hpp"

using namespace artinlab;

namespace {

struct Built {
  GroebnerBasis gb;
  ArtinAlgebra s;
};

Built build(const char* text, std::vector<std::string> names, const char* order = "degrevlex") {
  auto v = make_varset(std::move(names));
  auto gb = buchberger(Ideal(v, parse_polynomial_list(text, v)), MonomialOrder::parse(order, *v));
  return {gb, ArtinAlgebra::from_groebner(gb)};
}

// Independent nilpotency check: D^dim = 0.
bool nilpotent_matrix(const Matrix& m) {
  Matrix p = Matrix::Identity(m.rows(), m.cols());
  for (Index k = 0; k < m.rows(); ++k) p = p * m;
  return p.isZero();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

const char* kProp56 = "y^5, (x+y)^6, x^5 - x^3*y^3, x^4*y";

}  // namespace

TEST_CASE("derivations of small algebras") {
  auto a = build("x^2", {"x"});
  auto da = compute_derivations(a.s, a.gb);
  CHECK(da.dimension() == 1);
  CHECK_FALSE(all_nilpotent(da));

  auto e27 = build("x^2, y^3, x*y^2", {"x", "y"});
  auto d27 = compute_derivations(e27.s, e27.gb);
  CHECK(d27.dimension() == 7);
  CHECK(series(d27).solvable);

  auto k = build("x", {"x"});
  CHECK(compute_derivations(k.s, k.gb).dimension() == 0);
  CHECK(series(compute_derivations(k.s, k.gb)).solvable);
  CHECK(all_nilpotent(compute_derivations(k.s, k.gb)));
}

TEST_CASE("both derivation routes agree") {
  const std::vector<std::pair<const char*, std::vector<std::string>>> cases{
      {"x^2", {"x"}},
      {"x^2, y^3, x*y^2", {"x", "y"}},
      {"x^2, x*y, y^3", {"x", "y"}},
      {"x^3, x^2*y, x^2*z, y^4, z^4", {"x", "y", "z"}},
      {"x^2 - y^3, x*y", {"x", "y"}},
      {"x1^2, x1*x2, x2^2, x3^2", {"x1", "x2", "x3"}},
      {"x - y^2, y^4", {"x", "y"}},
  };
  for (const auto& [text, names] : cases) {
    auto b = build(text, names);
    auto chain = compute_derivations(b.s, b.gb);
    auto leibniz = compute_derivations(b.s);
    CHECK(chain.dimension() == leibniz.dimension());
    for (const auto& op : chain.basis_operators()) CHECK(leibniz.contains(op));
    for (const auto& op : leibniz.basis_operators()) CHECK(chain.contains(op));
  }
}

TEST_CASE("Leibniz, closure, Jacobi and filtration compatibility") {
  auto b = build("x^2, y^3, x*y^2", {"x", "y"});
  auto c = build("x^2 - y^3, x*y", {"x", "y"});
  auto p = build(kProp56, {"x", "y"}, "deglex:y>x");
  for (const auto* built : {&b, &c, &p}) {
    const auto& s = built->s;
    auto l = compute_derivations(s, built->gb);
    const auto& ops = l.basis_operators();
    for (const auto& d : ops) {
      CHECK(is_derivation(s, d));
      for (int i = 1; i <= s.nilpotency_exponent(); ++i)
        for (Index c2 = 0; c2 < s.power(i).dim(); ++c2) {
          const Vector image = d * s.power(i).basis().col(c2);
          CHECK(s.power(i - 1).contains(image));
          CHECK(s.maximal_ideal().contains(image));
        }
    }
    // Jacobi on basis triples, in operator form.
    if (ops.size() <= 8)
      for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = 0; j < ops.size(); ++j)
          for (std::size_t k = 0; k < ops.size(); ++k) {
            Matrix jac = commutator(ops[i], commutator(ops[j], ops[k])) +
                         commutator(ops[j], commutator(ops[k], ops[i])) +
                         commutator(ops[k], commutator(ops[i], ops[j]));
            CHECK(jac.isZero());
          }
    // Closure: every commutator is the stored combination of basis operators.
    for (Index i = 0; i < l.dimension(); ++i)
      for (Index j = 0; j < l.dimension(); ++j) {
        Matrix expect = Matrix::Zero(s.dim(), s.dim());
        for (const auto& [k, coef] : l.bracket(i, j)) expect += coef * ops[static_cast<std::size_t>(k)];
        CHECK(expect == commutator(ops[static_cast<std::size_t>(i)], ops[static_cast<std::size_t>(j)]));
      }
  }
}

TEST_CASE("series verdicts") {
  auto one = build("x^2", {"x"});
  auto r1 = series(compute_derivations(one.s, one.gb));
  CHECK(r1.solvable);
  CHECK(r1.nilpotent);
  CHECK(r1.derived_dims == std::vector<Index>{1, 0});

  auto thm31 = build("x1^2, x1*x2, x2^2, x3^2", {"x1", "x2", "x3"});
  auto r2 = series(compute_derivations(thm31.s, thm31.gb));
  CHECK_FALSE(r2.solvable);
  CHECK_FALSE(r2.nilpotent);
  for (std::size_t i = 1; i < r2.derived_dims.size(); ++i) CHECK(r2.derived_dims[i] < r2.derived_dims[i - 1]);

  auto e27 = build("x^2, y^3, x*y^2", {"x", "y"});
  CHECK(series(compute_derivations(e27.s, e27.gb)).solvable);
}

TEST_CASE("solvability does not depend on the operator basis") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const char* text : {"x^2, y^3, x*y^2", "x^2, x*y, y^2", "x^3, y^3"}) {
    auto b = build(text, {"x", "y"});
    auto l = compute_derivations(b.s, b.gb);
    std::vector<Matrix> mixed;
    const auto& ops = l.basis_operators();
    for (std::size_t i = 0; i < ops.size(); ++i) {
      Matrix m = ops[i] * Rational(3);
      for (std::size_t j = 0; j < ops.size(); ++j)
        if (j != i) m += Rational(coef(rng)) * ops[j];
      mixed.push_back(m);
    }
    LieAlgebraRep l2(b.s, mixed);
    CHECK(l2.dimension() == l.dimension());
    auto s1 = series(l), s2 = series(l2);
    CHECK(s1.derived_dims == s2.derived_dims);
    CHECK(s1.solvable == s2.solvable);
    CHECK(s1.all_nilpotent_operators == s2.all_nilpotent_operators);
  }
}

TEST_CASE("Engel flag") {
  auto p = build(kProp56, {"x", "y"}, "deglex:y>x");
  auto l = compute_derivations(p.s, p.gb);
  CHECK(all_nilpotent(l));
  for (const auto& op : l.basis_operators()) CHECK(nilpotent_matrix(op));

  auto x2 = build("x^2", {"x"});
  CHECK_FALSE(all_nilpotent(compute_derivations(x2.s, x2.gb)));

  // Two nilpotent operators whose span is not nilpotent: e12, e21 generate sl2.
  auto t = build("x^2, x*y, y^2", {"x", "y"});
  auto lt = compute_derivations(t.s, t.gb);
  CHECK_FALSE(all_nilpotent(lt));
}

TEST_CASE("direct products: Der adds up over local factors") {
  auto v = make_varset({"x", "y"});
  const Ideal i(v, parse_polynomial_list("x^2*(x-1), y^2", v));
  auto global_gb = buchberger(i, MonomialOrder::natural(OrderKind::DegRevLex, 2));
  auto global = ArtinAlgebra::from_groebner(global_gb);
  Index sum = 0;
  for (const auto& f : decompose_local(i)) sum += compute_derivations(f.algebra, f.component.basis).dimension();
  CHECK(compute_derivations(global, global_gb).dimension() == sum);
}

TEST_CASE("socle bounds") {
  auto e27 = build("x^2, y^3, x*y^2", {"x", "y"});
  auto b = socle_bound_check(e27.s, compute_derivations(e27.s, e27.gb));
  CHECK(b.bound == 4);
  CHECK(b.dim_der == 7);
  CHECK(b.holds);

  auto x2 = build("x^2", {"x"});
  auto b2 = socle_bound_check(x2.s, compute_derivations(x2.s, x2.gb));
  CHECK(b2.bound == 1);
  CHECK(b2.dim_der == 1);
  CHECK(b2.holds);
  CHECK(b2.positive);
}

TEST_CASE("unipotent subgroup from the socle") {
  auto e27 = build("x^2, y^3, x*y^2", {"x", "y"});
  auto u = unipotent_subgroup_dim(e27.s);
  CHECK(u.usoc_dim == 0);
  CHECK(u.embedding_dim == 2);
  CHECK(u.lsoc_dim == 2);
  CHECK(u.dim_u == 4);
  CHECK(u.constructed == 4);
  CHECK(u.all_derivations);
  auto l = compute_derivations(e27.s, e27.gb);
  for (const auto& d : u.derivations) CHECK(l.contains(d));
  CHECK(u.dim_u <= l.dimension());

  auto b = build("x^2, x*y, y^3", {"x", "y"});
  auto ub = unipotent_subgroup_dim(b.s);
  CHECK(ub.dim_u == 3);
  CHECK(ub.constructed == 1 * 2 + 1 * (2 - 1));
  CHECK(ub.all_derivations);
  // The constructed tangent derivations span a Lie algebra of nilpotent operators.
  LieAlgebraRep lu(b.s, ub.derivations);
  CHECK(lu.dimension() == ub.constructed);
  CHECK(all_nilpotent(lu));

  auto x2 = build("x^2", {"x"});
  auto ux = unipotent_subgroup_dim(x2.s);
  CHECK(ux.usoc_dim == 1);
  CHECK(ux.embedding_dim == 1);
  CHECK(ux.lsoc_dim == 0);
  CHECK(ux.dim_u == 1);
}

TEST_CASE("Example 2.8 with five variables stays fast") {
  const auto start = std::chrono::steady_clock::now();
  auto b = build("x1^2, x2^2, x3^2, x4^2, x5^2", {"x1", "x2", "x3", "x4", "x5"});
  CHECK(b.s.dim() == 32);
  auto l = compute_derivations(b.s, b.gb);
  CHECK(l.dimension() == 80);
  CHECK(series(l).solvable);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 30.0);
  MESSAGE("n = 5 derivation pipeline: " << secs << " s");
}
