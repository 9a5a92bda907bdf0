#include "doctest.h"

#include <random>

#include "artinlab/poly.hpp"

using namespace artinlab;

namespace {

VarSetPtr xy() { return make_varset({"x", "y"}); }

Polynomial P(const char* text, const VarSetPtr& v) { return parse_polynomial(text, v); }

Polynomial random_poly(std::mt19937& rng, const VarSetPtr& v) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), count(0, 4);
  Polynomial p(v);
  for (int t = count(rng); t > 0; --t) {
    Monomial m(v->size());
    for (std::size_t i = 0; i < v->size(); ++i) m[i] = deg(rng);
    p += Polynomial::monomial(v, m, Rational(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("parse") {
  auto v = xy();
  auto p = P("x^2 - x^3", v);
  CHECK(p.size() == 2);
  CHECK(p.coeff(Monomial({2, 0})) == 1);
  CHECK(p.coeff(Monomial({3, 0})) == -1);

  auto b = P("(x+y)^6", v);
  CHECK(b.size() == 7);
  CHECK(b.coeff(Monomial({3, 3})) == 20);

  auto q = P("3/4*x^2*y^4", v);
  REQUIRE(q.size() == 1);
  CHECK(q.leading_coeff() == Rational(3, 4));
  CHECK(q.leading_monomial() == Monomial({2, 4}));

  CHECK(P("-(x - 2*y)", v) == P("2*y - x", v));
  CHECK(P("2^3*x", v) == P("8*x", v));
}

TEST_CASE("parse errors carry positions") {
  auto v = xy();
  try {
    parse_polynomial("x + 2y", v);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(e.kind() == ErrorKind::Parse);
  }
  CHECK_THROWS_AS(parse_polynomial("x + z", v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x", v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x/y", v), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", v), ParseError);
  try {
    parse_polynomial_list("x^2, y^3, x*", v);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 12);
  }
}

TEST_CASE("arithmetic") {
  auto v = xy();
  CHECK(P("x+y", v) * P("x-y", v) == P("x^2-y^2", v));
  CHECK((P("x+y", v) * Polynomial(v)).is_zero());
  CHECK(pow(P("x+y", v), 2) == P("x^2+2*x*y+y^2", v));
  auto other = make_varset({"x", "z"});
  CHECK_THROWS_AS(P("x", v) + P("x", other), Error);
}

TEST_CASE("ring axioms and order additivity on random polynomials") {
  auto v = make_varset({"x", "y", "z"});
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng, v), b = random_poly(rng, v), c = random_poly(rng, v);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).order_of() == a.order_of() + b.order_of());
    CHECK(P(a.to_string().c_str(), v) == a);
  }
}

TEST_CASE("partial derivatives") {
  auto v = xy();
  CHECK(partial_derivative(P("x^3+y^5", v), 0) == P("3*x^2", v));
  CHECK(partial_derivative(P("7", v), 0).is_zero());
  CHECK(partial_derivative(P("x^3*y^3", v), 1) == P("3*x^3*y^2", v));
}

TEST_CASE("order_of") {
  auto v = xy();
  CHECK(P("x^2 - x^3", v).order_of() == 2);
  CHECK(Polynomial(v).order_of() == kInfiniteOrder);
  CHECK(P("y^5 + x^6", v).order_of() == 5);
}

TEST_CASE("substitution") {
  auto v = xy();
  auto x = Polynomial::variable(v, 0), y = Polynomial::variable(v, 1);
  CHECK(substitute(P("x^2", v), {x + y, y}) == P("x^2+2*x*y+y^2", v));
  CHECK(substitute(x, {x, y}) == x);
  CHECK(substitute(P("x^2+2*x*y+y^2+y^3", v), {x - y, y}) == P("x^2+y^3", v));

  std::mt19937 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto p = random_poly(rng, v);
    std::vector<Polynomial> f{random_poly(rng, v), random_poly(rng, v)};
    std::vector<Polynomial> g{random_poly(rng, v), random_poly(rng, v)};
    CHECK(substitute(p, {x, y}) == p);
    std::vector<Polynomial> fg{substitute(f[0], g), substitute(f[1], g)};
    CHECK(substitute(substitute(p, f), g) == substitute(p, fg));
  }
}

TEST_CASE("truncation") {
  auto v = make_varset({"x"});
  CHECK(truncate(P("x + x^3", v), 2) == P("x", v));
  CHECK(truncate(P("x + x^3", v), 10) == P("x + x^3", v));
  CHECK(truncate(pow(P("1+x", v), 3), 1) == P("1+3*x", v));
  CHECK(mul_truncated(P("1+x+x^2", v), P("1-x", v), 2) == P("1", v));
}

TEST_CASE("weighted degree") {
  CHECK(weighted_degree(Monomial({3, 0}), {5, 3}) == 15);
  CHECK(weighted_degree(Monomial({0, 0}), {5, 3}) == 0);
  CHECK(weighted_degree(Monomial({1, 3}), {1, 1}) == 4);
  CHECK_THROWS_AS(weighted_degree(Monomial({1, 3}), {1}), Error);
}

TEST_CASE("monomial orders") {
  auto v = xy();
  auto deglex_yx = MonomialOrder::parse("deglex:y>x", *v);
  CHECK(deglex_yx == MonomialOrder::parse("deglex:y,x", *v));
  // Same degree: y outranks x.
  CHECK(deglex_yx.greater(Monomial({2, 4}), Monomial({3, 3})));
  CHECK(deglex_yx.greater(Monomial({0, 2}), Monomial({2, 0})));
  CHECK(deglex_yx.greater(Monomial({3, 0}), Monomial({0, 2})));

  auto lex = MonomialOrder::natural(OrderKind::Lex, 2);
  CHECK(lex.greater(Monomial({1, 0}), Monomial({0, 5})));

  auto v3 = make_varset({"x", "y", "z"});
  auto drl = MonomialOrder::natural(OrderKind::DegRevLex, 3);
  CHECK(drl.greater(Monomial({1, 1, 0}), Monomial({2, 0, 0}) ) == false);
  CHECK(drl.greater(Monomial({2, 0, 0}), Monomial({1, 1, 0})));
  CHECK(drl.greater(Monomial({0, 2, 0}), Monomial({1, 0, 1})));
  CHECK(MonomialOrder::parse("degrevlex", *v3).to_string(*v3) == "degrevlex:x>y>z");
  CHECK_THROWS_AS(MonomialOrder::parse("deglex:y>q", *v), Error);
}
