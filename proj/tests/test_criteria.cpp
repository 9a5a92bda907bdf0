#include "doctest.h"

#include <numeric>
#include <random>

#include "artinlab/criteria.hpp"
#include "artinlab/liealg.hpp"

using namespace artinlab;

namespace {

Ideal ideal(const char* text, const VarSetPtr& v) { return Ideal(v, parse_polynomial_list(text, v)); }

ArtinAlgebra algebra(const Ideal& i) {
  return ArtinAlgebra::from_groebner(buchberger(i, MonomialOrder::natural(OrderKind::DegRevLex, i.nvars())));
}

ArtinAlgebra algebra(const char* text, const VarSetPtr& v) { return algebra(ideal(text, v)); }

bool der_solvable(const ArtinAlgebra& s) { return series(compute_derivations(s)).solvable; }

}  // namespace

TEST_CASE("verdict and extremality strings") {
  for (auto v : {Verdict::Solvable, Verdict::Inconclusive, Verdict::NonSolvable})
    CHECK(parse_verdict(to_string(v)) == v);
  for (auto e : {Extremality::Below, Extremality::Extremal, Extremality::Above})
    CHECK(parse_extremality(to_string(e)) == e);
  CHECK(to_string(Verdict::NonSolvable) == "non-solvable");
  CHECK_THROWS_AS(parse_verdict("maybe"), Error);
}

TEST_CASE("ideal order") {
  auto v = make_varset({"x", "y", "z"});
  CHECK(ideal_order(ideal("x^2, y^3, x*y^2", v)) == 2);
  CHECK(ideal_order(ideal("x^3, x^2*y, x^2*z, y^4, z^4", v)) == 3);
  CHECK(ideal_order(ideal("y^5, (x+y)^6, x^5 - x^3*y^3, x^4*y", v)) == 5);
  CHECK_THROWS_AS(ideal_order(ideal("x - 1, y", v)), Error);
}

TEST_CASE("Schulze inequality") {
  auto r = schulze_test(2, 2, 2);
  CHECK(r.verdict == Verdict::Solvable);
  CHECK(r.extremality == Extremality::Below);
  CHECK(schulze_test(2, 2, 3).extremal());
  CHECK(schulze_test(2, 2, 3).verdict == Verdict::Inconclusive);
  CHECK(schulze_test(2, 2, 4).extremality == Extremality::Above);

  auto xy = make_varset({"x", "y"});
  auto s = schulze_test(ideal("x^2, y^2", xy));
  CHECK(s.n == 2);
  CHECK(s.l == 2);
  CHECK(s.min_gens == 2);
  CHECK(s.verdict == Verdict::Solvable);
  // A redundant generator does not count.
  CHECK(schulze_test(ideal("x^2, y^2, x^2 + y^2, x^3", xy)).min_gens == 2);
  CHECK(schulze_test(ideal("x^2, x*y, y^2", xy)).extremal());
  CHECK_THROWS_AS(schulze_test(ideal("x - y^2, y^3", xy)), Error);
}

TEST_CASE("Schulze on an algebra eliminates linear parts") {
  auto xy = make_varset({"x", "y"});
  auto viaideal = schulze_test(ideal("y^3", make_varset({"y"})));
  auto viaalg = schulze_test(algebra("x - y^2, y^3", xy));
  CHECK(viaalg.n == viaideal.n);
  CHECK(viaalg.l == viaideal.l);
  CHECK(viaalg.min_gens == viaideal.min_gens);
  CHECK(viaalg.verdict == Verdict::Solvable);
}

TEST_CASE("narrow associated graded") {
  auto xy = make_varset({"x", "y"});
  CHECK(narrow_test(associated_graded(algebra("x^2, y^2", xy))));
  auto xyz = make_varset({"x", "y", "z"});
  // I* in degree 2 has three minimal generators, above the allowed 2.
  auto gr = associated_graded(algebra("x^2, y^2, z^2, x*y, x*z", xyz));
  CHECK_FALSE(narrow_test(gr));
  auto c = local_criteria(algebra("x^2, y^2", xy));
  CHECK(c.narrow_gr);
  CHECK(c.combined() == Verdict::Solvable);
  CHECK(c.narrow_excess.at(2) == 2);
}

TEST_CASE("trivial local algebra") {
  auto x = make_varset({"x"});
  auto c = local_criteria(algebra("x", x));
  CHECK(c.trivial);
  CHECK(c.combined() == Verdict::Solvable);
}

TEST_CASE("global Schulze") {
  auto xy = make_varset({"x", "y"});
  auto a = global_schulze(ideal("x^2*(x-1), y^2", xy));
  CHECK(a.points.size() == 2);
  CHECK(a.l == 1);
  CHECK_FALSE(a.global_inequality);
  CHECK(a.used_components);
  CHECK(a.verdict == Verdict::Solvable);

  auto x = make_varset({"x"});
  auto b = global_schulze(ideal("x^2 - x^3", x));
  CHECK(b.components.size() == 2);
  CHECK(b.verdict == Verdict::Solvable);

  // Two double points: I ⊆ m^2 everywhere and 2 < 2 + 2 - 1.
  auto c = global_schulze(ideal("x^2*(x-1)^2, y^2", xy));
  CHECK(c.l == 2);
  CHECK(c.global_inequality);
  CHECK(c.verdict == Verdict::Solvable);

  CHECK_THROWS_AS(global_schulze(ideal("x^2 - 2, y", xy)), Error);

  // On a local ideal the verdict agrees with the local test.
  for (const char* text : {"x^2, y^2", "x^2, x*y, y^2", "x^3, y^3, x^2*y^2", "x^2 + y^3, x*y^2"}) {
    CAPTURE(text);
    CHECK(global_schulze(ideal(text, xy)).verdict == schulze_test(ideal(text, xy)).verdict);
  }
}

TEST_CASE("complete intersections") {
  auto xy = make_varset({"x", "y"});
  CHECK(complete_intersection_check(ideal("x^2, y^3", xy)));
  CHECK(complete_intersection_check(ideal("x^2 + y^3, x*y", xy)));
  CHECK_FALSE(complete_intersection_check(ideal("x^2, x*y, y^2", xy)));
  CHECK_FALSE(complete_intersection_check(ideal("x^2, x*y", xy)));
  CHECK(complete_intersection_check(ideal("1 + x, y", xy)));
  CHECK_FALSE(complete_intersection_check(ideal("x*y - 1, x", xy)));
}

TEST_CASE("criteria never contradict the derived series") {
  // Random monomial ideals containing pure powers: whenever a criterion claims
  // solvability, the derived series of Der S must terminate.
  std::mt19937 rng(7);
  auto xy = make_varset({"x", "y"});
  auto xyz = make_varset({"x", "y", "z"});
  int checked = 0, solvable_claims = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const bool three = trial % 3 == 0;
    const auto& v = three ? xyz : xy;
    const std::size_t n = v->size();
    std::uniform_int_distribution<int> pw(2, three ? 3 : 5);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = pw(rng);
      gens.push_back(Polynomial::monomial(v, Monomial(e)));
    }
    std::uniform_int_distribution<int> extra(0, 2), ex(0, 3);
    for (int k = extra(rng); k > 0; --k) {
      std::vector<int> e(n, 0);
      for (auto& x : e) x = ex(rng);
      if (std::accumulate(e.begin(), e.end(), 0) >= 2) gens.push_back(Polynomial::monomial(v, Monomial(e)));
    }
    Ideal i(v, gens);
    auto s = algebra(i);
    if (s.dim() > 40 || s.dim() < 2) continue;
    std::string text;
    for (const auto& g : gens) text += g.to_string() + ", ";
    CAPTURE(text);
    auto c = local_criteria(s);
    const bool truth = der_solvable(s);
    if (c.combined() == Verdict::Solvable) {
      ++solvable_claims;
      CHECK(truth);
    }
    ++checked;
  }
  CHECK(checked >= 20);
  CHECK(solvable_claims >= 5);
}
