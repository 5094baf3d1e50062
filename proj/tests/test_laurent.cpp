#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "bcinterp/json_io.hpp"
#include "bcinterp/laurent.hpp"
#include "bcinterp/points.hpp"
#include "bcinterp/qseries.hpp"
#include "bcinterp/weyl.hpp"

using namespace bcinterp;

namespace {

LaurentPoly random_poly(int n, std::mt19937_64& eng) {
  LaurentPoly f(n);
  const int terms = 2 + static_cast<int>(eng() % 4);
  for (int k = 0; k < terms; ++k) {
    ExponentVector e(n);
    for (int& v : e) v = static_cast<int>(eng() % 7) - 3;
    f.add_term(e, Rational(static_cast<long>(1 + eng() % 5), static_cast<long>(1 + eng() % 3)));
  }
  return f;
}

std::vector<Rational> random_point(int n, std::mt19937_64& eng) {
  std::vector<Rational> z;
  for (int i = 0; i < n; ++i)
    z.push_back(Rational(static_cast<long>(1 + eng() % 9), static_cast<long>(10 + eng() % 7)));
  return z;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  LaurentPoly x(1), xinv(1);
  x.add_term({1}, Rational(1));
  xinv.add_term({-1}, Rational(1));

  LaurentPoly one_term(1), expected(1);
  one_term = (x + LaurentPoly::one(1)) * (xinv + LaurentPoly::one(1));
  expected.add_term({1}, Rational(1));
  expected.add_term({0}, Rational(2));
  expected.add_term({-1}, Rational(1));
  CHECK(one_term == expected);
  CHECK(one_term.degree() == 1);

  CHECK(x * xinv == LaurentPoly::one(1));
  CHECK((x - x).is_zero());
  CHECK(!(x - x).degree().has_value());
}

TEST_CASE("cancelling terms vanish from the support") {
  LaurentPoly f(2);
  f.add_term({1, 0}, Rational(1, 2));
  f.add_term({1, 0}, Rational(-1, 2));
  CHECK(f.is_zero());
  CHECK(f.terms().empty());
  f.add_term({0, 1}, Rational(0));
  CHECK(f.terms().empty());
}

TEST_CASE("evaluation") {
  CHECK(LaurentPoly::constant(2, Rational(7, 3)).eval({Rational(1, 2), Rational(5)}) ==
        Rational(7, 3));

  LaurentPoly f(1);
  f.add_term({1}, Rational(1));
  f.add_term({-1}, Rational(1));
  CHECK(f.eval({Rational(2)}) == Rational(5, 2));

  const LaurentPoly m = sym_monomial(Partition({1, 0}));
  CHECK(m.eval({Rational(1, 2), Rational(1, 3)}) == Rational(35, 6));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 eng(7);
  for (int round = 0; round < 25; ++round) {
    const LaurentPoly f = random_poly(2, eng);
    const LaurentPoly g = random_poly(2, eng);
    const LaurentPoly h = random_poly(2, eng);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);

    const std::vector<Rational> z = random_point(2, eng);
    CHECK((f * g).eval(z) == Rational(f.eval(z) * g.eval(z)));
    CHECK((f + g).eval(z) == Rational(f.eval(z) + g.eval(z)));
  }
}

TEST_CASE("group action on polynomials") {
  LaurentPoly f(2);
  f.add_term({2, -1}, Rational(3));

  const SignedPermutation s1 = SignedPermutation::simple(2, 1);
  LaurentPoly swapped(2);
  swapped.add_term({-1, 2}, Rational(3));
  CHECK(act_poly(s1, f) == swapped);

  const SignedPermutation s2 = SignedPermutation::simple(2, 2);
  LaurentPoly flipped(2);
  flipped.add_term({2, 1}, Rational(3));
  CHECK(act_poly(s2, f) == flipped);

  std::mt19937_64 eng(11);
  for (const SignedPermutation& w : enumerate_group(2)) {
    for (int round = 0; round < 5; ++round) {
      const LaurentPoly g = random_poly(2, eng);
      const std::vector<Rational> z = random_point(2, eng);
      // (w g)(z) = g(w⁻¹ z) for the multiplicative action on points.
      const Node back = act_node(w.inverse(), z);
      CHECK(act_poly(w, g).eval(z) == g.eval(back));
      CHECK(act_poly(w, g).degree() == g.degree());
    }
  }
}

TEST_CASE("orbit-sum monomials") {
  CHECK(sym_monomial(Partition::zero(2)) == LaurentPoly::one(2));

  const LaurentPoly m10 = sym_monomial(Partition({1, 0}));
  CHECK(m10.terms().size() == 4);
  CHECK(m10.coeff({1, 0}) == Rational(1));
  CHECK(m10.coeff({0, -1}) == Rational(1));

  const LaurentPoly m11 = sym_monomial(Partition({1, 1}));
  CHECK(m11.terms().size() == 4);
  CHECK(m11.coeff({-1, 1}) == Rational(1));

  CHECK(is_symmetric(m10));
  CHECK(is_symmetric(m11));
  CHECK(is_symmetric(sym_monomial(Partition({3, 1, 1}))));

  LaurentPoly lopsided(2);
  lopsided.add_term({1, 0}, Rational(1));
  CHECK(!is_symmetric(lopsided));
}

TEST_CASE("restriction substitutes and renumbers") {
  const Rational a(1, 3);
  const LaurentPoly m10 = sym_monomial(Partition({1, 0}));
  LaurentPoly expected(1);
  expected.add_term({1}, Rational(1));
  expected.add_term({-1}, Rational(1));
  expected.add_term({0}, Rational(a + Rational(1) / a));
  CHECK(restrict_var(m10, 2, a) == expected);

  // Restricting the first variable of x_1^2 x_2 leaves a^2 x^1.
  LaurentPoly f(2);
  f.add_term({2, 1}, Rational(1));
  LaurentPoly g(1);
  g.add_term({1}, Rational(a * a));
  CHECK(restrict_var(f, 1, a) == g);

  CHECK(restrict_var(LaurentPoly::constant(2, Rational(5)), 2, a) ==
        LaurentPoly::constant(1, Rational(5)));
}

TEST_CASE("expansion in orbit-sum basis") {
  const std::map<Partition, Rational> single = expand_in_msym(sym_monomial(Partition({2, 1})));
  CHECK(single.size() == 1);
  CHECK(single.at(Partition({2, 1})) == Rational(1));

  const std::map<Partition, Rational> c = expand_in_msym(LaurentPoly::constant(2, Rational(5)));
  CHECK(c.size() == 1);
  CHECK(c.at(Partition::zero(2)) == Rational(5));

  const Rational a(1, 2);
  const std::map<Partition, Rational> mixed =
      expand_in_msym(restrict_var(sym_monomial(Partition({1, 0})), 2, a));
  CHECK(mixed.size() == 2);
  CHECK(mixed.at(Partition({1})) == Rational(1));
  CHECK(mixed.at(Partition({0})) == Rational(5, 2));

  LaurentPoly lopsided(2);
  lopsided.add_term({1, 0}, Rational(1));
  CHECK_THROWS_AS(expand_in_msym(lopsided), std::invalid_argument);
}

TEST_CASE("restricted orbit sums stay triangular in dominance order") {
  for (int n = 2; n <= 3; ++n) {
    for (const Rational& a : {Rational(1, 2), Rational(2, 3)}) {
      for (const Partition& lam : enumerate_ball_dominant(n, 4)) {
        const std::map<Partition, Rational> expansion =
            expand_in_msym(restrict_var(sym_monomial(lam), n, a));
        // Truncated index: λ with its last part dropped (the part need not
        // be zero; dominance below is against the full λ).
        std::vector<int> head(lam.parts().begin(), lam.parts().end() - 1);
        bool saw_head = false;
        for (const auto& [mu, coef] : expansion) {
          CHECK(coef != 0);
          std::vector<int> padded = mu.parts();
          padded.push_back(0);
          CHECK(dominance_leq(Partition(padded), lam));
          if (mu.parts() == head) saw_head = true;
        }
        CHECK(saw_head);
      }
    }
  }
}

TEST_CASE("q-Pochhammer products") {
  const Rational q(1, 2);
  CHECK(q_poch(Rational(1, 3), q, 0) == Rational(1));
  CHECK(q_poch(Rational(1, 3), q, 1) == Rational(2, 3));
  // (1 - 1/3)(1 - 1/6)(1 - 1/12) = (2/3)(5/6)(11/12)
  CHECK(q_poch(Rational(1, 3), q, 3) == Rational(55, 108));

  LaurentPoly x(1);
  x.add_term({1}, Rational(1));
  const LaurentPoly p = q_poch_poly(x, q, 2);
  // (1 - x)(1 - x/2) = 1 - 3x/2 + x^2/2
  CHECK(p.coeff({0}) == Rational(1));
  CHECK(p.coeff({1}) == Rational(-3, 2));
  CHECK(p.coeff({2}) == Rational(1, 2));
}

TEST_CASE("json round trip is exact") {
  std::mt19937_64 eng(23);
  for (int round = 0; round < 10; ++round) {
    const LaurentPoly f = random_poly(3, eng);
    const nlohmann::json j = poly_to_json(f);
    CHECK(poly_from_json(j) == f);
    CHECK(nlohmann::json::parse(j.dump()) == j);
  }
  const LaurentPoly z = LaurentPoly::zero(2);
  CHECK(poly_from_json(poly_to_json(z)) == z);
}
