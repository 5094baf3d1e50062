#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "bcinterp/points.hpp"
#include "bcinterp/rational.hpp"
#include "bcinterp/vanish.hpp"
#include "bcinterp/weyl.hpp"

using namespace bcinterp;

TEST_CASE("parameter construction and validation") {
  const InterpParams p = InterpParams::principal(3, Rational(1, 2), Rational(1, 3), Rational(1, 5));
  CHECK(p.n() == 3);
  CHECK(p.is_principal());
  CHECK(p.s() == Rational(1, 3));
  CHECK(p.t() == Rational(1, 5));
  // τ_i = s·t^{n-i}
  CHECK(p.tau() == std::vector<Rational>{Rational(1, 75), Rational(1, 15), Rational(1, 3)});
  CHECK(p.strictly_ordered());

  const InterpParams g = InterpParams::general(Rational(1, 2), {Rational(2, 3), Rational(1, 3)});
  CHECK(!g.is_principal());
  CHECK(!g.strictly_ordered());
  CHECK_THROWS_AS(g.s(), std::logic_error);

  CHECK_THROWS_AS(InterpParams::principal(2, Rational(3, 2), Rational(1, 3), Rational(1, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(InterpParams::principal(2, Rational(1, 2), Rational(0), Rational(1, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(InterpParams::general(Rational(1, 2), {Rational(1, 3), Rational(-1, 4)}),
                  std::invalid_argument);
}

TEST_CASE("derived parameter families") {
  const InterpParams p = InterpParams::principal(3, Rational(1, 2), Rational(1, 3), Rational(1, 5));

  const InterpParams shorter = p.drop_last();
  CHECK(shorter.n() == 2);
  CHECK(shorter.is_principal());
  // Dropping the last τ keeps the prefix: τ'_i = s·t^{(n-1)-i}·t = (st)·t^{(n-1)-i}... i.e.
  // the first n-1 coordinates of τ are unchanged.
  CHECK(shorter.tau() == std::vector<Rational>{p.tau()[0], p.tau()[1]});

  const InterpParams shifted = p.q_shifted();
  CHECK(shifted.n() == 3);
  for (int i = 0; i < 3; ++i) CHECK(shifted.tau()[i] == Rational(p.q() * p.tau()[i]));

  CHECK(p.cache_key() != shorter.cache_key());
  CHECK(p.cache_key() != shifted.cache_key());
  CHECK(p == InterpParams::principal(3, Rational(1, 2), Rational(1, 3), Rational(1, 5)));
}

TEST_CASE("genericity certificate") {
  const InterpParams p = InterpParams::principal(2, Rational(1, 2), Rational(1, 3), Rational(1, 5));
  CHECK(p.genericity().ok);
  CHECK(p.genericity().violation.empty());

  // τ_1/τ_2 = 2 = q⁻¹ breaks the certificate.
  const InterpParams bad = InterpParams::general(Rational(1, 2), {Rational(1, 2), Rational(1, 4)});
  const GenericityReport r = bad.genericity();
  CHECK(!r.ok);
  CHECK(!r.violation.empty());

  // s² = q hits the τ_i² window in one variable.
  const InterpParams sq = InterpParams::general(Rational(1, 4), {Rational(1, 2)});
  CHECK(!sq.genericity().ok);

  // A tiny window can mask the violation.
  CHECK(bad.genericity(0).ok);
}

TEST_CASE("partition nodes") {
  const InterpParams p = InterpParams::principal(2, Rational(1, 2), Rational(1, 3), Rational(1, 5));
  // τ = (s·t, s) = (1/15, 1/3)
  CHECK(node_partition(Partition::zero(2), p) == Node{Rational(1, 15), Rational(1, 3)});
  CHECK(node_partition(Partition({1, 0}), p) == Node{Rational(1, 30), Rational(1, 3)});
  CHECK(node_partition(Partition({2, 1}), p) == Node{Rational(1, 60), Rational(1, 6)});

  const InterpParams one = InterpParams::principal(1, Rational(1, 2), Rational(1, 3), Rational(1, 5));
  CHECK(node_partition(Partition({3}), one) == Node{Rational(1, 24)});
}

TEST_CASE("general nodes use the sorting permutation and sign exponents") {
  const InterpParams p = InterpParams::principal(2, Rational(1, 2), Rational(1, 3), Rational(1, 5));
  const Rational tau1(1, 15), tau2(1, 3);

  // Partitions agree with the partition rule.
  for (const Partition& mu : enumerate_ball_dominant(2, 3))
    CHECK(node_general(mu.as_exponent(), p) == node_partition(mu, p));

  // α = (0,-1): rank order puts slot 2 first; ᾱ = (τ_2, q⁻¹·τ_1⁻¹).
  CHECK(node_general({0, -1}, p) == Node{tau2, Rational(Rational(2) / tau1)});

  // α = (0,1): slot 2 carries the large entry; ᾱ = (τ_2, q·τ_1).
  CHECK(node_general({0, 1}, p) == Node{tau2, Rational(Rational(1, 2) * tau1)});

  const InterpParams one = InterpParams::principal(1, Rational(1, 2), Rational(1, 3), Rational(1, 5));
  CHECK(node_general({-2}, one) == Node{Rational(12)});  // q⁻²·s⁻¹
}

TEST_CASE("node monomials and the multiplicative action") {
  const Node z{Rational(1, 2), Rational(2, 3)};
  CHECK(node_monomial(z, {0, 0}) == Rational(1));
  CHECK(node_monomial(z, {2, -1}) == Rational(3, 8));

  const SignedPermutation s1 = SignedPermutation::simple(2, 1);
  CHECK(act_node(s1, z) == Node{Rational(2, 3), Rational(1, 2)});
  const SignedPermutation s2 = SignedPermutation::simple(2, 2);
  CHECK(act_node(s2, z) == Node{Rational(1, 2), Rational(3, 2)});

  // z^{w⁻¹β} = (wz)^β.
  for (const SignedPermutation& w : enumerate_group(2))
    for (const ExponentVector& beta : positive_roots(2))
      CHECK(node_monomial(z, act(w.inverse(), beta)) == node_monomial(act_node(w, z), beta));
}

TEST_CASE("nodes of a general vector come from its minimal representative") {
  const InterpParams p = pseudo_random_draw(3, 5);
  for (const ExponentVector& alpha : enumerate_ball(3, 3)) {
    const SignedPermutation w = min_coset_rep(alpha);
    const Node base = node_partition(dominant(alpha), p);
    CHECK(node_general(alpha, p) == act_node(w, base));
  }
}

TEST_CASE("node injectivity on a ball") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const InterpParams p = pseudo_random_draw(2, seed);
    std::set<Node> seen;
    for (const ExponentVector& alpha : enumerate_ball(2, 6))
      CHECK(seen.insert(node_general(alpha, p)).second);
  }
}

TEST_CASE("no root power of a node is trivial") {
  const InterpParams p = pseudo_random_draw(2, 9);
  for (const ExponentVector& alpha : enumerate_ball(2, 4)) {
    const Node z = node_general(alpha, p);
    for (const ExponentVector& beta : positive_roots(2)) {
      CHECK(node_monomial(z, beta) != Rational(1));
      ExponentVector neg(beta.size());
      std::transform(beta.begin(), beta.end(), neg.begin(), [](int v) { return -v; });
      CHECK(node_monomial(z, neg) != Rational(1));
    }
  }
}

TEST_CASE("node action compatibility clauses") {
  const InterpParams p = pseudo_random_draw(2, 3);

  NodeActionCheck moved = node_action_check({1, 0}, 1, p);
  CHECK(moved.clause == 'a');
  CHECK(moved.pass);

  NodeActionCheck tied = node_action_check({1, 1}, 1, p);
  CHECK(tied.clause == 'b');
  CHECK(tied.pass);

  NodeActionCheck fixed_last = node_action_check({1, 0}, 2, p);
  CHECK(fixed_last.clause == 'c');
  CHECK(fixed_last.pass);

  const InterpParams p3 = pseudo_random_draw(3, 3);
  for (const ExponentVector& alpha : enumerate_ball(3, 3))
    for (int j = 1; j <= 3; ++j) {
      const NodeActionCheck chk = node_action_check(alpha, j, p3);
      CHECK(chk.pass);
    }
}

TEST_CASE("monotone window for partition nodes") {
  const InterpParams p = pseudo_random_draw(3, 21);
  REQUIRE(p.strictly_ordered());
  for (const Partition& mu : enumerate_ball_dominant(3, 4)) {
    const Node z = node_partition(mu, p);
    for (size_t i = 0; i + 1 < z.size(); ++i) CHECK(z[i] < z[i + 1]);
    CHECK(z.front() > 0);
    CHECK(z.back() < 1);
  }
}

TEST_CASE("shifted parameter families track partition nodes") {
  const InterpParams p = pseudo_random_draw(3, 4);
  for (const Partition& mu : enumerate_ball_dominant(3, 4)) {
    const Node full = node_partition(mu, p);
    if (mu.part(2) == 0) {
      const Node prefix = node_partition(mu.drop_last(), p.drop_last());
      CHECK(Node(full.begin(), full.end() - 1) == prefix);
      CHECK(full.back() == p.tau().back());
    } else {
      CHECK(node_partition(mu.lowered(), p.q_shifted()) == full);
    }
  }
}

TEST_CASE("ball enumeration") {
  CHECK(enumerate_ball(1, 1) ==
        std::vector<ExponentVector>{{0}, {-1}, {1}});
  CHECK(enumerate_ball(2, 4).size() == 41);
  CHECK(enumerate_ball(3, 3).size() == 63);

  const std::vector<ExponentVector> ball = enumerate_ball(2, 2);
  CHECK(std::is_sorted(ball.begin(), ball.end(), GradedLexLess{}));
  CHECK(ball.front() == ExponentVector{0, 0});

  const std::vector<Partition> dom = enumerate_ball_dominant(2, 2);
  REQUIRE(dom.size() == 4);
  CHECK(dom[0] == Partition({0, 0}));
  CHECK(dom[1] == Partition({1, 0}));
  CHECK(dom[2] == Partition({1, 1}));
  CHECK(dom[3] == Partition({2, 0}));

  CHECK(enumerate_ball_dominant(3, 4).size() == 11);
}
