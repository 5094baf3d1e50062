#include "bcinterp/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "bcinterp/hecke.hpp"
#include "bcinterp/interp.hpp"
#include "bcinterp/laurent.hpp"
#include "bcinterp/linalg.hpp"
#include "bcinterp/points.hpp"
#include "bcinterp/vanish.hpp"
#include "bcinterp/weyl.hpp"

namespace bcinterp {

namespace {

// Per-check accumulator keeping the first counterexample only.
struct Tally {
  long cases = 0;
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& message) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = message;
    }
  }
  CheckReport report(std::string name) const { return {std::move(name), pass, cases, detail}; }
};

void finish(SuiteReport& rep) {
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckReport& c) { return c.pass; });
}

long group_order(int n) {
  long order = 1;
  for (int i = 1; i <= n; ++i) order *= 2L * i;
  return order;
}

ExponentVector negated(ExponentVector a) {
  for (int& e : a) e = -e;
  return a;
}

ExponentVector simple_root(int n, int i) {  // the positive root moved by s_i
  ExponentVector e(n, 0);
  e[i - 1] = 1;
  if (i < n) e[i] = -1;
  return e;
}

std::vector<ExponentVector> all_roots(int n) {
  std::vector<ExponentVector> out = positive_roots(n);
  const size_t half = out.size();
  for (size_t i = 0; i < half; ++i) out.push_back(negated(out[i]));
  return out;
}

LaurentPoly random_poly(int n, std::mt19937_64& eng) {
  LaurentPoly f(n);
  const int terms = 2 + static_cast<int>(eng() % 5);
  for (int k = 0; k < terms; ++k) {
    ExponentVector e(n);
    for (int& x : e) x = static_cast<int>(eng() % 7) - 3;
    long num = 1 + static_cast<long>(eng() % 9);
    if (eng() % 2) num = -num;
    const long den = 1 + static_cast<long>(eng() % 9);
    f.add_term(e, Rational(Integer(num), Integer(den)));
  }
  if (f.is_zero()) f.add_term(ExponentVector(n, 0), Rational(1));
  return f;
}

bool degree_leq(const LaurentPoly& f, const LaurentPoly& g) {
  const auto df = f.degree();
  const auto dg = g.degree();
  return !df || (dg && *df <= *dg);
}

// Coefficients of f in the degree-d interpolation basis of the cache, with an
// exact reconstruction check.
std::vector<Rational> expand_in_g_basis(const LaurentPoly& f, InterpCache& cache, int d) {
  const auto basis = cache.all_G(d);
  const auto index = enumerate_ball(cache.params().n(), d);
  const int count = static_cast<int>(index.size());
  Matrix m(count, count);
  std::vector<Rational> rhs(count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) m.at(i, j) = basis[j].coeff(index[i]);
    rhs[i] = f.coeff(index[i]);
  }
  const auto coeffs = solve_square(m, rhs);
  LaurentPoly rebuilt(cache.params().n());
  for (int j = 0; j < count; ++j) rebuilt += coeffs[j] * basis[j];
  if (!(rebuilt == f)) throw std::logic_error("basis expansion failed to reconstruct the input");
  return coeffs;
}

SuiteReport suite_weyl(const SuiteOptions&) {
  SuiteReport rep;
  rep.suite = "weyl";

  {  // minimal representative: correct image, brute-force minimal length
    Tally t;
    for (int n = 1; n <= 3; ++n) {
      const auto group = enumerate_group(n);
      for (const auto& alpha : enumerate_ball(n, 4)) {
        const SignedPermutation w = min_coset_rep(alpha);
        const ExponentVector plus = dominant(alpha).as_exponent();
        int best = -1;
        for (const auto& g : group)
          if (act(g, plus) == alpha) {
            const int len = length(g);
            if (best < 0 || len < best) best = len;
          }
        t.expect(act(w, plus) == alpha && length(w) == best,
                 "representative not minimal at " + format_exponent(alpha));
      }
    }
    rep.checks.push_back(t.report("minimal-representative"));
  }

  {  // one length, three measures; and the word multiplies back to w
    Tally t;
    for (int n = 1; n <= 3; ++n)
      for (const auto& w : enumerate_group(n)) {
        const auto word = reduced_word(w);
        SignedPermutation prod = SignedPermutation::identity(n);
        for (int i : word) prod = prod * SignedPermutation::simple(n, i);
        t.expect(static_cast<int>(word.size()) == length(w) &&
                     static_cast<int>(inversion_set(w).size()) == length(w) && prod == w,
                 "length bookkeeping failed in rank " + std::to_string(n));
      }
    rep.checks.push_back(t.report("length-word-inversions"));
  }

  {  // orbit times stabilizer covers the group, once each, lengths adding
    Tally t;
    for (int n = 1; n <= 3; ++n) {
      const long order = group_order(n);
      for (const auto& lambda : enumerate_ball_dominant(n, 4)) {
        const auto orb = orbit(lambda);
        const auto dec = min_reps_and_stabilizer(lambda);
        bool ok = static_cast<long>(orb.size() * dec.stabilizer.size()) == order &&
                  dec.min_reps.size() == orb.size();
        std::set<SignedPermutation> seen;
        for (const auto& u : dec.min_reps)
          for (const auto& v : dec.stabilizer) {
            ok = ok && length(u * v) == length(u) + length(v);
            seen.insert(u * v);
          }
        t.expect(ok && static_cast<long>(seen.size()) == order,
                 "coset factorization failed at " + format_exponent(lambda.as_exponent()));
      }
    }
    rep.checks.push_back(t.report("orbit-stabilizer-factorization"));
  }

  {  // a reduced word rebuilds the inversion set root by root
    Tally t;
    for (int n = 1; n <= 3; ++n)
      for (const auto& w : enumerate_group(n)) {
        const auto word = reduced_word(w);
        const int r = static_cast<int>(word.size());
        std::set<ExponentVector> rebuilt;
        for (int j = 0; j < r; ++j) {
          ExponentVector root = simple_root(n, word[j]);
          for (int k = j + 1; k < r; ++k)
            root = act(SignedPermutation::simple(n, word[k]), root);
          rebuilt.insert(root);
        }
        const auto inv = inversion_set(w);
        const std::set<ExponentVector> expected(inv.begin(), inv.end());
        t.expect(static_cast<int>(rebuilt.size()) == r && rebuilt == expected,
                 "word did not rebuild the inversion set in rank " + std::to_string(n));
      }
    rep.checks.push_back(t.report("word-rebuilds-inversions"));
  }

  finish(rep);
  return rep;
}

SuiteReport suite_nodes(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "nodes";

  {  // pairwise distinct nodes over the degree-6 ball, three draws
    Tally t;
    const auto ball = enumerate_ball(2, 6);
    for (unsigned k = 0; k < 3; ++k) {
      const InterpParams p = pseudo_random_draw(2, opt.seed + k);
      std::vector<Node> nodes;
      nodes.reserve(ball.size());
      for (const auto& alpha : ball) nodes.push_back(node_general(alpha, p));
      std::sort(nodes.begin(), nodes.end());
      const bool distinct = std::adjacent_find(nodes.begin(), nodes.end()) == nodes.end();
      t.expect(distinct, "repeated node under draw " + std::to_string(k + 1));
    }
    rep.checks.push_back(t.report("node-injectivity"));
  }

  const InterpParams p2 = pseudo_random_draw(2, opt.seed);
  const InterpParams p3 = pseudo_random_draw(3, opt.seed);

  {  // general node = minimal representative acting on the dominant node
    Tally t;
    for (const auto& alpha : enumerate_ball(3, 3)) {
      const Node lhs = node_general(alpha, p3);
      const Node rhs = act_node(min_coset_rep(alpha), node_partition(dominant(alpha), p3));
      t.expect(lhs == rhs, "action mismatch at " + format_exponent(alpha));
    }
    rep.checks.push_back(t.report("node-via-action"));
  }

  {  // no root power of a node equals one
    Tally t;
    const auto roots = all_roots(2);
    for (const auto& alpha : enumerate_ball(2, 4)) {
      const Node z = node_general(alpha, p2);
      for (const auto& root : roots)
        t.expect(node_monomial(z, root) != 1,
                 "root power hit 1 at " + format_exponent(alpha) + " root " + format_exponent(root));
    }
    rep.checks.push_back(t.report("root-power-not-one"));
  }

  {  // drop a trailing zero part / lower all parts against shifted parameters
    Tally t;
    for (const auto& mu : enumerate_ball_dominant(3, 4)) {
      const Node full = node_partition(mu, p3);
      bool ok = false;
      if (mu.part(2) == 0) {
        const Node prefix = node_partition(mu.drop_last(), p3.drop_last());
        ok = full[0] == prefix[0] && full[1] == prefix[1] && full[2] == p3.tau()[2];
      } else {
        ok = full == node_partition(mu.lowered(), p3.q_shifted());
      }
      t.expect(ok, "node shift failed at " + format_exponent(mu.as_exponent()));
    }
    rep.checks.push_back(t.report("node-shifts"));
  }

  {  // node coordinates strictly increase inside (0,1)
    Tally t;
    t.expect(p3.strictly_ordered(), "principal draw not strictly ordered");
    for (const auto& mu : enumerate_ball_dominant(3, 4)) {
      const Node z = node_partition(mu, p3);
      t.expect(0 < z[0] && z[0] < z[1] && z[1] < z[2] && z[2] < 1,
               "coordinates not increasing at " + format_exponent(mu.as_exponent()));
    }
    rep.checks.push_back(t.report("monotone-section"));
  }

  {  // clause-by-clause compatibility of nodes with the generators
    Tally t;
    for (const auto& alpha : enumerate_ball(2, 4))
      for (int j = 1; j <= 2; ++j) {
        const auto r = node_action_check(alpha, j, p2);
        t.expect(r.pass, r.detail);
      }
    for (const auto& alpha : enumerate_ball(3, 3))
      for (int j = 1; j <= 3; ++j) {
        const auto r = node_action_check(alpha, j, p3);
        t.expect(r.pass, r.detail);
      }
    rep.checks.push_back(t.report("action-clauses"));
  }

  finish(rep);
  return rep;
}

SuiteReport suite_interp(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "interp";

  {  // evaluation matrices are nonsingular across three draws
    Tally t;
    for (unsigned k = 0; k < 3; ++k) {
      try {
        InterpCache c2(pseudo_random_draw(2, opt.seed + k));
        for (int d = 0; d <= 4; ++d) {
          c2.g_system(d);
          c2.r_system(d);
        }
        InterpCache c3(pseudo_random_draw(3, opt.seed + k));
        for (int d = 0; d <= 3; ++d) {
          c3.g_system(d);
          c3.r_system(d);
        }
        t.expect(true, "");
      } catch (const degeneracy_error& e) {
        t.expect(false, std::string("draw ") + std::to_string(k + 1) + ": " + e.what());
      }
    }
    rep.checks.push_back(t.report("unisolvence"));
  }

  InterpCache cache2(pseudo_random_draw(2, opt.seed));
  InterpCache cache3(pseudo_random_draw(3, opt.seed));

  {  // full delta table of every nonsymmetric interpolant over its own ball
    Tally t;
    for (const auto& alpha : enumerate_ball(2, 4)) {
      const LaurentPoly& g = cache2.G(alpha);
      const auto& sys = cache2.g_system(weight(alpha));
      for (size_t i = 0; i < sys.index.size(); ++i) {
        const Rational expected(sys.index[i] == alpha ? 1 : 0);
        t.expect(g.eval(sys.nodes[i]) == expected,
                 "delta table broken at " + format_exponent(alpha) + " node " +
                     format_exponent(sys.index[i]));
      }
    }
    rep.checks.push_back(t.report("kronecker-nonsymmetric"));
  }

  {  // same for the symmetric interpolants at partition nodes
    Tally t;
    auto table = [&t](InterpCache& cache, int dmax) {
      for (const auto& lambda : enumerate_ball_dominant(cache.params().n(), dmax)) {
        const LaurentPoly& r = cache.R(lambda);
        const auto& sys = cache.r_system(lambda.weight());
        for (size_t i = 0; i < sys.pindex.size(); ++i) {
          const Rational expected(sys.pindex[i] == lambda ? 1 : 0);
          t.expect(r.eval(sys.nodes[i]) == expected,
                   "delta table broken at " + format_exponent(lambda.as_exponent()) + " node " +
                       format_exponent(sys.pindex[i].as_exponent()));
        }
      }
    };
    table(cache2, 4);
    table(cache3, 3);
    rep.checks.push_back(t.report("kronecker-symmetric"));
  }

  {  // exact degrees, nonzero top coefficients, symmetry of the R family
    Tally t;
    for (const auto& alpha : enumerate_ball(2, 4)) {
      const LaurentPoly& g = cache2.G(alpha);
      t.expect(g.degree() && *g.degree() == weight(alpha) && leading_coeff_G(g, alpha) != 0,
               "degree or top coefficient wrong at " + format_exponent(alpha));
    }
    auto rfamily = [&t](InterpCache& cache, int dmax) {
      for (const auto& lambda : enumerate_ball_dominant(cache.params().n(), dmax)) {
        const LaurentPoly& r = cache.R(lambda);
        t.expect(r.degree() && *r.degree() == lambda.weight() && is_symmetric(r) &&
                     leading_coeff_R(r, lambda) != 0,
                 "degree, symmetry or top coefficient wrong at " +
                     format_exponent(lambda.as_exponent()));
      }
    };
    rfamily(cache2, 4);
    rfamily(cache3, 3);
    rep.checks.push_back(t.report("degree-and-leading"));
  }

  {  // the degree-d interpolants span: their coefficient matrix is nonsingular
    Tally t;
    auto span = [&t](InterpCache& cache, int d) {
      const auto basis = cache.all_G(d);
      const auto index = enumerate_ball(cache.params().n(), d);
      const int count = static_cast<int>(index.size());
      Matrix m(count, count);
      for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) m.at(i, j) = basis[j].coeff(index[i]);
      try {
        FactoredMatrix::factor(std::move(m));
        t.expect(true, "");
      } catch (const degeneracy_error& e) {
        t.expect(false, std::string("coefficient matrix singular: ") + e.what());
      }
    };
    span(cache2, 4);
    span(cache3, 3);
    rep.checks.push_back(t.report("basis-span"));
  }

  {  // one-variable solves match the closed product formulas, five draws
    Tally t;
    for (unsigned k = 0; k < 5; ++k) {
      const InterpParams p1 = pseudo_random_draw(1, opt.seed + k);
      InterpCache cache1(p1);
      const Rational& q = p1.q();
      const Rational& s = p1.tau()[0];
      for (int m = -6; m <= 6; ++m)
        t.expect(cache1.G(ExponentVector{m}) == closed_G1(m, q, s),
                 "one-variable mismatch at index " + std::to_string(m));
      for (int m = 0; m <= 6; ++m)
        t.expect(cache1.R(Partition({m})) == closed_R1(m, q, s),
                 "one-variable symmetric mismatch at index " + std::to_string(m));
    }
    rep.checks.push_back(t.report("one-variable-closed-forms"));
  }

  {  // symmetric interpolants take one value on each orbit of nodes
    Tally t;
    for (const auto& lambda : enumerate_ball_dominant(2, 4)) {
      const LaurentPoly& r = cache2.R(lambda);
      for (const auto& alpha : enumerate_ball(2, 4)) {
        const Rational a = r.eval(node_general(alpha, cache2.params()));
        const Rational b = r.eval(node_partition(dominant(alpha), cache2.params()));
        t.expect(a == b, "orbit value differs at " + format_exponent(lambda.as_exponent()) +
                             " node " + format_exponent(alpha));
      }
    }
    rep.checks.push_back(t.report("symmetric-node-invariance"));
  }

  {  // symmetric vanishing at partition nodes that do not contain the index
    Tally t;
    for (const auto& lambda : enumerate_ball_dominant(2, 3)) {
      const LaurentPoly& r = cache2.R(lambda);
      for (const auto& mu : enumerate_ball_dominant(2, 6)) {
        if (contained_in(lambda, mu)) continue;
        t.expect(r.eval(node_partition(mu, cache2.params())) == 0,
                 "nonzero at non-containing node: " + format_exponent(lambda.as_exponent()) +
                     " at " + format_exponent(mu.as_exponent()));
      }
    }
    rep.checks.push_back(t.report("symmetric-extra-vanishing"));
  }

  {  // dropping a zero last part via x_n = τ_n
    Tally t;
    for (const auto& lambda : enumerate_ball_dominant(3, 4)) {
      if (lambda.part(2) != 0) continue;
      const auto r = check_restriction(lambda, cache3.params());
      t.expect(r.pass, r.detail);
    }
    rep.checks.push_back(t.report("restriction"));
  }

  {  // lowering all parts against the q-shifted parameters
    Tally t;
    for (const auto& lambda : enumerate_ball_dominant(2, 4)) {
      if (lambda.part(1) <= 0) continue;
      const auto r = check_shift(lambda, cache2.params());
      t.expect(r.pass, r.detail);
    }
    rep.checks.push_back(t.report("shift"));
  }

  {  // equal node parameters: interpolants factor through one-variable ones
    Tally t;
    const Rational q = cache2.params().q();
    const Rational s = cache2.params().s();
    try {
      InterpCache pc(InterpParams::general(q, {s, s}));
      for (const auto& alpha : enumerate_ball(2, 3))
        t.expect(pc.G(alpha) == product_G(alpha, q, s),
                 "product form mismatch at " + format_exponent(alpha));
      for (const auto& lambda : enumerate_ball_dominant(2, 3))
        t.expect(pc.R(lambda) == product_R(lambda, q, s),
                 "symmetric product form mismatch at " + format_exponent(lambda.as_exponent()));
    } catch (const degeneracy_error& e) {
      t.expect(false, std::string("equal-parameter solve degenerated: ") + e.what());
    }
    rep.checks.push_back(t.report("equal-parameter-products"));
  }

  finish(rep);
  return rep;
}

SuiteReport suite_hecke(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "hecke";

  {  // operator relations on every monomial of the degree-3 balls, three draws
    Tally t;
    for (unsigned k = 0; k < 3; ++k)
      for (int n = 2; n <= 3; ++n) {
        const InterpParams p = pseudo_random_draw(n, opt.seed + k);
        const HeckeParams hp{p.t(), p.s()};
        for (const auto& alpha : enumerate_ball(n, 3)) {
          const LaurentPoly f = LaurentPoly::monomial(n, alpha, Rational(1));
          for (int j = 1; j <= n; ++j) {
            const LaurentPoly tf = apply_T(j, f, hp);
            const LaurentPoly ttf = apply_T(j, tf, hp);
            const LaurentPoly expected =
                j < n ? Rational(hp.t - 1) * tf + hp.t * f : Rational(-2) * tf - f;
            t.expect(ttf == expected, "quadratic relation failed at " + format_exponent(alpha) +
                                          " generator " + std::to_string(j));
          }
          t.expect(apply_word({n - 1, n, n - 1, n}, f, hp) ==
                       apply_word({n, n - 1, n, n - 1}, f, hp),
                   "length-four relation failed at " + format_exponent(alpha));
          if (n == 3) {
            t.expect(apply_word({1, 2, 1}, f, hp) == apply_word({2, 1, 2}, f, hp),
                     "braid relation failed at " + format_exponent(alpha));
            t.expect(apply_word({1, 3}, f, hp) == apply_word({3, 1}, f, hp),
                     "commutation failed at " + format_exponent(alpha));
          }
        }
      }
    rep.checks.push_back(t.report("defining-relations"));
  }

  const InterpParams p2 = pseudo_random_draw(2, opt.seed);
  const InterpParams p3 = pseudo_random_draw(3, opt.seed);
  const HeckeParams hp2{p2.t(), p2.s()};
  const HeckeParams hp3{p3.t(), p3.s()};
  std::mt19937_64 eng(opt.seed);

  {  // the degree filtration is preserved, 200 random applications
    Tally t;
    for (int i = 0; i < 200; ++i) {
      const int n = 2 + i % 2;
      const HeckeParams& hp = n == 2 ? hp2 : hp3;
      const LaurentPoly f = random_poly(n, eng);
      const int j = 1 + static_cast<int>(eng() % n);
      t.expect(degree_leq(apply_T(j, f, hp), f), "degree grew under generator " +
                                                     std::to_string(j) + " in rank " +
                                                     std::to_string(n));
    }
    rep.checks.push_back(t.report("degree-filtration"));
  }

  {  // symmetrizer output is invariant and absorbs every generator
    Tally t;
    for (int i = 0; i < 20; ++i) {
      const LaurentPoly f = random_poly(2, eng);
      const LaurentPoly sym = symmetrize(f, hp2);
      t.expect(is_symmetric(sym) && apply_T(1, sym, hp2) == hp2.t * sym &&
                   apply_T(2, sym, hp2) == -sym,
               "symmetrizer output not absorbing at sample " + std::to_string(i + 1));
    }
    rep.checks.push_back(t.report("symmetrizer-absorption"));
  }

  {  // all reduced words of one group element act identically
    Tally t;
    for (const auto& w : enumerate_group(2)) {
      const int r = length(w);
      std::vector<std::vector<int>> words;
      // enumerate all length-r generator sequences multiplying to w
      const long total = 1L << r;  // 2 generators
      for (long mask = 0; mask < total; ++mask) {
        std::vector<int> word(r);
        for (int pos = 0; pos < r; ++pos) word[pos] = 1 + static_cast<int>((mask >> pos) & 1);
        SignedPermutation prod = SignedPermutation::identity(2);
        for (int i : word) prod = prod * SignedPermutation::simple(2, i);
        if (prod == w) words.push_back(std::move(word));
      }
      for (int i = 0; i < 3; ++i) {
        const LaurentPoly f = random_poly(2, eng);
        const LaurentPoly reference = apply_word(words.front(), f, hp2);
        for (const auto& word : words)
          t.expect(apply_word(word, f, hp2) == reference,
                   "reduced words disagree on an element of length " + std::to_string(r));
      }
    }
    rep.checks.push_back(t.report("word-invariance"));
  }

  InterpCache cache(p2);

  {  // action of each generator on an interpolant, all three branches
    Tally t;
    for (const auto& alpha : enumerate_ball(2, 4))
      for (int j = 1; j <= 2; ++j) {
        const auto r = check_expansion_theorem(alpha, j, cache, hp2);
        t.expect(r.pass, r.detail);
      }
    rep.checks.push_back(t.report("operator-on-interpolants"));
  }

  {  // c-coefficients transform along the simple reflections
    Tally t;
    const auto roots = all_roots(2);
    for (const auto& alpha : enumerate_ball(2, 3))
      for (int j = 1; j <= 2; ++j) {
        const SignedPermutation sj = SignedPermutation::simple(2, j);
        const ExponentVector salpha = act(sj, alpha);
        if (salpha == alpha) continue;
        for (const auto& root : roots)
          t.expect(c_coeff(act(sj, root), salpha, p2, hp2) == c_coeff(root, alpha, p2, hp2),
                   "coefficient not invariant at " + format_exponent(alpha) + " root " +
                       format_exponent(root));
      }
    rep.checks.push_back(t.report("c-invariance"));
  }

  {  // symmetrized interpolants are scalar multiples of the symmetric family
    Tally t;
    for (const auto& alpha : enumerate_ball(2, 3)) {
      const LaurentPoly sym = symmetrize(cache.G(alpha), hp2);
      const Partition lambda = dominant(alpha);
      const Rational scalar = sym.eval(node_partition(lambda, p2));
      t.expect(sym == scalar * cache.R(lambda),
               "not a scalar multiple at " + format_exponent(alpha));
    }
    rep.checks.push_back(t.report("symmetrize-to-scalar"));
  }

  {  // closed formula for that scalar on dominant indices
    Tally t;
    for (const auto& lambda : enumerate_ball_dominant(2, 3)) {
      const Rational cst = cst_lambda(lambda, p2, hp2);
      const LaurentPoly sym = symmetrize(cache.G(lambda.as_exponent()), hp2);
      t.expect(sym == cst * cache.R(lambda),
               "scalar formula wrong at " + format_exponent(lambda.as_exponent()));
    }
    rep.checks.push_back(t.report("scalar-closed-formula"));
  }

  {  // the word driving λ to -λ contributes the product of c-coefficients
    Tally t;
    for (const auto& lambda : enumerate_ball_dominant(2, 3)) {
      const auto dec = min_reps_and_stabilizer(lambda);
      const ExponentVector low = negated(lambda.parts());
      const SignedPermutation* w0rep = nullptr;
      for (const auto& w : dec.min_reps)
        if (act(w, lambda.as_exponent()) == low) {
          w0rep = &w;
          break;
        }
      if (!w0rep) {
        t.expect(false, "missing representative at " + format_exponent(lambda.as_exponent()));
        continue;
      }
      const LaurentPoly h =
          apply_word(reduced_word(*w0rep), cache.G(lambda.as_exponent()), hp2);
      const int d = lambda.weight();
      const auto coeffs = expand_in_g_basis(h, cache, d);
      const auto index = enumerate_ball(2, d);
      const auto orb = orbit(lambda);
      const std::set<ExponentVector> members(orb.begin(), orb.end());
      Rational expected(1);
      for (const auto& beta : inversion_set(*w0rep))
        expected *= c_coeff(negated(beta), lambda.as_exponent(), p2, hp2);
      bool ok = true;
      for (size_t i = 0; i < index.size(); ++i)
        if (coeffs[i] != 0 && !members.count(index[i])) ok = false;
      const auto lowpos = std::lower_bound(index.begin(), index.end(), low, GradedLexLess{});
      ok = ok && lowpos != index.end() && *lowpos == low &&
           coeffs[static_cast<size_t>(lowpos - index.begin())] == expected;
      t.expect(ok, "lowering coefficient wrong at " + format_exponent(lambda.as_exponent()));
    }
    rep.checks.push_back(t.report("lowering-word-coefficient"));
  }

  finish(rep);
  return rep;
}

SuiteReport suite_symexp(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "symexp";
  Tally t;
  InterpCache cache(pseudo_random_draw(opt.n, opt.seed));
  for (const auto& lambda : enumerate_ball_dominant(opt.n, opt.dmax)) {
    const auto r = check_sym_expansion(lambda, cache);
    t.expect(r.pass, r.detail);
  }
  rep.checks.push_back(t.report("orbit-sum-expansion"));
  finish(rep);
  return rep;
}

SuiteReport suite_vanishing_symmetry(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "vanishing-symmetry";
  for (const ExponentVector& alpha :
       {ExponentVector{3, 1}, ExponentVector{1, 3}, ExponentVector{2, 0}}) {
    Tally t;
    const auto verdict = check_zero_symmetry(alpha, opt.radius, opt.seeds);
    std::string detail;
    if (!verdict.pass) {
      detail = "mirror mismatch at";
      for (const auto& beta : verdict.mismatched) detail += " " + format_exponent(beta);
    }
    t.expect(verdict.pass, detail);
    rep.checks.push_back(t.report("mirror-" + format_exponent(alpha)));
  }
  finish(rep);
  return rep;
}

SuiteReport suite_knop_remark(const SuiteOptions&) {
  SuiteReport rep;
  rep.suite = "knop-remark";
  const ExponentVector alpha{0, 4, -2, -1, 0, -2, 1, 4, 1};
  const std::vector<int> signed_sort = min_coset_rep(alpha).one_based_perm();
  ExponentVector magnitudes(alpha);
  for (int& e : magnitudes) e = e < 0 ? -e : e;
  const std::vector<int> plain_sort = min_perm_nonneg(magnitudes);

  auto render = [](const std::vector<int>& perm) {
    std::string out;
    for (size_t i = 0; i < perm.size(); ++i) out += (i ? "," : "") + std::to_string(perm[i]);
    return out;
  };

  {
    Tally t;
    t.expect(signed_sort == std::vector<int>({2, 8, 6, 3, 7, 9, 4, 1, 5}),
             "signed sort produced " + render(signed_sort));
    rep.checks.push_back(t.report("signed-sort-permutation"));
  }
  {
    Tally t;
    t.expect(plain_sort == std::vector<int>({2, 8, 3, 6, 4, 7, 9, 1, 5}),
             "plain sort produced " + render(plain_sort));
    rep.checks.push_back(t.report("plain-sort-permutation"));
  }
  {
    Tally t;
    t.expect(signed_sort != plain_sort, "the two sort rules coincide on the sample vector");
    rep.checks.push_back(t.report("permutations-differ"));
  }
  {  // on entrywise-nonnegative vectors both sort rules agree
    Tally t;
    for (int n = 2; n <= 3; ++n)
      for (const auto& a : enumerate_ball(n, 3)) {
        if (std::any_of(a.begin(), a.end(), [](int e) { return e < 0; })) continue;
        t.expect(min_coset_rep(a).one_based_perm() == min_perm_nonneg(a),
                 "sort rules disagree on nonnegative " + format_exponent(a));
      }
    rep.checks.push_back(t.report("agreement-on-nonnegative"));
  }
  finish(rep);
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "weyl", "nodes", "interp", "hecke", "symexp", "vanishing-symmetry", "knop-remark"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (suite == "weyl") return suite_weyl(opt);
  if (suite == "nodes") return suite_nodes(opt);
  if (suite == "interp") return suite_interp(opt);
  if (suite == "hecke") return suite_hecke(opt);
  if (suite == "symexp") return suite_symexp(opt);
  if (suite == "vanishing-symmetry") return suite_vanishing_symmetry(opt);
  if (suite == "knop-remark") return suite_knop_remark(opt);
  throw std::invalid_argument("unknown verification suite: " + suite);
}

nlohmann::json report_to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"cases", c.cases},
                      {"detail", c.detail}});
  return {{"suite", report.suite}, {"pass", report.pass}, {"checks", checks}};
}

}  // namespace bcinterp
