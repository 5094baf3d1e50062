#include "bcinterp/hecke.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bcinterp/kernels.hpp"

namespace bcinterp {

namespace {

void require_params(const HeckeParams& p) {
  if (p.t <= 0 || p.s <= 0)
    throw std::invalid_argument("HeckeParams: t and s must be positive");
}

// T_j (j < n) on the single monomial c·x^α, appended to acc.  Only the
// exponent pair (k, l) at slots j-1, j changes:
//   k > l: t·(swap) + (t-1)·Σ_{i=1}^{k-l} x^{(l+i, k-i)}
//   k = l: t·(same)
//   k < l: (swap) + (1-t)·Σ_{i=1}^{l-k-1} x^{(l-i, k+i)}
void swap_generator_term(int j, const ExponentVector& alpha, const Rational& c,
                         const Rational& t, LaurentPoly& acc) {
  const int k = alpha[j - 1], l = alpha[j];
  ExponentVector e(alpha);
  if (k == l) {
    acc.add_term(e, Rational(t * c));
    return;
  }
  e[j - 1] = l;
  e[j] = k;
  if (k > l) {
    acc.add_term(e, Rational(t * c));
    const Rational spread((t - 1) * c);
    for (int i = 1; i <= k - l; ++i) {
      e[j - 1] = l + i;
      e[j] = k - i;
      acc.add_term(e, spread);
    }
  } else {
    acc.add_term(e, c);
    const Rational spread((Rational(1) - t) * c);
    for (int i = 1; i <= l - k - 1; ++i) {
      e[j - 1] = l - i;
      e[j] = k + i;
      acc.add_term(e, spread);
    }
  }
}

// T_n on c·x^α; only the last exponent k changes:
//   k > 0: -x^{-k} - 2(x^{-k+2} + x^{-k+4} + ... + x^k) + (s + 1/s)(x^{-k+1} + ... + x^{k-1})
//   k = 0: -1
//   k < 0: x^{-k} + 2(x^{k+2} + ... + x^{-k-2}) - (s + 1/s)(x^{k+1} + ... + x^{-k-1})
void flip_generator_term(const ExponentVector& alpha, const Rational& c, const Rational& s,
                         LaurentPoly& acc) {
  const int n = static_cast<int>(alpha.size());
  const int k = alpha[n - 1];
  ExponentVector e(alpha);
  if (k == 0) {
    acc.add_term(e, Rational(-c));
    return;
  }
  const Rational pair((s + Rational(1) / s) * c);
  if (k > 0) {
    e[n - 1] = -k;
    acc.add_term(e, Rational(-c));
    const Rational dbl(Rational(-2) * c);
    for (int v = -k + 2; v <= k; v += 2) {
      e[n - 1] = v;
      acc.add_term(e, dbl);
    }
    for (int v = -k + 1; v <= k - 1; v += 2) {
      e[n - 1] = v;
      acc.add_term(e, pair);
    }
  } else {
    e[n - 1] = -k;
    acc.add_term(e, c);
    const Rational dbl(Rational(2) * c);
    for (int v = k + 2; v <= -k - 2; v += 2) {
      e[n - 1] = v;
      acc.add_term(e, dbl);
    }
    for (int v = k + 1; v <= -k - 1; v += 2) {
      e[n - 1] = v;
      acc.add_term(e, Rational(-pair));
    }
  }
}

}  // namespace

LaurentPoly apply_T(int j, const LaurentPoly& f, const HeckeParams& p) {
  require_params(p);
  const int n = f.arity();
  if (j < 1 || j > n) throw std::invalid_argument("apply_T: generator index out of range");
  LaurentPoly acc(n);
  for (const auto& [alpha, c] : f.terms()) {
    if (j < n)
      swap_generator_term(j, alpha, c, p.t, acc);
    else
      flip_generator_term(alpha, c, p.s, acc);
  }
  return acc;
}

LaurentPoly apply_word(const std::vector<int>& word, const LaurentPoly& f, const HeckeParams& p) {
  LaurentPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_T(*it, out, p);
  return out;
}

Rational hecke_char(const SignedPermutation& w, const HeckeParams& p) {
  require_params(p);
  int swaps = 0, flips = 0;
  for (int i : reduced_word(w))
    (i < w.n() ? swaps : flips)++;
  Rational out = rat_pow(p.t, swaps);
  if (flips % 2) out = -out;
  return out;
}

LaurentPoly symmetrize_serial(const LaurentPoly& f, const HeckeParams& p) {
  LaurentPoly acc(f.arity());
  for (const auto& w : enumerate_group(f.arity())) acc += apply_word(reduced_word(w), f, p);
  return acc;
}

LaurentPoly symmetrize_parallel(const LaurentPoly& f, const HeckeParams& p) {
  const auto group = enumerate_group(f.arity());
  const long count = static_cast<long>(group.size());
#ifdef _OPENMP
  const int workers = kernels::thread_limit();
  std::vector<LaurentPoly> partial(workers, LaurentPoly::zero(f.arity()));
#pragma omp parallel num_threads(workers)
  {
    const int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic)
    for (long i = 0; i < count; ++i)
      partial[tid] += apply_word(reduced_word(group[i]), f, p);
  }
  LaurentPoly acc(f.arity());
  for (const auto& part : partial) acc += part;
  return acc;
#else
  (void)count;
  return symmetrize_serial(f, p);
#endif
}

LaurentPoly symmetrize(const LaurentPoly& f, const HeckeParams& p) {
  return kernels::parallel_enabled() ? symmetrize_parallel(f, p) : symmetrize_serial(f, p);
}

Rational c_coeff(const ExponentVector& root, const ExponentVector& alpha, const InterpParams& ip,
                 const HeckeParams& hp) {
  require_params(hp);
  int support = 0;
  for (int e : root)
    if (e != 0) ++support;
  if (support != 1 && support != 2)
    throw std::invalid_argument("c_coeff: not a root vector");
  const Rational kappa = support == 2 ? hp.t : hp.s;
  const Rational upsilon = support == 2 ? Rational(1) : Rational(Rational(-1) / hp.s);

  const Rational z = node_monomial(node_general(alpha, ip), root);
  const Rational z2(z * z);
  if (z2 == 1)
    throw degeneracy_error("c_coeff: root monomial squared to 1 at " + format_exponent(alpha), -1);
  return Rational((z - kappa) * (z + upsilon) / (z2 - 1));
}

ExpansionCheck check_expansion_theorem(const ExponentVector& alpha, int j, InterpCache& cache,
                                       const HeckeParams& hp) {
  const int n = cache.params().n();
  if (static_cast<int>(alpha.size()) != n)
    throw std::invalid_argument("check_expansion_theorem: arity mismatch");
  if (j < 1 || j > n) throw std::invalid_argument("check_expansion_theorem: index out of range");

  const LaurentPoly& g = cache.G(alpha);
  const LaurentPoly lhs = apply_T(j, g, hp);
  const ExponentVector salpha = act(SignedPermutation::simple(n, j), alpha);

  ExpansionCheck out;
  LaurentPoly rhs(n);
  if (salpha == alpha) {
    if (j < n) {
      out.branch = 'f';
      rhs = hp.t * g;
    } else {
      out.branch = 'z';
      rhs = -g;
    }
  } else {
    out.branch = 'c';
    ExponentVector root(n, 0);  // -β^j
    if (j < n) {
      root[j - 1] = -1;
      root[j] = 1;
    } else {
      root[n - 1] = -1;
    }
    const Rational c = c_coeff(root, alpha, cache.params(), hp);
    rhs = (c - Rational(1)) * g + c * cache.G(salpha);
  }
  out.pass = lhs == rhs;
  if (!out.pass)
    out.detail = "operator expansion mismatch at " + format_exponent(alpha) + ", generator " +
                 std::to_string(j);
  return out;
}

Rational cst_lambda(const Partition& lambda, const InterpParams& ip, const HeckeParams& hp) {
  require_params(hp);
  if (lambda.n() != ip.n()) throw std::invalid_argument("cst_lambda: arity mismatch");
  const auto decomposition = min_reps_and_stabilizer(lambda);

  Rational char_sum(0);
  for (const auto& v : decomposition.stabilizer) char_sum += hecke_char(v, hp);

  ExponentVector negated(lambda.parts());
  for (int& e : negated) e = -e;
  const SignedPermutation* w0rep = nullptr;
  for (const auto& w : decomposition.min_reps)
    if (act(w, lambda.as_exponent()) == negated) {
      w0rep = &w;
      break;
    }
  if (!w0rep) throw std::logic_error("cst_lambda: missing coset representative");

  Rational product(1);
  for (const auto& beta : inversion_set(*w0rep)) {
    ExponentVector minus(beta);
    for (int& e : minus) e = -e;
    product *= c_coeff(minus, lambda.as_exponent(), ip, hp);
  }
  return Rational(char_sum * product);
}

}  // namespace bcinterp
