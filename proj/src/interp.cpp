#include "bcinterp/interp.hpp"

#include <algorithm>
#include <stdexcept>

#include "bcinterp/qseries.hpp"

namespace bcinterp {

namespace {

void require_param(const Rational& v, const char* what) {
  if (v <= 0 || v >= 1)
    throw std::invalid_argument(std::string("closed form: ") + what + " must lie in (0,1)");
}

LaurentPoly x_monomial(int e) {  // x^e in one variable
  return LaurentPoly::monomial(1, ExponentVector{e}, Rational(1));
}

Rational checked_denominator(const Rational& d, const char* what) {
  if (d == 0)
    throw degeneracy_error(std::string("closed form: denominator ") + what + " vanished", -1);
  return d;
}

// Embed a one-variable polynomial as a polynomial in x_slot of n variables.
LaurentPoly promote(const LaurentPoly& f, int n, int slot) {
  LaurentPoly out(n);
  for (const auto& [exp, c] : f.terms()) {
    ExponentVector e(n, 0);
    e[slot] = exp[0];
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

LaurentPoly closed_G1(int m, const Rational& q, const Rational& s) {
  require_param(q, "q");
  require_param(s, "s");
  const Rational s2(s * s);
  if (m >= 0) {
    LaurentPoly num = q_poch_poly(promote(x_monomial(1), 1, 0) * Rational(q * s), q, m) *
                      q_poch_poly(promote(x_monomial(-1), 1, 0) * s, q, m);
    const Rational den = checked_denominator(
        Rational(q_poch(Rational(rat_pow(q, 1 + m) * s2), q, m) * q_poch(rat_pow(q, -m), q, m)),
        "(q^{1+m} s^2; q)_m (q^{-m}; q)_m");
    return num * Rational(1 / den);
  }
  const int k = -m;
  LaurentPoly num = x_monomial(1) * Rational(rat_pow(q, k) * s);
  num *= q_poch_poly(x_monomial(1) * Rational(q * s), q, k - 1);
  num *= q_poch_poly(x_monomial(-1) * s, q, k + 1);
  const Rational den = checked_denominator(
      Rational(q_poch(Rational(rat_pow(q, k) * s2), q, k + 1) * q_poch(rat_pow(q, 1 - k), q, k - 1)),
      "(q^k s^2; q)_{k+1} (q^{1-k}; q)_{k-1}");
  return num * Rational(1 / den);
}

LaurentPoly closed_R1(int m, const Rational& q, const Rational& s) {
  if (m < 0) throw std::invalid_argument("closed_R1: negative index");
  require_param(q, "q");
  require_param(s, "s");
  LaurentPoly num = q_poch_poly(x_monomial(1) * s, q, m) * q_poch_poly(x_monomial(-1) * s, q, m);
  const Rational den = checked_denominator(
      Rational(q_poch(Rational(rat_pow(q, m) * s * s), q, m) * q_poch(rat_pow(q, -m), q, m)),
      "(q^m s^2; q)_m (q^{-m}; q)_m");
  return num * Rational(1 / den);
}

LaurentPoly product_G(const ExponentVector& alpha, const Rational& q, const Rational& s) {
  const int n = static_cast<int>(alpha.size());
  if (n == 0) throw std::invalid_argument("product_G: empty index");
  LaurentPoly out = LaurentPoly::one(n);
  for (int i = 0; i < n; ++i) out *= promote(closed_G1(alpha[i], q, s), n, i);
  return out;
}

LaurentPoly product_R(const Partition& lambda, const Rational& q, const Rational& s) {
  const int n = lambda.n();
  std::vector<int> arrangement = lambda.parts();
  std::sort(arrangement.begin(), arrangement.end());
  LaurentPoly out(n);
  do {
    LaurentPoly term = LaurentPoly::one(n);
    for (int i = 0; i < n; ++i) term *= promote(closed_R1(arrangement[i], q, s), n, i);
    out += term;
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

InterpCache::InterpCache(InterpParams p) : params_(std::move(p)) {}

const InterpCache::System& InterpCache::g_system(int d) {
  auto it = gsys_.find(d);
  if (it != gsys_.end()) return it->second;

  std::vector<ExponentVector> index = enumerate_ball(params_.n(), d);
  std::vector<Node> nodes;
  nodes.reserve(index.size());
  std::vector<LaurentPoly> basis;
  basis.reserve(index.size());
  for (const auto& beta : index) {
    nodes.push_back(node_general(beta, params_));
    basis.push_back(LaurentPoly::monomial(params_.n(), beta, Rational(1)));
  }
  Matrix m = kernels::assemble_matrix(basis, nodes);
  FactoredMatrix f = FactoredMatrix::factor(m);
  auto [pos, fresh] = gsys_.emplace(
      d, System{std::move(index), {}, std::move(nodes), std::move(m), std::move(f)});
  (void)fresh;
  return pos->second;
}

const InterpCache::System& InterpCache::r_system(int d) {
  auto it = rsys_.find(d);
  if (it != rsys_.end()) return it->second;

  std::vector<Partition> pindex = enumerate_ball_dominant(params_.n(), d);
  std::vector<Node> nodes;
  nodes.reserve(pindex.size());
  std::vector<LaurentPoly> basis;
  basis.reserve(pindex.size());
  for (const auto& mu : pindex) {
    nodes.push_back(node_partition(mu, params_));
    basis.push_back(sym_monomial(mu));
  }
  Matrix m = kernels::assemble_matrix(basis, nodes);
  FactoredMatrix f = FactoredMatrix::factor(m);
  auto [pos, fresh] = rsys_.emplace(
      d, System{{}, std::move(pindex), std::move(nodes), std::move(m), std::move(f)});
  (void)fresh;
  return pos->second;
}

void InterpCache::verify_interpolation(const System& sys, const std::vector<Rational>& coeffs,
                                       size_t pos) const {
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Rational acc(0);
    for (size_t j = 0; j < coeffs.size(); ++j)
      acc += sys.matrix.at(static_cast<int>(i), static_cast<int>(j)) * coeffs[j];
    if (acc != Rational(i == pos ? 1 : 0))
      throw std::logic_error("interpolation conditions violated after solve");
  }
}

LaurentPoly InterpCache::solve_g(const System& sys, size_t pos) const {
  std::vector<Rational> rhs(sys.index.size(), Rational(0));
  rhs[pos] = 1;
  const std::vector<Rational> coeffs = sys.factored.solve(rhs);
  verify_interpolation(sys, coeffs, pos);
  LaurentPoly out(params_.n());
  for (size_t j = 0; j < coeffs.size(); ++j) out.add_term(sys.index[j], coeffs[j]);
  return out;
}

const LaurentPoly& InterpCache::G(const ExponentVector& alpha) {
  if (static_cast<int>(alpha.size()) != params_.n())
    throw std::invalid_argument("InterpCache::G: arity mismatch");
  auto memo = gmemo_.find(alpha);
  if (memo != gmemo_.end()) return memo->second;

  const System& sys = g_system(weight(alpha));
  const auto it = std::lower_bound(sys.index.begin(), sys.index.end(), alpha, GradedLexLess{});
  const size_t pos = static_cast<size_t>(it - sys.index.begin());
  return gmemo_.emplace(alpha, solve_g(sys, pos)).first->second;
}

const LaurentPoly& InterpCache::R(const Partition& lambda) {
  if (lambda.n() != params_.n()) throw std::invalid_argument("InterpCache::R: arity mismatch");
  auto memo = rmemo_.find(lambda);
  if (memo != rmemo_.end()) return memo->second;

  const System& sys = r_system(lambda.weight());
  const auto it = std::lower_bound(sys.pindex.begin(), sys.pindex.end(), lambda);
  const size_t pos = static_cast<size_t>(it - sys.pindex.begin());
  std::vector<Rational> rhs(sys.pindex.size(), Rational(0));
  rhs[pos] = 1;
  const std::vector<Rational> coeffs = sys.factored.solve(rhs);
  verify_interpolation(sys, coeffs, pos);
  LaurentPoly out(params_.n());
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    out += coeffs[j] * sym_monomial(sys.pindex[j]);
  }
  return rmemo_.emplace(lambda, std::move(out)).first->second;
}

std::vector<LaurentPoly> InterpCache::all_G(int d) {
  // Indices of weight exactly dd share the degree-dd factorization; indices of
  // lower weight belong to their own smaller system (their values at the
  // extra nodes of the bigger ball are not pinned), so batch one weight shell
  // at a time.
  for (int dd = 0; dd <= d; ++dd) {
    const System& sys = g_system(dd);
    const size_t count = sys.index.size();
    std::vector<std::vector<Rational>> rhs;
    std::vector<size_t> positions;
    for (size_t i = 0; i < count; ++i) {
      if (weight(sys.index[i]) != dd || gmemo_.count(sys.index[i])) continue;
      std::vector<Rational> delta(count, Rational(0));
      delta[i] = 1;
      rhs.push_back(std::move(delta));
      positions.push_back(i);
    }
    const auto solutions = kernels::solve_many(sys.factored, rhs);
    for (size_t k = 0; k < positions.size(); ++k) {
      verify_interpolation(sys, solutions[k], positions[k]);
      LaurentPoly g(params_.n());
      for (size_t j = 0; j < count; ++j) g.add_term(sys.index[j], solutions[k][j]);
      gmemo_.insert_or_assign(sys.index[positions[k]], std::move(g));
    }
  }
  std::vector<LaurentPoly> out;
  const System& sys = g_system(d);
  out.reserve(sys.index.size());
  for (const auto& alpha : sys.index) out.push_back(gmemo_.at(alpha));
  return out;
}

LaurentPoly build_G(const ExponentVector& alpha, const InterpParams& p) {
  InterpCache cache(p);
  return cache.G(alpha);
}

LaurentPoly build_R(const Partition& lambda, const InterpParams& p) {
  InterpCache cache(p);
  return cache.R(lambda);
}

Rational leading_coeff_G(const LaurentPoly& g, const ExponentVector& alpha) {
  return g.coeff(alpha);
}

Rational leading_coeff_R(const LaurentPoly& r, const Partition& lambda) {
  const auto expansion = expand_in_msym(r);
  const auto it = expansion.find(lambda);
  return it == expansion.end() ? Rational(0) : it->second;
}

IdentityCheck check_restriction(const Partition& lambda, const InterpParams& p) {
  if (lambda.n() != p.n()) throw std::invalid_argument("check_restriction: arity mismatch");
  if (lambda.part(lambda.n() - 1) != 0)
    throw std::invalid_argument("check_restriction: last part must be zero");
  const int n = lambda.n();
  const LaurentPoly lhs = restrict_var(build_R(lambda, p), n, p.tau()[n - 1]);
  const LaurentPoly rhs = build_R(lambda.drop_last(), p.drop_last());
  IdentityCheck out;
  out.pass = lhs == rhs;
  if (!out.pass) out.detail = "restriction mismatch at " + format_exponent(lambda.as_exponent());
  return out;
}

IdentityCheck check_shift(const Partition& lambda, const InterpParams& p) {
  if (lambda.n() != p.n()) throw std::invalid_argument("check_shift: arity mismatch");
  if (lambda.part(lambda.n() - 1) <= 0)
    throw std::invalid_argument("check_shift: last part must be positive");
  const int n = lambda.n();
  const Rational& tn = p.tau()[n - 1];

  const LaurentPoly lhs = build_R(lambda, p);
  LaurentPoly rhs = build_R(lambda.lowered(), p.q_shifted());
  const Node lbar = node_partition(lambda, p);
  Rational denom(1);
  for (int i = 0; i < n; ++i) {
    ExponentVector up(n, 0), down(n, 0);
    up[i] = 1;
    down[i] = -1;
    LaurentPoly left(n), right(n);  // (x_i - τ_n) and (x_i^{-1} - τ_n)
    left.add_term(up, Rational(1));
    left.add_term(ExponentVector(n, 0), Rational(-tn));
    right.add_term(down, Rational(1));
    right.add_term(ExponentVector(n, 0), Rational(-tn));
    rhs *= left * right;
    denom *= (lbar[i] - tn) * (Rational(1 / lbar[i]) - tn);
  }
  if (denom == 0)
    throw degeneracy_error("check_shift: node factor vanished", -1);
  rhs *= Rational(1 / denom);
  IdentityCheck out;
  out.pass = lhs == rhs;
  if (!out.pass) out.detail = "shift identity mismatch at " + format_exponent(lambda.as_exponent());
  return out;
}

IdentityCheck check_sym_expansion(const Partition& lambda, InterpCache& cache) {
  if (lambda.n() != cache.params().n())
    throw std::invalid_argument("check_sym_expansion: arity mismatch");
  LaurentPoly sum(lambda.n());
  for (const auto& beta : orbit(lambda)) sum += cache.G(beta);
  IdentityCheck out;
  out.pass = sum == cache.R(lambda);
  if (!out.pass)
    out.detail = "orbit sum differs from symmetric polynomial at " +
                 format_exponent(lambda.as_exponent());
  return out;
}

IdentityCheck check_sym_expansion(const Partition& lambda, const InterpParams& p) {
  InterpCache cache(p);
  return check_sym_expansion(lambda, cache);
}

}  // namespace bcinterp
