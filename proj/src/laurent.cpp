#include "bcinterp/laurent.hpp"

#include <stdexcept>

namespace bcinterp {

LaurentPoly::LaurentPoly(int n) : n_(n) {
  if (n <= 0) throw std::invalid_argument("LaurentPoly: arity must be positive");
}

LaurentPoly LaurentPoly::one(int n) { return constant(n, Rational(1)); }

LaurentPoly LaurentPoly::constant(int n, const Rational& c) {
  LaurentPoly f(n);
  f.add_term(ExponentVector(n, 0), c);
  return f;
}

LaurentPoly LaurentPoly::monomial(int n, const ExponentVector& exp, const Rational& coef) {
  LaurentPoly f(n);
  f.add_term(exp, coef);
  return f;
}

std::optional<int> LaurentPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // canonical order is graded, so the last term has maximal weight
  return weight(terms_.rbegin()->first);
}

Rational LaurentPoly::coeff(const ExponentVector& exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& exp, const Rational& coef) {
  if (static_cast<int>(exp.size()) != n_)
    throw std::invalid_argument("LaurentPoly::add_term: arity mismatch");
  if (coef == 0) return;
  const auto [it, fresh] = terms_.emplace(exp, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (n_ != other.n_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  for (const auto& [exp, c] : other.terms_) add_term(exp, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (n_ != other.n_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  for (const auto& [exp, c] : other.terms_) add_term(exp, Rational(-c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  if (n_ != other.n_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  LaurentPoly prod(n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      ExponentVector exp(n_);
      for (int i = 0; i < n_; ++i) exp[i] = ea[i] + eb[i];
      prod.add_term(exp, Rational(ca * cb));
    }
  }
  terms_ = std::move(prod.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coef] : terms_) coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(n_);
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, Rational(-c));
  return out;
}

Rational LaurentPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw std::invalid_argument("LaurentPoly::eval: arity mismatch");
  for (const auto& z : point)
    if (z == 0) throw std::domain_error("LaurentPoly::eval: zero coordinate");
  Rational sum(0);
  for (const auto& [exp, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < n_; ++i)
      if (exp[i] != 0) term *= rat_pow(point[i], exp[i]);
    sum += term;
  }
  return sum;
}

LaurentPoly act_poly(const SignedPermutation& w, const LaurentPoly& f) {
  if (w.n() != f.arity()) throw std::invalid_argument("act_poly: arity mismatch");
  LaurentPoly out(f.arity());
  for (const auto& [exp, c] : f.terms()) out.add_term(act(w, exp), c);
  return out;
}

LaurentPoly sym_monomial(const Partition& lambda) {
  LaurentPoly out(lambda.n());
  for (const auto& mu : orbit(lambda)) out.add_term(mu, Rational(1));
  return out;
}

LaurentPoly restrict_var(const LaurentPoly& f, int k, const Rational& a) {
  const int n = f.arity();
  if (k < 1 || k > n) throw std::invalid_argument("restrict_var: variable index out of range");
  if (n == 1) throw std::invalid_argument("restrict_var: arity would drop to zero");
  if (a == 0) throw std::domain_error("restrict_var: zero substitution value");
  LaurentPoly out(n - 1);
  for (const auto& [exp, c] : f.terms()) {
    ExponentVector rest;
    rest.reserve(n - 1);
    for (int i = 0; i < n; ++i)
      if (i != k - 1) rest.push_back(exp[i]);
    out.add_term(rest, Rational(c * rat_pow(a, exp[k - 1])));
  }
  return out;
}

bool is_symmetric(const LaurentPoly& f) {
  for (int i = 1; i <= f.arity(); ++i)
    if (act_poly(SignedPermutation::simple(f.arity(), i), f) != f) return false;
  return true;
}

std::map<Partition, Rational> expand_in_msym(const LaurentPoly& f) {
  if (!is_symmetric(f)) throw std::invalid_argument("expand_in_msym: polynomial is not symmetric");
  std::map<Partition, Rational> out;
  LaurentPoly rest = f;
  while (!rest.is_zero()) {
    // strip the orbit of the canonical-top term; symmetry puts its coefficient
    // on the whole orbit
    const auto& top = *rest.terms().rbegin();
    const Partition lambda = dominant(top.first);
    const Rational c = top.second;
    rest -= c * sym_monomial(lambda);
    out.emplace(lambda, c);
  }
  return out;
}

}  // namespace bcinterp
