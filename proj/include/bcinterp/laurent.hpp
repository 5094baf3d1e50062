#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bcinterp/exponent.hpp"
#include "bcinterp/rational.hpp"
#include "bcinterp/weyl.hpp"

namespace bcinterp {

// Sparse Laurent polynomial in x_1..x_n over the rationals.  Terms are kept in
// canonical (weight, then lex) order and zero coefficients are never stored.
// Degree is the maximum term weight; it filters but does not grade: products
// can drop degree, e.g. (x + a)(x^{-1} + b) has degree 1.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

  explicit LaurentPoly(int n);
  static LaurentPoly zero(int n) { return LaurentPoly(n); }
  static LaurentPoly one(int n);
  static LaurentPoly constant(int n, const Rational& c);
  static LaurentPoly monomial(int n, const ExponentVector& exp, const Rational& coef);

  int arity() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  // Max weight over the support; empty (the "minus infinity" case) for the zero polynomial.
  std::optional<int> degree() const;

  const TermMap& terms() const { return terms_; }
  Rational coeff(const ExponentVector& exp) const;
  void add_term(const ExponentVector& exp, const Rational& coef);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& other) const = default;

  // Exact evaluation; every coordinate must be nonzero.
  Rational eval(const std::vector<Rational>& point) const;

 private:
  int n_;
  TermMap terms_;
};

// x^a ↦ x^{w(a)} on every term; satisfies eval(act_poly(w,f), z) = f(w⁻¹ z)
// for the multiplicative action of w on points.
LaurentPoly act_poly(const SignedPermutation& w, const LaurentPoly& f);

// Orbit sum m_λ = Σ x^μ over the distinct signed rearrangements μ of λ.
LaurentPoly sym_monomial(const Partition& lambda);

// Substitutes x_k = a (a ≠ 0) and renumbers the remaining variables; arity drops by one.
LaurentPoly restrict_var(const LaurentPoly& f, int k, const Rational& a);

// Invariance under the full signed-permutation action (checked on generators).
bool is_symmetric(const LaurentPoly& f);

// Writes a symmetric f as Σ c_λ m_λ by repeatedly stripping the top orbit.
// Throws std::invalid_argument if f is not symmetric.
std::map<Partition, Rational> expand_in_msym(const LaurentPoly& f);

}  // namespace bcinterp
