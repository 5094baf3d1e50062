#pragma once

#include <map>
#include <string>
#include <vector>

#include "bcinterp/kernels.hpp"
#include "bcinterp/laurent.hpp"
#include "bcinterp/linalg.hpp"
#include "bcinterp/points.hpp"

namespace bcinterp {

// One-variable closed forms (τ = (s) mode).  closed_G1 accepts any integer
// index, closed_R1 only m ≥ 0.  Throw degeneracy_error if a denominator
// factor vanishes (impossible for q, s in (0,1)).
LaurentPoly closed_G1(int m, const Rational& q, const Rational& s);
LaurentPoly closed_R1(int m, const Rational& q, const Rational& s);

// Product mode, τ = (s,...,s): G factorizes across variables and R is the sum
// of per-variable products over distinct rearrangements of λ.
LaurentPoly product_G(const ExponentVector& alpha, const Rational& q, const Rational& s);
LaurentPoly product_R(const Partition& lambda, const Rational& q, const Rational& s);

// Interpolation systems per (params, degree), shared across requests: the
// evaluation matrix over the degree-d index set is factored once and reused
// for every right-hand side of that degree.
class InterpCache {
 public:
  explicit InterpCache(InterpParams p);
  const InterpParams& params() const { return params_; }

  struct System {
    std::vector<ExponentVector> index;  // canonical order; empty for symmetric systems
    std::vector<Partition> pindex;      // canonical order; empty for nonsymmetric systems
    std::vector<Node> nodes;
    Matrix matrix;
    FactoredMatrix factored;
  };

  const System& g_system(int d);
  const System& r_system(int d);

  // Unique polynomial of degree ≤ |α| taking 1 at the node of α and 0 at the
  // nodes of every other index vector of weight ≤ |α|.
  const LaurentPoly& G(const ExponentVector& alpha);
  // Symmetric counterpart over partitions of weight ≤ |λ|, in the m_μ basis.
  const LaurentPoly& R(const Partition& lambda);

  // G for every index in the degree-d ball, solved as one multi-RHS batch
  // against the shared factorization; returned in canonical index order.
  std::vector<LaurentPoly> all_G(int d);

 private:
  LaurentPoly solve_g(const System& sys, size_t pos) const;
  void verify_interpolation(const System& sys, const std::vector<Rational>& coeffs,
                            size_t pos) const;

  InterpParams params_;
  std::map<int, System> gsys_, rsys_;
  std::map<ExponentVector, LaurentPoly, GradedLexLess> gmemo_;
  std::map<Partition, LaurentPoly> rmemo_;
};

LaurentPoly build_G(const ExponentVector& alpha, const InterpParams& p);
LaurentPoly build_R(const Partition& lambda, const InterpParams& p);

Rational leading_coeff_G(const LaurentPoly& g, const ExponentVector& alpha);
// Coefficient of m_λ in a symmetric polynomial.
Rational leading_coeff_R(const LaurentPoly& r, const Partition& lambda);

struct IdentityCheck {
  bool pass = false;
  std::string detail;
};

// λ_n = 0: setting x_n = τ_n in R_λ gives the arity-(n-1) R of the truncated λ.
IdentityCheck check_restriction(const Partition& lambda, const InterpParams& p);
// λ_n > 0: R_λ(q,τ) equals R_{λ-1}(q,qτ) times the explicit degree-n factor.
IdentityCheck check_shift(const Partition& lambda, const InterpParams& p);
// R_λ = Σ G_β over the signed rearrangements β of λ.
IdentityCheck check_sym_expansion(const Partition& lambda, const InterpParams& p);
IdentityCheck check_sym_expansion(const Partition& lambda, InterpCache& cache);

}  // namespace bcinterp
