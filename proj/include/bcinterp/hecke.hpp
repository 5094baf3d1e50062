#pragma once

#include <vector>

#include "bcinterp/interp.hpp"
#include "bcinterp/laurent.hpp"
#include "bcinterp/points.hpp"
#include "bcinterp/weyl.hpp"

namespace bcinterp {

// Parameters of the operator algebra: t for the swap generators T_1..T_{n-1}
// (quadratic (T-t)(T+1) = 0), while the sign-flip generator T_n is fixed to
// the degenerate quadratic (T+1)^2 = 0 and involves s through its coefficients.
struct HeckeParams {
  Rational t;
  Rational s;
};

// T_j on a polynomial, via closed per-monomial formulas (no division happens).
// Degree never increases.  1 ≤ j ≤ n = f.arity().
LaurentPoly apply_T(int j, const LaurentPoly& f, const HeckeParams& p);

// T_{i_1}·...·T_{i_r} f (rightmost factor acts first).
LaurentPoly apply_word(const std::vector<int>& word, const LaurentPoly& f, const HeckeParams& p);

// One-dimensional character: t on swap generators, -1 on the sign flip;
// multiplicative over any reduced word.
Rational hecke_char(const SignedPermutation& w, const HeckeParams& p);

// Σ_w T_w f over the whole group.  Output is invariant and absorbs every T_j
// up to its character value.
LaurentPoly symmetrize(const LaurentPoly& f, const HeckeParams& p);
LaurentPoly symmetrize_serial(const LaurentPoly& f, const HeckeParams& p);
LaurentPoly symmetrize_parallel(const LaurentPoly& f, const HeckeParams& p);

// ((z^β − κ)(z^β + υ)) / (z^{2β} − 1) at z the node of α, where (κ, υ) is
// (t, 1) on two-entry roots and (s, -1/s) on single-entry roots.
// Well-defined by z^{2β} ≠ 1; throws degeneracy_error otherwise.
Rational c_coeff(const ExponentVector& root, const ExponentVector& alpha, const InterpParams& ip,
                 const HeckeParams& hp);

// How T_j acts on the interpolation polynomial G_α:
//   branch 'f': s_jα = α, j < n:  T_j G_α = t·G_α
//   branch 'z': s_jα = α, j = n:  T_j G_α = -G_α
//   branch 'c': s_jα ≠ α:         T_j G_α = -G_α + c·(G_{s_jα} + G_α)
struct ExpansionCheck {
  bool pass = false;
  char branch = '?';
  std::string detail;
};
ExpansionCheck check_expansion_theorem(const ExponentVector& alpha, int j, InterpCache& cache,
                                       const HeckeParams& hp);

// Scalar linking symmetrize(G_λ) to R_λ: (stabilizer character sum) times the
// product of c-coefficients over the inversion set of the minimal-length group
// element sending λ to -λ.  Zero exactly when the character sum vanishes.
Rational cst_lambda(const Partition& lambda, const InterpParams& ip, const HeckeParams& hp);

}  // namespace bcinterp
