#pragma once

#include "bcinterp/laurent.hpp"
#include "bcinterp/rational.hpp"

namespace bcinterp {

// (a;q)_k = (1-a)(1-qa)...(1-q^{k-1}a) for k >= 0; empty product is 1.
Rational q_poch(const Rational& a, const Rational& q, int k);

// Same product with the scalar a replaced by a Laurent polynomial.
LaurentPoly q_poch_poly(const LaurentPoly& a, const Rational& q, int k);

}  // namespace bcinterp
