#include "bcinterp/qseries.hpp"

#include <stdexcept>

namespace bcinterp {

Rational q_poch(const Rational& a, const Rational& q, int k) {
  if (k < 0) throw std::invalid_argument("q_poch: negative length");
  Rational out(1);
  Rational shift(a);
  for (int j = 0; j < k; ++j) {
    out *= Rational(1) - shift;
    shift *= q;
  }
  return out;
}

LaurentPoly q_poch_poly(const LaurentPoly& a, const Rational& q, int k) {
  if (k < 0) throw std::invalid_argument("q_poch_poly: negative length");
  LaurentPoly out = LaurentPoly::one(a.arity());
  LaurentPoly shift = a;
  for (int j = 0; j < k; ++j) {
    out *= LaurentPoly::one(a.arity()) - shift;
    shift *= q;
  }
  return out;
}

}  // namespace bcinterp
