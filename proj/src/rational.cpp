#include "bcinterp/rational.hpp"

#include <stdexcept>

namespace bcinterp {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    if (slash == 0 || slash + 1 == text.size() || text.find('/', slash + 1) != std::string::npos)
      throw std::invalid_argument("parse_rational: malformed fraction");
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    // the (mpz, mpz) constructor canonicalizes; the string constructor does not
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rational: not a rational: '" + text + "'");
  }
}

std::string to_string(const Rational& value) { return value.str(); }

Rational rat_pow(const Rational& value, long e) {
  if (e == 0) return Rational(1);
  if (value == 0) {
    if (e < 0) throw std::domain_error("rat_pow: negative power of zero");
    return Rational(0);
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer num = pow(numerator(value), k);
  Integer den = pow(denominator(value), k);
  return e > 0 ? Rational(num, den) : Rational(den, num);
}

Rational rat_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace bcinterp
