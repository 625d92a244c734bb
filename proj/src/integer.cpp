#include "fmell/integer.hpp"

#include "fmell/errors.hpp"

namespace fmell {

Bezout extended_gcd(const Integer& x, const Integer& y) {
  Integer old_r = x, r = y;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

Integer gcd(const Integer& x, const Integer& y) { return extended_gcd(x, y).g; }

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw DomainError("nonzero divisor", "floor division by zero");
  }
  Integer q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) {
    --q;
  }
  return q;
}

Integer mod_floor(const Integer& num, const Integer& m) {
  Integer mm = abs(m);
  Integer r = num % mm;
  if (r < 0) {
    r += mm;
  }
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  if (m <= 0) {
    throw DomainError("positive modulus", "modulus " + to_string(m) + " is not positive");
  }
  Bezout e = extended_gcd(mod_floor(x, m), m);
  if (e.g != 1) {
    throw DomainError("coprime residue",
                      to_string(x) + " is not invertible modulo " + to_string(m));
  }
  return mod_floor(e.u, m);
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace fmell
