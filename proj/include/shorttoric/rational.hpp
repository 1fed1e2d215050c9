#ifndef SHORTTORIC_RATIONAL_HPP
#define SHORTTORIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace shorttoric {

// All coefficient arithmetic in this library is exact. mpq_class is used
// directly; helpers below cover the few operations gmpxx does not provide.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// r^e for integer e (negative allowed, r != 0 then).
Rational rational_pow(const Rational& r, long e);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Rational& r);

}  // namespace shorttoric

#endif
