#ifndef SHORTTORIC_LAURENT_HPP
#define SHORTTORIC_LAURENT_HPP

#include <map>
#include <string>

#include "shorttoric/rational.hpp"

namespace shorttoric {

/*
  Exact Laurent polynomials over the rationals: a map exponent -> coefficient
  kept in canonical form (zero coefficients are never stored). The zero
  polynomial is the empty map and has no degree.
*/
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(const Rational& c) { return monomial(0, c); }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly x() { return monomial(1, 1); }
  static LaurentPoly monomial(long exp, const Rational& c);

  const std::map<long, Rational>& terms() const { return coeffs_; }
  Rational coeff(long exp) const;
  bool is_zero() const { return coeffs_.empty(); }

  // Degree bounds; calling either on the zero polynomial is a logic error.
  long degree() const;
  long low_degree() const;

  bool has_negative_exponent() const { return !is_zero() && low_degree() < 0; }

  void add_term(long exp, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& q) const;
  LaurentPoly operator-(const LaurentPoly& q) const;
  LaurentPoly operator*(const LaurentPoly& q) const;
  bool operator==(const LaurentPoly& q) const { return coeffs_ == q.coeffs_; }
  bool operator!=(const LaurentPoly& q) const { return coeffs_ != q.coeffs_; }

  LaurentPoly scale(const Rational& r) const;
  LaurentPoly pow(long k) const;

  // Substitutes x -> x^m for nonzero m (negative m is allowed).
  LaurentPoly substitute_power(long m) const;

  Rational eval_at(const Rational& r) const;

  std::string to_string() const;

 private:
  std::map<long, Rational> coeffs_;
};

LaurentPoly operator*(const Rational& c, const LaurentPoly& p);

// Truncation operators: keep the terms of degree >= z (resp. <= z).
LaurentPoly truncate_ge(const LaurentPoly& p, long z);
LaurentPoly truncate_le(const LaurentPoly& p, long z);

// Symmetry predicates for ordinary polynomials framed at degree n:
// multiplicative means a_k = a_{n-k}, additive means a_{n-2k-1} = 0.
bool is_mult_symmetric(const LaurentPoly& p, long n);
bool is_add_symmetric(const LaurentPoly& p, long n);

// The bijection between multiplicatively and additively symmetric
// polynomials of degree n, realized as exact exponent re-indexing.
LaurentPoly to_additive_variant(const LaurentPoly& p, long n);
LaurentPoly to_multiplicative_variant(const LaurentPoly& q, long n);

}  // namespace shorttoric

#endif
