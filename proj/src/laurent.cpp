#include "shorttoric/laurent.hpp"

#include <sstream>

#include "shorttoric/error.hpp"

namespace shorttoric {

Rational rational_pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0 && e < 0) fail(errc::invalid_argument, "zero to a negative power");
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), a);
  Rational out = (e < 0) ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

LaurentPoly LaurentPoly::monomial(long exp, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[exp] = c;
  return p;
}

Rational LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

long LaurentPoly::degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

long LaurentPoly::low_degree() const {
  if (coeffs_.empty()) throw std::logic_error("low degree of the zero polynomial");
  return coeffs_.begin()->first;
}

void LaurentPoly::add_term(long exp, const Rational& c) {
  if (c == 0) return;
  auto it = coeffs_.find(exp);
  if (it == coeffs_.end()) {
    coeffs_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& q) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : q.coeffs_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& q) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : q.coeffs_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& q) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : q.coeffs_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly LaurentPoly::scale(const Rational& r) const {
  LaurentPoly out;
  if (r == 0) return out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = c * r;
  return out;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p.scale(c); }

LaurentPoly LaurentPoly::pow(long k) const {
  if (k < 0) fail(errc::invalid_argument, "negative polynomial power");
  LaurentPoly out = one();
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

LaurentPoly LaurentPoly::substitute_power(long m) const {
  if (m == 0) fail(errc::invalid_argument, "substitute_power(0)");
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e * m] = c;
  return out;
}

Rational LaurentPoly::eval_at(const Rational& r) const {
  if (r == 0 && has_negative_exponent())
    fail(errc::eval_at_zero_with_negative_exponents, "cannot evaluate at 0");
  Rational acc(0);
  for (const auto& [e, c] : coeffs_) acc += c * rational_pow(r, e);
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    long e = it->first;
    if (e == 0 || c != 1) os << shorttoric::to_string(c);
    if (e != 0) {
      if (c != 1) os << "*";
      os << "x";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly truncate_ge(const LaurentPoly& p, long z) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms())
    if (e >= z) out.add_term(e, c);
  return out;
}

LaurentPoly truncate_le(const LaurentPoly& p, long z) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms())
    if (e <= z) out.add_term(e, c);
  return out;
}

namespace {

void require_ordinary(const LaurentPoly& p, long n) {
  if (n < 0) fail(errc::invalid_argument, "negative symmetry frame");
  if (p.has_negative_exponent())
    fail(errc::negative_exponent_present, "symmetry is defined for ordinary polynomials");
  if (!p.is_zero() && p.degree() > n)
    fail(errc::invalid_argument, "degree exceeds the symmetry frame");
}

}  // namespace

bool is_mult_symmetric(const LaurentPoly& p, long n) {
  require_ordinary(p, n);
  for (long k = 0; 2 * k <= n; ++k)
    if (p.coeff(k) != p.coeff(n - k)) return false;
  return true;
}

bool is_add_symmetric(const LaurentPoly& p, long n) {
  require_ordinary(p, n);
  for (long k = 0; n - 2 * k - 1 >= 0; ++k)
    if (p.coeff(n - 2 * k - 1) != 0) return false;
  return true;
}

LaurentPoly to_additive_variant(const LaurentPoly& p, long n) {
  if (p.is_zero() || p.degree() != n || !is_mult_symmetric(p, n))
    fail(errc::not_mult_symmetric, "input is not multiplicatively symmetric of degree " +
                                       std::to_string(n));
  return truncate_ge(p.substitute_power(2) * LaurentPoly::monomial(-n, 1), 0);
}

LaurentPoly to_multiplicative_variant(const LaurentPoly& q, long n) {
  if (q.is_zero() || q.degree() != n || !is_add_symmetric(q, n))
    fail(errc::not_add_symmetric,
         "input is not additively symmetric of degree " + std::to_string(n));
  // Pair the coefficient of x^{n-2k} into x^{n-k} + x^k; an exponent-0 term
  // of q is the center of an even frame and maps to x^{n/2} once.
  LaurentPoly out;
  for (const auto& [e, c] : q.terms()) {
    long k = (n - e) / 2;
    out.add_term(n - k, c);
    if (e != 0) out.add_term(k, c);
  }
  return out;
}

}  // namespace shorttoric
