#include "shorttoric/combinatorics.hpp"

#include "shorttoric/error.hpp"

namespace shorttoric {

Integer binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer catalan(long k) {
  if (k < 0) return 0;
  return binom(2 * k, k) / (k + 1);
}

Integer factorial(long n) {
  if (n < 0) fail(errc::invalid_argument, "factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace shorttoric
