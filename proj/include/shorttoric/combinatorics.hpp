#ifndef SHORTTORIC_COMBINATORICS_HPP
#define SHORTTORIC_COMBINATORICS_HPP

#include "shorttoric/rational.hpp"

namespace shorttoric {

// binom(n, k) = 0 for k < 0 or k > n or n < 0; exact for every n that fits.
Integer binom(long n, long k);

Integer catalan(long k);

Integer factorial(long n);

}  // namespace shorttoric

#endif
