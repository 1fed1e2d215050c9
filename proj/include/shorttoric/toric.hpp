#ifndef SHORTTORIC_TORIC_HPP
#define SHORTTORIC_TORIC_HPP

#include <utility>
#include <vector>

#include "shorttoric/flag_vectors.hpp"
#include "shorttoric/laurent.hpp"
#include "shorttoric/nc_poly.hpp"
#include "shorttoric/poset.hpp"

namespace shorttoric {

// Stanley's toric pair of a graded Eulerian poset of rank n+1, computed on
// the half-open [0,1). f is multiplicatively symmetric of degree n and
// g is the truncation of (1-x)f at degree floor(n/2).
struct ToricPair {
  LaurentPoly f, g;
  int n = 0;
};

// The additively symmetric companion of the toric f: an additively
// symmetric polynomial of degree at most n.
struct ShortToric {
  LaurentPoly poly;
  int n = 0;

  bool operator==(const ShortToric& o) const { return n == o.n && poly == o.poly; }
};

ToricPair stanley_f_g(const Poset& p);

// (h_0, ..., h_n): the coefficients of x^n f(1/x).
std::vector<Integer> toric_h_vector(const ToricPair& t);

// Extension of the toric f to lower Eulerian posets:
// f(P,x) = sum over p of g([0,p), x) (x-1)^{n - rank(p)}.
LaurentPoly f_lower_eulerian(const Poset& p);

// The single recurrence for the short toric polynomial. For graded P this
// yields the invariant of [0,1); for a ranked P without a unique maximum it
// is applied to P as given.
ShortToric st_recurrence(const Poset& p);

// The same recurrence applied literally to P including any maximum, i.e.
// the generalized definition for ranked posets with a unique minimum. For a
// closed Eulerian interval this gives 0.
ShortToric st_ranked_poset(const Poset& p);

// Conversions between the toric f and the short toric polynomial.
ShortToric st_from_f(const LaurentPoly& f, int n);
LaurentPoly f_from_st(const ShortToric& t);

// Recovers g from st via the exponent map hidden in
// U_{>=1}(st (x - 1/x)) = x^{n+1} g(1/x^2).
LaurentPoly g_from_st(const ShortToric& t);

// Sign-vector expansions of the toric f and the short toric polynomial in
// terms of the flag f-vector.
LaurentPoly fine_f(const FlagVector& f);
ShortToric fine_st(const FlagVector& f);

// The rank-independent letter operators: C shifts with a correction,
// D collapses degree <= 2 input to a constant.
LaurentPoly op_C(const LaurentPoly& p);
LaurentPoly op_D(const LaurentPoly& p);

// Applies the letter operators of each cd-word of the (degree-homogeneous)
// cd-index to the constant 1, first letter first, and sums.
ShortToric st_via_cd(const NCPoly& phi);

// The two polynomial bases and the cd-word closed form.
LaurentPoly Q_poly(int n);
LaurentPoly t_poly(int n);  // t_{-1} = 0
LaurentPoly st_cd_word(const std::string& word);

// x^n = sum_k x_to_Q(n)[k] * Q_{n-2k}; x^n = sum_k x_to_t(n)[k] * t_{n-2k}.
std::vector<Integer> x_to_Q(int n);
std::vector<Integer> x_to_t(int n);

// Coefficient lists of the x^{2n} (kind 'B') and x^{2n+1} (kind 'b')
// expansions in the Q basis, indexed by k as in x_to_Q.
std::vector<Integer> morgan_voyce(int n, char kind);

// Builds st = sum_k c_k t_{n-2k} and g = sum_k c_k x^k from one coefficient
// list, realizing the st <-> g transfer.
std::pair<ShortToric, LaurentPoly> g_st_transfer(const std::vector<Rational>& coeffs, int n);

// sum over S of (-1)^{|S|} f_S in the generalized convention; st_recurrence
// has full degree exactly when this is nonzero.
Rational reduced_euler_char(const Poset& p);

// Coefficients of p in the t basis framed at degree n (index k multiplies
// t_{n-2k}); fails with UnexpectedParity when p has exponents off the
// parity of n.
std::vector<Rational> to_t_basis(const LaurentPoly& p, int n);

}  // namespace shorttoric

#endif
