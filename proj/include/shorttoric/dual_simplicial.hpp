#ifndef SHORTTORIC_DUAL_SIMPLICIAL_HPP
#define SHORTTORIC_DUAL_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "shorttoric/nc_poly.hpp"
#include "shorttoric/toric.hpp"

namespace shorttoric {

// Augmented Andre permutations of a linearly ordered letter set, given as a
// word of distinct integers.
bool is_augmented_andre(const std::vector<int>& word);

// All augmented Andre permutations of [1, m].
std::vector<std::vector<int>> andre_permutations(int m);

// Places d over {i, i+1} for every descent i and c elsewhere; a word of
// degree (length - 1). Fails if two descents are adjacent.
std::string cd_variation(const std::vector<int>& word);

// The building blocks of the cd-index of a simplicial Eulerian poset:
// enumeration route (over permutations with word[n-1] = n-i) and the
// boolean-convolution recurrence route.
NCPoly phi_check_enum(int n, int i);
NCPoly phi_check_rec(int n, int i);

// cd-index of the boolean algebra of rank r (memoized).
NCPoly boolean_cd_index(int r);

struct DecompositionReport {
  bool ok = false;
  NCPoly residual;  // cd_index(P) minus the h-weighted sum
};

// Checks cd_index(P) = sum_i h_i phi_check(n, i) for a simplicial Eulerian
// poset of rank n+1 with toric h-vector h.
DecompositionReport stanley_decomposition_check(const Poset& p);

// f = sum_i f_{i-1} (x-1)^{n-i} from the face counts of a simplicial
// Eulerian poset of rank n+1 (entries f_{-1}, ..., f_n).
LaurentPoly simplicial_toric_f(const std::vector<long long>& f_entries);

// h_k = sum_{i>=k} (-1)^{i-k} binom(i,k) f_i for a dual simplicial Eulerian
// poset of rank n+1, the toric h-vector of the dual's interior.
std::vector<Integer> dual_h_from_f(const Poset& p);

// tau(n,i,k): coefficient of t_{n-2k} contributed by h_i. sigma(n,i,k): the
// same contribution in the (x-1) basis. narayana(i,k): Dyck-path peak
// counts.
Integer tau(int n, int i, int k);
Integer tau_recurrence(int n, int i, int k);  // independent recurrence route
Integer sigma(int n, int i, int k);
Integer narayana(int i, int k);

// tau values for one n, indexed [i][k], with the type-level invariants
// checked at construction.
struct TauTable {
  int n;
  std::vector<std::vector<Integer>> values;  // i in [0, n-1], k in [0, n/2]

  explicit TauTable(int n);
  const Integer& at(int i, int k) const;
};

// Short toric polynomial and toric g of a dual simplicial Eulerian poset of
// rank n+1 from the symmetric h-vector (h_0, ..., h_n), by the tau form,
// the monotone difference form, and the shifted (x-1)-basis form.
ShortToric st_dual_simplicial(const std::vector<Integer>& h, int n);
LaurentPoly g_dual_simplicial(const std::vector<Integer>& h, int n);
LaurentPoly g_dual_monotone(const std::vector<Integer>& h, int n);
LaurentPoly g_shifted_basis(const std::vector<Integer>& h, int n);

// Toric g of the n-cube's face lattice, both closed forms.
LaurentPoly gessel_cube_g(int n);
LaurentPoly gessel_cube_g_binomial(int n);

struct GlbReport {
  bool applicable = false;   // h symmetric and monotone up to the middle
  bool nonnegative = false;  // g and x^{n+1} g(1/x) have nonnegative coeffs
};

GlbReport glb_nonnegativity_check(const std::vector<Integer>& h, int n);

}  // namespace shorttoric

#endif
