#ifndef SHORTTORIC_FLAG_VECTORS_HPP
#define SHORTTORIC_FLAG_VECTORS_HPP

#include <cstdint>
#include <vector>

#include "shorttoric/poset.hpp"
#include "shorttoric/rational.hpp"

namespace shorttoric {

enum class FlagKind { F, H, L };

/*
  A flag vector indexed by the subsets of [1,n] as bitmasks (bit i-1 stands
  for rank i). values has size 2^n.
*/
struct FlagVector {
  int n = 0;
  FlagKind kind = FlagKind::F;
  std::vector<Rational> values;

  const Rational& at(uint64_t subset) const { return values[subset]; }
};

// Flag f-vector of the poset invariantly attached to P: for graded P the
// chains are counted in the open interior with n = rank(top) - 1; for a
// ranked poset without a unique maximum, n = max rank and chains live in
// P minus its minimum.
FlagVector flag_f(const Poset& p);

// Flag f-vector in the generalized ranked-poset convention: n = max rank and
// chains range over P minus its minimum even when P is graded. f_S counts
// the chains that contain exactly one element of each rank in S.
FlagVector flag_f_ranked(const Poset& p);

FlagVector h_from_f(const FlagVector& f);
FlagVector f_from_h(const FlagVector& h);
FlagVector L_from_f(const FlagVector& f);
FlagVector f_from_L(const FlagVector& L);

// Even sets: disjoint unions of intervals of even cardinality.
bool is_even_set(uint64_t subset);
bool evenly_contains(uint64_t s, uint64_t r);

}  // namespace shorttoric

#endif
