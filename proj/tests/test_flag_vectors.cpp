#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "shorttoric/combinatorics.hpp"
#include "shorttoric/error.hpp"
#include "shorttoric/flag_vectors.hpp"

using namespace shorttoric;

namespace {

// Independent oracle: the alternating chain count of the order complex of
// P minus its minimum, by direct chain enumeration.
Rational alternating_chain_sum(const Poset& p) {
  std::vector<int> proper;
  for (int v : p.elements_by_rank())
    if (p.rank(v) > 0) proper.push_back(v);
  Rational total(0);
  // recursive enumeration over increasing chains (elements are listed in
  // rank order, so extensions only look forward)
  std::vector<int> stack;
  auto rec = [&](auto&& self, size_t from) -> void {
    total += (stack.size() % 2 == 0) ? 1 : -1;
    for (size_t i = from; i < proper.size(); ++i) {
      if (!stack.empty() && !p.less(stack.back(), proper[i])) continue;
      stack.push_back(proper[i]);
      self(self, i + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

TEST_CASE("flag f of the boolean interior") {
  FlagVector f = flag_f(boolean_algebra(3));
  CHECK(f.n == 2);
  CHECK(f.at(0b00) == 1);
  CHECK(f.at(0b01) == 3);
  CHECK(f.at(0b10) == 3);
  CHECK(f.at(0b11) == 6);
}

TEST_CASE("flag f of polygons and chains") {
  for (int m : {3, 5, 8}) {
    FlagVector f = flag_f(polygon_lattice(m));
    CHECK(f.at(0b01) == m);
    CHECK(f.at(0b10) == m);
    CHECK(f.at(0b11) == 2 * m);
  }
  FlagVector f = flag_f(chain(4));
  for (uint64_t s = 0; s < f.values.size(); ++s) CHECK(f.at(s) == 1);
}

TEST_CASE("h from f on the boolean interior") {
  FlagVector h = h_from_f(flag_f(boolean_algebra(3)));
  CHECK(h.at(0b00) == 1);
  CHECK(h.at(0b01) == 2);
  CHECK(h.at(0b10) == 2);
  CHECK(h.at(0b11) == 1);
}

TEST_CASE("flag transforms invert each other") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + rng() % 5;
    FlagVector f;
    f.n = n;
    f.kind = FlagKind::F;
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
      Rational c(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
      c.canonicalize();
      f.values.push_back(c);
    }
    FlagVector h = h_from_f(f);
    CHECK(f_from_h(h).values == f.values);
    FlagVector L = L_from_f(f);
    CHECK(f_from_L(L).values == f.values);
  }
  CHECK_THROWS_AS(h_from_f(h_from_f(flag_f(boolean_algebra(2)))), error);
}

TEST_CASE("L of small posets") {
  FlagVector L = L_from_f(flag_f(boolean_algebra(3)));
  CHECK(L.at(0b00) == Rational(3, 2));
  CHECK(L.at(0b01) == 0);
  CHECK(L.at(0b10) == 0);
  CHECK(L.at(0b11) == Rational(-1, 2));

  for (int m : {4, 7}) {
    FlagVector Lp = L_from_f(flag_f(polygon_lattice(m)));
    CHECK(Lp.at(0b00) == make_rational(m, 2));
    CHECK(Lp.at(0b01) == 0);
    CHECK(Lp.at(0b10) == 0);
    CHECK(Lp.at(0b11) == make_rational(-(m - 2), 2));
  }
}

TEST_CASE("L vanishes on non-even sets for Eulerian posets") {
  for (int r = 1; r <= 6; ++r) {
    FlagVector L = L_from_f(flag_f(boolean_algebra(r)));
    for (uint64_t s = 0; s < L.values.size(); ++s)
      if (!is_even_set(s)) CHECK(L.at(s) == 0);
  }
  FlagVector L = L_from_f(flag_f(cube_lattice(4)));
  for (uint64_t s = 0; s < L.values.size(); ++s)
    if (!is_even_set(s)) CHECK(L.at(s) == 0);
}

TEST_CASE("alternating flag sum equals the order complex count") {
  std::mt19937_64 rng(5);
  std::vector<Poset> samples{boolean_algebra(3), interior(boolean_algebra(3)), chain(3),
                             polygon_lattice(5), cube_lattice(2)};
  for (int t = 0; t < 15; ++t) samples.push_back(random_ranked_poset(rng, 10));
  for (const Poset& p : samples) {
    FlagVector f = flag_f_ranked(p);
    Rational alt(0);
    for (uint64_t s = 0; s < f.values.size(); ++s)
      alt += (std::popcount(s) % 2 == 0 ? 1 : -1) * f.values[s];
    CHECK(alt == alternating_chain_sum(p));
  }
}

TEST_CASE("boolean flag h entries are descent counts") {
  for (int r = 2; r <= 6; ++r) {
    FlagVector h = h_from_f(flag_f(boolean_algebra(r)));
    // descent-set census of the permutations of [1, r]
    std::vector<int> word(r);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Rational> census(h.values.size(), Rational(0));
    do {
      uint64_t descents = 0;
      for (int i = 0; i + 1 < r; ++i)
        if (word[i] > word[i + 1]) descents |= uint64_t{1} << i;
      census[descents] += 1;
    } while (std::next_permutation(word.begin(), word.end()));
    CHECK(census == h.values);
    Rational total(0);
    for (const auto& v : h.values) total += v;
    CHECK(total == Rational(factorial(r)));
  }
}

TEST_CASE("even sets") {
  CHECK(is_even_set(0));
  CHECK(is_even_set(0b110011));       // {1,2,5,6}
  CHECK_FALSE(is_even_set(0b111));    // {1,2,3}
  CHECK(evenly_contains(0b1111, 0b1100));
  CHECK_FALSE(evenly_contains(0b111, 0b110));
  CHECK(evenly_contains(0b11, 0));
  CHECK_FALSE(evenly_contains(0b10, 0b1));  // r must be contained in s
}

TEST_CASE("flag span guard") {
  CHECK_THROWS_AS(flag_f(chain(22)), error);
  CHECK(flag_f(chain(21)).n == 20);
}

TEST_CASE("graded and ranked conventions differ by the top") {
  Poset b3 = boolean_algebra(3);
  FlagVector graded = flag_f(b3);
  FlagVector ranked = flag_f_ranked(b3);
  CHECK(graded.n == 2);
  CHECK(ranked.n == 3);
  // ranked counts chains through the top as well
  CHECK(ranked.at(0b100) == 1);
  CHECK(ranked.at(0b111) == 6);
}
