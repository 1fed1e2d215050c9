#include <doctest.h>

#include "shorttoric/error.hpp"
#include "shorttoric/flag_vectors.hpp"
#include "shorttoric/lattice_paths.hpp"
#include "shorttoric/nc_poly.hpp"
#include "shorttoric/toric.hpp"

using namespace shorttoric;

namespace {

LaurentPoly from_pairs(std::initializer_list<std::pair<long, long>> pairs) {
  LaurentPoly p;
  for (auto [e, c] : pairs) p.add_term(e, Rational(c));
  return p;
}

}  // namespace

TEST_CASE("sign vector derived sets") {
  // lambda = (+1, -1, +1, -1): prefix sums 1, 0, 1, 0
  SignVector lambda{0b0101, 4};
  CHECK(lambda.s_set() == 0b0101);
  CHECK(lambda.r_set() == 0b1010);
  CHECK(lambda.num_minus() == 2);
  CHECK(lambda.weakly_above());
  SignVector drop{0b0010, 3};  // (-1, +1, -1)
  CHECK_FALSE(drop.weakly_above());
  CHECK(drop.s_set() == 0);
}

TEST_CASE("ce weight models") {
  CHECK(st_ce_all(0, 2) == from_pairs({{2, 1}}));
  CHECK(st_ce_all(0b11, 2) == from_pairs({{2, 1}, {0, -2}}));
  CHECK(st_ce_reflected(0b11, 2) == from_pairs({{2, 1}, {0, -2}}));
  CHECK(st_ce_reflected(0, 3) == Q_poly(3));
  CHECK(st_ce_reflected(0, 1) == from_pairs({{1, 1}}));

  for (int n = 1; n <= 9; ++n)
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s)
      if (is_even_set(s)) CHECK(st_ce_all(s, n) == st_ce_reflected(s, n));
}

TEST_CASE("cd word path model") {
  CHECK(st_cd_word_paths("d") == LaurentPoly::one());
  CHECK(st_cd_word_paths("cd").is_zero());
  CHECK(st_cd_word_paths("cc") == from_pairs({{2, 1}}));
  std::vector<std::string> words{""};
  for (size_t head = 0; head < words.size(); ++head) {
    std::string w = words[head];
    CHECK(st_cd_word_paths(w) == st_cd_word(w));
    if (word_degree(w) < 7) {
      words.push_back(w + "c");
      words.push_back(w + "d");
    }
  }
}

TEST_CASE("strictly above path weights") {
  CHECK(q_poly_paths(3) == from_pairs({{3, 1}, {1, -1}}));
  CHECK(q_poly_paths(0) == LaurentPoly::one());
  for (int n = 0; n <= 12; ++n) CHECK(q_poly_paths(n) == Q_poly(n));
  for (int n = 0; n <= 12; ++n) CHECK(x_to_q_paths(n) == LaurentPoly::monomial(n, 1));
}

TEST_CASE("sparse interval systems") {
  using IV = std::vector<std::pair<int, int>>;
  CHECK(sparse_intervals(0b1011) == IV{{1, 2}, {4, 4}});  // {1,2,4}
  CHECK(sparse_intervals(0b1110) == IV{{2, 4}});          // {2,3,4}
  CHECK(sparse_intervals(0) == IV{});
  CHECK(sparse_intervals(0b10101) == IV{{1, 1}, {3, 3}, {5, 5}});
}

TEST_CASE("st_h on small cases") {
  CHECK(st_h_bruteforce(0, 2) == from_pairs({{0, -1}}));
  CHECK(st_h_bruteforce(0b11, 2) == from_pairs({{2, 1}}));
  CHECK(st_h_closed(0, 2) == from_pairs({{0, -1}}));
  CHECK(st_h_closed(0b11, 2) == from_pairs({{2, 1}}));
  CHECK(st_h_closed(0, 0) == LaurentPoly::one());
  CHECK(st_h_closed(0b1, 1) == from_pairs({{1, 1}}));
  CHECK(st_h_closed(0, 1).is_zero());
}

TEST_CASE("st_h brute force matches the closed form") {
  for (int n = 0; n <= 10; ++n)
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
      CAPTURE(n);
      CAPTURE(s);
      CHECK(st_h_bruteforce(s, n) == st_h_closed(s, n));
    }
}

TEST_CASE("the displayed reading disagrees where the offsets bite") {
  // the corrected factorization: +x^2; the displayed indices give 0
  CHECK(st_h_bruteforce(0b11, 2) == from_pairs({{2, 1}}));
  CHECK(st_h_closed_displayed(0b11, 2).is_zero());
  // for the empty set both readings coincide
  CHECK(st_h_closed_displayed(0, 4) == st_h_bruteforce(0, 4));
}

TEST_CASE("h expansion recovers st") {
  std::vector<Poset> samples{boolean_algebra(3), interior(boolean_algebra(4)), chain(3),
                             cube_lattice(2), interior(cube_lattice(3)), polygon_lattice(6)};
  for (const Poset& p : samples) {
    FlagVector h = h_from_f(flag_f_ranked(p));
    LaurentPoly sum;
    for (uint64_t s = 0; s < h.values.size(); ++s)
      if (h.values[s] != 0) sum = sum + st_h_bruteforce(s, p.max_rank()).scale(h.values[s]);
    CHECK(sum == st_ranked_poset(p).poly);
  }
}

TEST_CASE("ce and cd expansions recover st on Eulerian posets") {
  std::vector<Poset> samples{boolean_algebra(4), cube_lattice(3), polygon_lattice(5)};
  for (const Poset& p : samples) {
    int n = p.max_rank() - 1;
    FlagVector L = L_from_f(flag_f(p));
    LaurentPoly by_ce;
    for (uint64_t s = 0; s < L.values.size(); ++s)
      if (L.values[s] != 0) by_ce = by_ce + st_ce_all(s, n).scale(L.values[s]);
    CHECK(by_ce == st_recurrence(p).poly);

    LaurentPoly by_cd;
    for (const auto& [w, c] : cd_index(p).terms) by_cd = by_cd + st_cd_word_paths(w).scale(c);
    CHECK(by_cd == st_recurrence(p).poly);
  }
}

TEST_CASE("enumeration span guard") {
  CHECK_THROWS_AS(st_ce_all(0, 21), error);
  CHECK_THROWS_AS(st_h_bruteforce(0, 21), error);
  CHECK_THROWS_AS(q_poly_paths(-1), error);
}
