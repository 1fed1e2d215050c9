#include <doctest.h>

#include <random>
#include <vector>

#include "shorttoric/error.hpp"
#include "shorttoric/nc_poly.hpp"

using namespace shorttoric;

namespace {

NCPoly make(Alphabet a, std::initializer_list<std::pair<const char*, long>> terms) {
  NCPoly p;
  p.alphabet = a;
  for (auto [w, c] : terms) p.add_term(w, Rational(c));
  return p;
}

NCPoly make_rat(Alphabet a, std::initializer_list<std::pair<const char*, Rational>> terms) {
  NCPoly p;
  p.alphabet = a;
  for (const auto& [w, c] : terms) p.add_term(w, c);
  return p;
}

}  // namespace

TEST_CASE("ab index") {
  NCPoly psi = ab_index(h_from_f(flag_f(boolean_algebra(3))));
  CHECK(psi == make(Alphabet::AB, {{"aa", 1}, {"ab", 2}, {"ba", 2}, {"bb", 1}}));

  NCPoly chain_psi = ab_index(h_from_f(flag_f(chain(4))));
  CHECK(chain_psi == make(Alphabet::AB, {{"aaa", 1}}));

  NCPoly sq = ab_index(h_from_f(flag_f(polygon_lattice(4))));
  CHECK(sq == make(Alphabet::AB, {{"aa", 1}, {"ab", 3}, {"ba", 3}, {"bb", 1}}));
}

TEST_CASE("ab to ce") {
  NCPoly ce = ab_to_ce(make(Alphabet::AB, {{"aa", 1}, {"ab", 2}, {"ba", 2}, {"bb", 1}}));
  CHECK(ce == make_rat(Alphabet::CE, {{"cc", Rational(3, 2)}, {"ee", Rational(-1, 2)}}));

  NCPoly sq = ab_to_ce(make(Alphabet::AB, {{"aa", 1}, {"ab", 3}, {"ba", 3}, {"bb", 1}}));
  CHECK(sq == make(Alphabet::CE, {{"cc", 2}, {"ee", -1}}));

  // a single a-word expands like ((c+e)/2)^n
  NCPoly an = ab_to_ce(make(Alphabet::AB, {{"aa", 4}}));
  CHECK(an == make(Alphabet::CE, {{"cc", 1}, {"ce", 1}, {"ec", 1}, {"ee", 1}}));
  CHECK_THROWS_AS(ab_to_ce(make(Alphabet::CE, {{"cc", 1}})), error);
}

TEST_CASE("ce to cd") {
  NCPoly cd =
      ce_to_cd(make_rat(Alphabet::CE, {{"cc", Rational(3, 2)}, {"ee", Rational(-1, 2)}}));
  CHECK(cd == make(Alphabet::CD, {{"cc", 1}, {"d", 1}}));

  NCPoly sq = ce_to_cd(make(Alphabet::CE, {{"cc", 2}, {"ee", -1}}));
  CHECK(sq == make(Alphabet::CD, {{"cc", 1}, {"d", 2}}));

  CHECK_THROWS_AS(ce_to_cd(make(Alphabet::CE, {{"ce", 1}})), error);
  // runs of four e's split into adjacent pairs
  NCPoly quad = ce_to_cd(make(Alphabet::CE, {{"eeee", 1}}));
  CHECK(quad ==
        make(Alphabet::CD, {{"cccc", 1}, {"ccd", -2}, {"dcc", -2}, {"dd", 4}}));
}

TEST_CASE("cd index of small posets") {
  CHECK(cd_index(boolean_algebra(3)) == make(Alphabet::CD, {{"cc", 1}, {"d", 1}}));
  CHECK(cd_index(cube_lattice(3)) ==
        make(Alphabet::CD, {{"ccc", 1}, {"dc", 6}, {"cd", 4}}));
  for (int m = 3; m <= 9; ++m)
    CHECK(cd_index(polygon_lattice(m)) == make(Alphabet::CD, {{"cc", 1}, {"d", m - 2}}));
  CHECK_THROWS_AS(cd_index(chain(3)), error);
  // the 3-polytope shape c^3 + (f_0 - 2) dc + (f_2 - 2) cd on the cube
  auto f = cube_lattice(3).f_vector();
  NCPoly phi = cd_index(cube_lattice(3));
  CHECK(phi.coeff("dc") == Rational(static_cast<long>(f[1] - 2)));
  CHECK(phi.coeff("cd") == Rational(static_cast<long>(f[3] - 2)));
}

TEST_CASE("reverse") {
  NCPoly p = make(Alphabet::CD, {{"dc", 6}, {"cd", 4}});
  CHECK(reverse(p) == make(Alphabet::CD, {{"cd", 6}, {"dc", 4}}));
  NCPoly q = make(Alphabet::CD, {{"cc", 1}, {"d", 1}});
  CHECK(reverse(q) == q);
  CHECK(reverse(reverse(p)) == p);
}

TEST_CASE("cd to ce and back") {
  NCPoly d = make(Alphabet::CD, {{"d", 1}});
  CHECK(cd_to_ce(d) == make_rat(Alphabet::CE, {{"cc", Rational(1, 2)}, {"ee", Rational(-1, 2)}}));
  CHECK(cd_to_ce(make(Alphabet::CD, {{"cc", 1}, {"d", 2}})) ==
        make(Alphabet::CE, {{"cc", 2}, {"ee", -1}}));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    NCPoly p;
    p.alphabet = Alphabet::CD;
    for (int t = 0; t < 4; ++t) {
      std::string w;
      for (int i = 0; i < static_cast<int>(rng() % 5); ++i) w += (rng() % 2) ? 'c' : 'd';
      p.add_term(w, Rational(static_cast<long>(rng() % 9) - 4));
    }
    CHECK(ce_to_cd(cd_to_ce(p)) == p);
  }
}

TEST_CASE("duality reverses the cd index") {
  for (int r = 2; r <= 5; ++r) {
    NCPoly phi = cd_index(boolean_algebra(r));
    CHECK(cd_index(dual(boolean_algebra(r))) == reverse(phi));
  }
  for (int d = 2; d <= 3; ++d)
    CHECK(cd_index(cross_polytope_lattice(d)) == reverse(cd_index(cube_lattice(d))));
}

TEST_CASE("the two L routes agree") {
  // coefficient of the e-word at S in the ce-index vs the direct transform
  std::vector<Poset> samples{boolean_algebra(4), cube_lattice(3), polygon_lattice(6), chain(4),
                             cross_polytope_lattice(3)};
  for (const Poset& p : samples) {
    FlagVector f = flag_f(p);
    FlagVector L = L_from_f(f);
    NCPoly ce = ab_to_ce(ab_index(h_from_f(f)));
    for (uint64_t s = 0; s < L.values.size(); ++s) {
      std::string word(L.n, 'c');
      for (int i = 1; i <= L.n; ++i)
        if ((s >> (i - 1)) & 1) word[i - 1] = 'e';
      CHECK(ce.coeff(word) == L.at(s));
    }
  }
}

TEST_CASE("cd coefficients are integers on Eulerian input") {
  for (int r = 1; r <= 6; ++r)
    for (const auto& [w, c] : cd_index(boolean_algebra(r)).terms) CHECK(is_integer(c));
  for (int d = 1; d <= 4; ++d)
    for (const auto& [w, c] : cd_index(cube_lattice(d)).terms) CHECK(is_integer(c));
}
