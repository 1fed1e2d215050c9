#ifndef SHORTTORIC_NC_POLY_HPP
#define SHORTTORIC_NC_POLY_HPP

#include <map>
#include <string>

#include "shorttoric/flag_vectors.hpp"
#include "shorttoric/rational.hpp"

namespace shorttoric {

enum class Alphabet { AB, CE, CD };

// Letter degrees: a, b, c, e count 1 and d counts 2.
int word_degree(const std::string& word);

/*
  Polynomials in noncommuting letters over one of the alphabets {a,b},
  {c,e}, {c,d}. Zero coefficients are never stored.
*/
struct NCPoly {
  Alphabet alphabet = Alphabet::AB;
  std::map<std::string, Rational> terms;

  void add_term(const std::string& word, const Rational& c);
  Rational coeff(const std::string& word) const;
  bool is_zero() const { return terms.empty(); }
  bool is_homogeneous(int* degree_out = nullptr) const;
  bool operator==(const NCPoly& o) const {
    return alphabet == o.alphabet && terms == o.terms;
  }

  std::string to_string() const;  // canonical degree-then-lex term order
};

// Psi(a,b) = sum over S of h_S u_S with letter b at the positions in S.
NCPoly ab_index(const FlagVector& h);

// Exact base changes a = (c+e)/2, b = (c-e)/2 and d = (c^2-e^2)/2.
NCPoly ab_to_ce(const NCPoly& p);
NCPoly ce_to_cd(const NCPoly& p);
NCPoly cd_to_ce(const NCPoly& p);

// The cd-index of a graded Eulerian poset via flag_f -> h -> ab -> ce -> cd.
NCPoly cd_index(const Poset& p);

NCPoly reverse(const NCPoly& p);

}  // namespace shorttoric

#endif
