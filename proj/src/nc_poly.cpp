#include "shorttoric/nc_poly.hpp"

#include <algorithm>
#include <sstream>

#include "shorttoric/error.hpp"

namespace shorttoric {

int word_degree(const std::string& word) {
  int deg = 0;
  for (char c : word) deg += (c == 'd') ? 2 : 1;
  return deg;
}

void NCPoly::add_term(const std::string& word, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(word);
  if (it == terms.end()) {
    terms.emplace(word, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

Rational NCPoly::coeff(const std::string& word) const {
  auto it = terms.find(word);
  return it == terms.end() ? Rational(0) : it->second;
}

bool NCPoly::is_homogeneous(int* degree_out) const {
  int deg = -1;
  for (const auto& [w, c] : terms) {
    int d = word_degree(w);
    if (deg < 0) deg = d;
    if (d != deg) return false;
  }
  if (degree_out) *degree_out = std::max(deg, 0);
  return true;
}

std::string NCPoly::to_string() const {
  if (terms.empty()) return "0";
  std::vector<std::pair<std::string, Rational>> sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = word_degree(a.first), db = word_degree(b.first);
    return da != db ? da < db : a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : sorted) {
    Rational coeff = c;
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::string word = w.empty() ? "1" : w;
    if (coeff != 1 || w.empty()) os << shorttoric::to_string(coeff);
    if (!w.empty()) {
      if (coeff != 1) os << "*";
      os << word;
    }
  }
  return os.str();
}

NCPoly ab_index(const FlagVector& h) {
  if (h.kind != FlagKind::H) fail(errc::kind_mismatch, "ab_index expects an H vector");
  NCPoly out;
  out.alphabet = Alphabet::AB;
  for (uint64_t s = 0; s < h.values.size(); ++s) {
    if (h.values[s] == 0) continue;
    std::string word(h.n, 'a');
    for (int i = 1; i <= h.n; ++i)
      if ((s >> (i - 1)) & 1) word[i - 1] = 'b';
    out.add_term(word, h.values[s]);
  }
  return out;
}

NCPoly ab_to_ce(const NCPoly& p) {
  if (p.alphabet != Alphabet::AB) fail(errc::alphabet_mismatch, "ab_to_ce expects letters a,b");
  NCPoly out;
  out.alphabet = Alphabet::CE;
  Rational half(1, 2);
  for (const auto& [w, c] : p.terms) {
    size_t n = w.size();
    // a = (c+e)/2 and b = (c-e)/2: expand over all c/e choices per position.
    for (uint64_t pick = 0; pick < (uint64_t{1} << n); ++pick) {
      std::string word(n, 'c');
      int sign = 1;
      for (size_t i = 0; i < n; ++i)
        if ((pick >> i) & 1) {
          word[i] = 'e';
          if (w[i] == 'b') sign = -sign;
        }
      out.add_term(word, c * sign * rational_pow(half, static_cast<long>(n)));
    }
  }
  return out;
}

NCPoly ce_to_cd(const NCPoly& p) {
  if (p.alphabet != Alphabet::CE) fail(errc::alphabet_mismatch, "ce_to_cd expects letters c,e");
  NCPoly out;
  out.alphabet = Alphabet::CD;
  for (const auto& [w, c] : p.terms) {
    // Each maximal run of e's must have even length; pairs rewrite to
    // ee -> cc - 2d, leftmost first.
    for (size_t i = 0; i < w.size();) {
      if (w[i] != 'e') {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < w.size() && w[j] == 'e') ++j;
      if ((j - i) % 2 != 0)
        fail(errc::odd_e_word_present,
             "word " + w + " has an odd maximal e-run; the source data is not Eulerian");
      i = j;
    }
    NCPoly expanded;
    expanded.alphabet = Alphabet::CD;
    expanded.add_term("", c);
    size_t i = 0;
    while (i < w.size()) {
      NCPoly step;
      step.alphabet = Alphabet::CD;
      if (w[i] == 'e') {
        step.add_term("cc", 1);
        step.add_term("d", -2);
        i += 2;
      } else {
        step.add_term("c", 1);
        i += 1;
      }
      NCPoly next;
      next.alphabet = Alphabet::CD;
      for (const auto& [w1, c1] : expanded.terms)
        for (const auto& [w2, c2] : step.terms) next.add_term(w1 + w2, c1 * c2);
      expanded = std::move(next);
    }
    for (const auto& [word, coeff] : expanded.terms) out.add_term(word, coeff);
  }
  return out;
}

NCPoly cd_to_ce(const NCPoly& p) {
  if (p.alphabet != Alphabet::CD) fail(errc::alphabet_mismatch, "cd_to_ce expects letters c,d");
  NCPoly out;
  out.alphabet = Alphabet::CE;
  Rational half(1, 2);
  for (const auto& [w, c] : p.terms) {
    NCPoly expanded;
    expanded.alphabet = Alphabet::CE;
    expanded.add_term("", c);
    for (char letter : w) {
      NCPoly step;
      step.alphabet = Alphabet::CE;
      if (letter == 'd') {
        step.add_term("cc", half);
        step.add_term("ee", -half);
      } else {
        step.add_term("c", 1);
      }
      NCPoly next;
      next.alphabet = Alphabet::CE;
      for (const auto& [w1, c1] : expanded.terms)
        for (const auto& [w2, c2] : step.terms) next.add_term(w1 + w2, c1 * c2);
      expanded = std::move(next);
    }
    for (const auto& [word, coeff] : expanded.terms) out.add_term(word, coeff);
  }
  return out;
}

NCPoly cd_index(const Poset& p) {
  if (!p.is_eulerian()) {
    std::optional<std::pair<int, int>> witness;
    if (p.is_graded()) witness = p.eulerian_witness();
    std::string detail =
        witness ? "interval [" + p.label(witness->first) + ", " + p.label(witness->second) +
                      "] has nonzero alternating rank sum"
                : "poset has no unique maximum";
    fail(errc::not_eulerian, detail);
  }
  return ce_to_cd(ab_to_ce(ab_index(h_from_f(flag_f(p)))));
}

NCPoly reverse(const NCPoly& p) {
  NCPoly out;
  out.alphabet = p.alphabet;
  for (const auto& [w, c] : p.terms) {
    std::string r(w.rbegin(), w.rend());
    out.add_term(r, c);
  }
  return out;
}

}  // namespace shorttoric
