#include "shorttoric/dual_simplicial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "shorttoric/combinatorics.hpp"
#include "shorttoric/error.hpp"

namespace shorttoric {

bool is_augmented_andre(const std::vector<int>& word) {
  size_t n = word.size();
  if (n <= 1) return true;
  auto min_it = std::min_element(word.begin(), word.end());
  auto max_it = std::max_element(word.begin(), word.end());
  size_t m = static_cast<size_t>(min_it - word.begin());
  if (static_cast<size_t>(max_it - word.begin()) <= m) return false;
  std::vector<int> left(word.begin(), word.begin() + m);
  std::vector<int> right(word.begin() + m + 1, word.end());
  return is_augmented_andre(left) && is_augmented_andre(right);
}

std::vector<std::vector<int>> andre_permutations(int m) {
  if (m < 0 || m > 10)
    fail(errc::size_limit_exceeded, "permutation enumeration supports at most 10 letters");
  std::vector<int> word(m);
  std::iota(word.begin(), word.end(), 1);
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  do {
    if (is_augmented_andre(word)) out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::string cd_variation(const std::vector<int>& word) {
  if (word.size() <= 1) return "";
  size_t n = word.size() - 1;
  std::string out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (word[i] > word[i + 1]) {
      if (i + 1 >= n || word[i + 1] > word[i + 2])
        fail(errc::consecutive_descents,
             "descent not followed by an ascent admits no cd-variation");
      out += 'd';
      ++i;  // d covers positions i+1 and i+2
    } else {
      out += 'c';
    }
  }
  return out;
}

NCPoly boolean_cd_index(int r) {
  static std::mutex lock;
  static std::map<int, NCPoly> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
  }
  NCPoly phi = cd_index(boolean_algebra(r));
  std::lock_guard<std::mutex> guard(lock);
  cache.emplace(r, phi);
  return phi;
}

NCPoly phi_check_enum(int n, int i) {
  if (n < 1 || i < 0 || i > n - 1)
    fail(errc::parameter_out_of_range, "phi_check needs n >= 1 and 0 <= i <= n-1");
  NCPoly out;
  out.alphabet = Alphabet::CD;
  for (const auto& word : andre_permutations(n + 1))
    if (word[n - 1] == n - i) out.add_term(cd_variation(word), 1);
  return out;
}

NCPoly phi_check_rec(int n, int i) {
  if (n < 1 || i < 0 || i > n - 1)
    fail(errc::parameter_out_of_range, "phi_check needs n >= 1 and 0 <= i <= n-1");
  static std::mutex lock;
  static std::map<std::pair<int, int>, NCPoly> cache;
  auto key = std::make_pair(n, i);
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  auto concat = [](const NCPoly& a, const std::string& mid, const NCPoly& b) {
    NCPoly out;
    out.alphabet = Alphabet::CD;
    for (const auto& [w1, c1] : a.terms)
      for (const auto& [w2, c2] : b.terms) out.add_term(w1 + mid + w2, c1 * c2);
    return out;
  };

  NCPoly result;
  result.alphabet = Alphabet::CD;
  if (n == 1) {
    result.add_term("c", 1);
  } else if (i == n - 1) {
    NCPoly unit;
    unit.alphabet = Alphabet::CD;
    unit.add_term("", 1);
    result = concat(boolean_cd_index(n - 1), "d", unit);
  } else {
    NCPoly head;
    head.alphabet = Alphabet::CD;
    head.add_term("c", 1);
    result = concat(head, "", phi_check_rec(n - 1, i));
    for (int m = 2; m <= n - 1; ++m)
      for (int j = 0; j <= std::min(i, m - 1); ++j) {
        Integer coeff = binom(i, j) * binom(n - i - 2, m - 1 - j);
        if (coeff == 0) continue;
        if (i - j > n - m - 1) continue;  // empty phi block
        NCPoly block = concat(boolean_cd_index(m - 1), "d", phi_check_rec(n - m, i - j));
        for (const auto& [w, c] : block.terms) result.add_term(w, c * Rational(coeff));
      }
  }
  std::lock_guard<std::mutex> guard(lock);
  cache.emplace(key, result);
  return result;
}

DecompositionReport stanley_decomposition_check(const Poset& p) {
  if (!p.is_graded()) fail(errc::not_graded, "decomposition needs a graded poset");
  if (!p.is_simplicial()) fail(errc::not_simplicial, "poset is not simplicial");
  NCPoly phi = cd_index(p);
  int n = p.max_rank() - 1;
  std::vector<Integer> h = toric_h_vector(stanley_f_g(p));
  NCPoly sum;
  sum.alphabet = Alphabet::CD;
  for (int i = 0; i <= n - 1; ++i) {
    NCPoly block = phi_check_rec(n, i);
    for (const auto& [w, c] : block.terms) sum.add_term(w, c * Rational(h[i]));
  }
  DecompositionReport report;
  report.residual.alphabet = Alphabet::CD;
  for (const auto& [w, c] : phi.terms) report.residual.add_term(w, c);
  for (const auto& [w, c] : sum.terms) report.residual.add_term(w, -c);
  report.ok = report.residual.is_zero();
  return report;
}

LaurentPoly simplicial_toric_f(const std::vector<long long>& f_entries) {
  // entries (f_{-1}, f_0, ..., f_n); rank n+1; the top count f_n is unused
  if (f_entries.empty() || f_entries[0] != 1)
    fail(errc::invalid_argument, "f-vector must start with f_{-1} = 1");
  int n = static_cast<int>(f_entries.size()) - 2;
  if (n < 0) fail(errc::invalid_argument, "f-vector too short");
  LaurentPoly x_minus_1 = LaurentPoly::x() - LaurentPoly::one();
  LaurentPoly f;
  for (int i = 0; i <= n; ++i)
    f = f + x_minus_1.pow(n - i).scale(Rational(static_cast<long>(f_entries[i])));
  return f;
}

std::vector<Integer> dual_h_from_f(const Poset& p) {
  if (!p.is_dual_simplicial())
    fail(errc::not_dual_simplicial, "h-from-f formula needs a dual simplicial poset");
  std::vector<long long> fv = p.f_vector();  // (f_{-1}, ..., f_n)
  int n = p.max_rank() - 1;
  std::vector<Integer> h(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    Integer acc = 0;
    for (int i = k; i <= n; ++i) {
      Integer term = binom(i, k) * Integer(static_cast<long>(fv[i + 1]));
      acc += ((i - k) % 2 == 0) ? term : -term;
    }
    h[k] = acc;
  }
  return h;
}

Integer tau(int n, int i, int k) {
  if (n < 0 || i < 0 || k < 0) fail(errc::index_out_of_range, "tau needs nonnegative indices");
  if (n == 0 || i >= n) return 0;
  if (i == 0) {
    if (k == 0) return 1;
    if (k == 1) return -(n - 1);
    return 0;
  }
  return binom(n - i, k) * binom(i - 1, k - 1) - binom(n - i - 1, k) * binom(i, k - 1);
}

Integer tau_recurrence(int n, int i, int k) {
  if (n < 0 || i < 0) fail(errc::index_out_of_range, "tau needs nonnegative n, i");
  if (k < 0 || n == 0 || i >= n) return 0;
  if (n == 1) return k == 0 ? 1 : 0;  // t_{1,0} = t_1
  if (i == n - 1) return k == 1 ? 1 : 0;
  static std::mutex lock;
  static std::map<std::tuple<int, int, int>, Integer> cache;
  auto key = std::make_tuple(n, i, k);
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Integer acc = tau_recurrence(n - 1, i, k) - tau_recurrence(n - 1, i, k - 1);
  if (k >= 1)
    for (int j = 0; j <= std::min(i, n - 2 * k + 1); ++j)
      acc += binom(i, j) * binom(n - i - 2, n - 2 * k + 1 - j) *
             tau_recurrence(2 * k - 2, i - j, k - 1);
  std::lock_guard<std::mutex> guard(lock);
  cache.emplace(key, acc);
  return acc;
}

Integer sigma(int n, int i, int k) {
  if (i <= 0) fail(errc::index_out_of_range, "sigma closed form needs i > 0");
  auto p = [](long a, long b) -> Integer { return binom(a, b) - binom(a, b - 1); };
  return binom(n - k - 1, k) * p(n - 2 * k - 1, n - i - k - 1) +
         binom(n - k - 1, k - 1) * p(n - 2 * k, n - i - k);
}

Integer narayana(int i, int k) {
  if (i < 1 || k < 1) fail(errc::index_out_of_range, "narayana needs i, k >= 1");
  return binom(i - 1, k - 1) * binom(i, k - 1) / Integer(k);
}

TauTable::TauTable(int n_) : n(n_) {
  if (n < 1) fail(errc::parameter_out_of_range, "TauTable needs n >= 1");
  values.assign(n, std::vector<Integer>(n / 2 + 1, 0));
  for (int i = 0; i <= n - 1; ++i)
    for (int k = 0; k <= n / 2; ++k) values[i][k] = tau(n, i, k);
  for (int k = 0; k <= n / 2; ++k)
    if (n >= 2 && values[n - 1][k] != (k == 1 ? 1 : 0))
      fail(errc::invalid_argument, "tau(n, n-1, .) must be the k=1 indicator");
}

const Integer& TauTable::at(int i, int k) const {
  if (i < 0 || i >= n || k < 0 || k > n / 2)
    fail(errc::index_out_of_range, "TauTable index out of range");
  return values[i][k];
}

namespace {

void require_symmetric(const std::vector<Integer>& h, int n) {
  if (n < 1) fail(errc::parameter_out_of_range, "dual simplicial formulas need n >= 1");
  if (static_cast<int>(h.size()) != n + 1)
    fail(errc::asymmetric_h_vector, "h-vector must have length n+1");
  for (int i = 0; i <= n; ++i)
    if (h[i] != h[n - i])
      fail(errc::asymmetric_h_vector, "h_i = h_{n-i} fails at i = " + std::to_string(i));
}

}  // namespace

ShortToric st_dual_simplicial(const std::vector<Integer>& h, int n) {
  require_symmetric(h, n);
  LaurentPoly acc = (t_poly(n) - t_poly(n - 2).scale(Rational(n - 1))).scale(Rational(h[0]));
  for (int i = 1; i <= n - 1; ++i)
    for (int k = 1; k <= n / 2; ++k) {
      Integer coeff = tau(n, i, k);
      if (coeff != 0) acc = acc + t_poly(n - 2 * k).scale(Rational(h[i] * coeff));
    }
  return ShortToric{acc, n};
}

LaurentPoly g_dual_simplicial(const std::vector<Integer>& h, int n) {
  require_symmetric(h, n);
  LaurentPoly g;
  g.add_term(0, Rational(h[0]));
  g.add_term(1, Rational(-h[0] * (n - 1)));
  for (int i = 1; i <= n - 1; ++i)
    for (int k = 1; k <= n / 2; ++k) g.add_term(k, Rational(h[i] * tau(n, i, k)));
  return g;
}

LaurentPoly g_dual_monotone(const std::vector<Integer>& h, int n) {
  require_symmetric(h, n);
  LaurentPoly g;
  g.add_term(0, Rational(h[0]));
  for (int i = 1; 2 * i <= n; ++i) {
    Integer diff = h[i] - h[i - 1];
    if (diff == 0) continue;
    for (int k = 1; k <= std::min(i, n - i); ++k) {
      Rational coeff = Rational(Integer(n + 1 - 2 * i) * binom(n - i, k - 1) *
                                binom(i - 1, k - 1) * diff, Integer(k));
      coeff.canonicalize();
      g.add_term(k, coeff);
    }
  }
  return g;
}

LaurentPoly g_shifted_basis(const std::vector<Integer>& h, int n) {
  require_symmetric(h, n);
  LaurentPoly x_minus_1 = LaurentPoly::x() - LaurentPoly::one();
  LaurentPoly g = (LaurentPoly::constant(Rational(-n + 2)) +
                   x_minus_1.scale(Rational(-(n - 1))))
                      .scale(Rational(h[0]));
  for (int i = 1; i <= n - 1; ++i)
    for (int k = 0; k <= n / 2; ++k) {
      Integer c = sigma(n, i, k);
      if (c != 0) g = g + x_minus_1.pow(k).scale(Rational(h[i] * c));
    }
  return g;
}

LaurentPoly gessel_cube_g(int n) {
  if (n < 1) fail(errc::parameter_out_of_range, "gessel_cube_g needs n >= 1");
  LaurentPoly x_minus_1 = LaurentPoly::x() - LaurentPoly::one();
  LaurentPoly g;
  for (int k = 0; 2 * k <= n; ++k)
    g = g + x_minus_1.pow(k).scale(Rational(binom(n - k, k) * catalan(n - k)));
  return g;
}

LaurentPoly gessel_cube_g_binomial(int n) {
  if (n < 1) fail(errc::parameter_out_of_range, "gessel_cube_g_binomial needs n >= 1");
  LaurentPoly x_minus_1 = LaurentPoly::x() - LaurentPoly::one();
  LaurentPoly g;
  for (int k = 0; 2 * k <= n; ++k) {
    Rational coeff(binom(n, k) * binom(2 * n - 2 * k, n), Integer(n - k + 1));
    coeff.canonicalize();
    g = g + x_minus_1.pow(k).scale(coeff);
  }
  return g;
}

GlbReport glb_nonnegativity_check(const std::vector<Integer>& h, int n) {
  GlbReport report;
  if (static_cast<int>(h.size()) != n + 1) return report;
  for (int i = 0; i <= n; ++i)
    if (h[i] != h[n - i]) return report;
  for (int i = 1; 2 * i <= n; ++i)
    if (h[i] < h[i - 1]) return report;
  report.applicable = true;
  LaurentPoly g = g_dual_monotone(h, n);
  bool ok = true;
  for (const auto& [e, c] : g.terms())
    if (c < 0) ok = false;
  // f([0,1], x) = x^{n+1} g(1/x)
  LaurentPoly f_closed = g.substitute_power(-1) * LaurentPoly::monomial(n + 1, 1);
  for (const auto& [e, c] : f_closed.terms())
    if (c < 0) ok = false;
  report.nonnegative = ok;
  return report;
}

}  // namespace shorttoric
