#include "shorttoric/lattice_paths.hpp"

#include <bit>

#include "shorttoric/combinatorics.hpp"
#include "shorttoric/error.hpp"
#include "shorttoric/flag_vectors.hpp"
#include "shorttoric/toric.hpp"

namespace shorttoric {

namespace {

void require_span(int n) {
  if (n < 0 || n > 20)
    fail(errc::size_limit_exceeded, "sign-vector enumeration supports n <= 20");
}

}  // namespace

uint64_t SignVector::s_set() const {
  uint64_t out = 0;
  int prefix = 0;
  for (int i = 1; i <= n; ++i) {
    prefix += entry(i);
    if (prefix > 0) out |= uint64_t{1} << (i - 1);
  }
  return out;
}

uint64_t SignVector::r_set() const {
  uint64_t out = 0;
  int prefix = 0;
  for (int i = 1; i <= n; ++i) {
    prefix += entry(i);
    if (prefix == 0) out |= uint64_t{1} << (i - 1);
  }
  return out;
}

int SignVector::num_minus() const { return n - std::popcount(plus_bits); }

bool SignVector::weakly_above() const {
  int prefix = 0;
  for (int i = 1; i <= n; ++i) {
    prefix += entry(i);
    if (prefix < 0) return false;
  }
  return true;
}

LaurentPoly st_ce_all(uint64_t s, int n) {
  require_span(n);
  LaurentPoly out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SignVector lambda{bits, n};
    int minus = lambda.num_minus();
    if (n - 2 * minus < 0) continue;  // lambda_1 + ... + lambda_n >= 0
    uint64_t r = lambda.r_set();
    if (!evenly_contains(s, r | (r >> 1))) continue;
    // (1/x)^minus (-x)^plus (-1)^{|S(lambda) \ S|}
    int plus = n - minus;
    int sign = ((plus + std::popcount(lambda.s_set() & ~s)) % 2 == 0) ? 1 : -1;
    out.add_term(plus - minus, sign);
  }
  return out;
}

LaurentPoly st_ce_reflected(uint64_t s, int n) {
  require_span(n);
  LaurentPoly out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SignVector lambda{bits, n};
    if (!lambda.weakly_above()) continue;
    uint64_t r = lambda.r_set();
    if (!evenly_contains(s, r | (r >> 1))) continue;
    int minus = lambda.num_minus();
    int sign = (minus % 2 == 0) ? 1 : -1;
    Rational weight = sign * rational_pow(Rational(2), std::popcount(r));
    out.add_term(n - 2 * minus, weight);
  }
  return out;
}

LaurentPoly st_cd_word_paths(const std::string& word) {
  uint64_t covered = 0;
  int n = 0;
  for (char letter : word) {
    if (letter == 'c') {
      n += 1;
    } else if (letter == 'd') {
      covered |= uint64_t{3} << n;
      n += 2;
    } else {
      fail(errc::alphabet_mismatch, "cd-word expected");
    }
  }
  require_span(n);
  LaurentPoly out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SignVector lambda{bits, n};
    if (!lambda.weakly_above()) continue;
    uint64_t r = lambda.r_set();
    if ((r | (r >> 1)) != covered) continue;
    int minus = lambda.num_minus();
    int sign = ((minus + std::popcount(r)) % 2 == 0) ? 1 : -1;
    out.add_term(n - 2 * minus, sign);
  }
  return out;
}

LaurentPoly q_poly_paths(int n) {
  require_span(n);
  LaurentPoly out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SignVector lambda{bits, n};
    int prefix = 0;
    bool strict = true;
    for (int i = 1; i <= n && strict; ++i) {
      prefix += lambda.entry(i);
      if (prefix <= 0) strict = false;
    }
    if (!strict) continue;
    int minus = lambda.num_minus();
    out.add_term(n - 2 * minus, (minus % 2 == 0) ? 1 : -1);
  }
  return out;
}

LaurentPoly x_to_q_paths(int n) {
  require_span(n);
  // steps: 0 = northeast (x), 1 = southeast (-1/x), 2 = horizontal of
  // length 2 (weight 1); enumerate recursively, track height.
  LaurentPoly out;
  auto walk = [&](auto&& self, int consumed, int height, int minus, bool ok) -> void {
    if (!ok) return;
    if (consumed == n) {
      out.add_term(height, (minus % 2 == 0) ? 1 : -1);
      return;
    }
    self(self, consumed + 1, height + 1, minus, height + 1 > 0);
    self(self, consumed + 1, height - 1, minus + 1, height - 1 > 0);
    if (consumed + 2 <= n) self(self, consumed + 2, height, minus, height > 0);
  };
  if (n == 0) return LaurentPoly::one();
  walk(walk, 0, 0, 0, true);
  return out;
}

std::vector<std::pair<int, int>> sparse_intervals(uint64_t s) {
  std::vector<std::pair<int, int>> out;
  int i = 0;
  while (s != 0) {
    int skip = std::countr_zero(s);
    i += skip;
    s >>= skip;
    int len = std::countr_zero(~s);
    out.emplace_back(i + 1, i + len);  // positions are 1-based
    i += len;
    s >>= len;
  }
  return out;
}

LaurentPoly st_h_bruteforce(uint64_t s, int n) {
  require_span(n);
  LaurentPoly out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SignVector lambda{bits, n};
    int minus = lambda.num_minus();
    if (n - 2 * minus < 0) continue;
    if (lambda.s_set() != s) continue;
    int sign = ((std::popcount(s) + n - minus) % 2 == 0) ? 1 : -1;
    out.add_term(n - 2 * minus, sign);
  }
  return out;
}

namespace {

// Multiplies in the signed weight of an excursion or 1 -> 1 segment of the
// given length: Catalan count times (-1) per down step. Odd or negative
// length means no such path.
bool mul_segment(long len, Rational* factor, bool* negate) {
  if (len < 0 || len % 2 != 0) return false;
  *factor *= Rational(catalan(len / 2));
  if ((len / 2) % 2 != 0) *negate = !*negate;
  return true;
}

}  // namespace

LaurentPoly st_h_closed(uint64_t s, int n) {
  if (n < 0) fail(errc::parameter_out_of_range, "st_h_closed needs n >= 0");
  auto runs = sparse_intervals(s);
  size_t r = runs.size();
  if (r == 0) {
    // one excursion weakly below the axis returning to 0
    Rational factor(1);
    bool negate = false;
    if (!mul_segment(n, &factor, &negate)) return LaurentPoly::zero();
    return LaurentPoly::constant(negate ? -factor : factor);
  }

  // Path factorization: below-axis excursion of length i_1 - 1; per interval
  // an up step, a height >= 1 segment, and (except when j_r = n) a down
  // step; interior gaps are excursions of length i_{k+1} - j_k - 2; the
  // final gap has length n - j_r - 1. Each up/down x-pair contributes -1,
  // and S contributes (-1)^{|S|}.
  Rational factor(1);
  bool negate = std::popcount(s) % 2 != 0;

  if (!mul_segment(runs[0].first - 1, &factor, &negate)) return LaurentPoly::zero();
  for (size_t k = 0; k + 1 < r; ++k) {
    if (!mul_segment(runs[k].second - runs[k].first, &factor, &negate))
      return LaurentPoly::zero();
    if (!mul_segment(runs[k + 1].first - runs[k].second - 2, &factor, &negate))
      return LaurentPoly::zero();
    negate = !negate;  // the up/down pair around this gap
  }

  int i_r = runs[r - 1].first;
  int j_r = runs[r - 1].second;
  if (j_r == n) {
    // up step plus free tail: a strictly-above path of length n - i_r + 1,
    // whose signed weight is (-1)^{length} Q_{length}(x)
    long len = n - i_r + 1;
    if (len % 2 != 0) negate = !negate;
    LaurentPoly q = Q_poly(static_cast<int>(len));
    return q.scale(negate ? -factor : factor);
  }
  if (!mul_segment(j_r - i_r, &factor, &negate)) return LaurentPoly::zero();
  if (!mul_segment(n - j_r - 1, &factor, &negate)) return LaurentPoly::zero();
  negate = !negate;  // final up/down pair
  return LaurentPoly::constant(negate ? -factor : factor);
}

namespace {

// Catalan at index m/2; a half-integer index counts as an empty product
// term and zeroes the value.
bool catalan_half(long m, Integer* out) {
  if (m < 0 || m % 2 != 0) return false;
  *out = catalan(m / 2);
  return true;
}

}  // namespace

LaurentPoly st_h_closed_displayed(uint64_t s, int n) {
  if (n < 0) fail(errc::parameter_out_of_range, "st_h_closed_displayed needs n >= 0");
  auto runs = sparse_intervals(s);
  size_t r = runs.size();
  Integer c;
  if (runs.empty() || runs[r - 1].second < n) {
    if (n % 2 != 0) return LaurentPoly::zero();
    Rational factor(1);
    int j_prev = 0;
    for (size_t k = 0; k < r; ++k) {
      if (!catalan_half(runs[k].second - runs[k].first, &c)) return LaurentPoly::zero();
      factor *= Rational(c);
      if (!catalan_half(runs[k].first - j_prev, &c)) return LaurentPoly::zero();
      factor *= Rational(c);
      j_prev = runs[k].second;
    }
    if (!catalan_half(n - j_prev, &c)) return LaurentPoly::zero();
    factor *= Rational(c);
    if ((static_cast<long>(r) + n / 2) % 2 != 0) factor = -factor;
    return LaurentPoly::constant(factor);
  }
  int i_r = runs[r - 1].first;
  if (i_r % 2 == 0) return LaurentPoly::zero();
  Rational factor(1);
  for (size_t k = 0; k + 1 < r; ++k) {
    if (!catalan_half(runs[k].second - runs[k].first, &c)) return LaurentPoly::zero();
    factor *= Rational(c);
  }
  int j_prev = 0;
  for (size_t k = 0; k < r; ++k) {
    if (!catalan_half(runs[k].first - j_prev, &c)) return LaurentPoly::zero();
    factor *= Rational(c);
    j_prev = runs[k].second;
  }
  if ((static_cast<long>(r) + (i_r - 1) / 2) % 2 != 0) factor = -factor;
  return Q_poly(n - i_r + 1).scale(factor);
}

}  // namespace shorttoric
