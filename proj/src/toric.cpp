#include "shorttoric/toric.hpp"

#include <bit>

#include "shorttoric/combinatorics.hpp"
#include "shorttoric/error.hpp"

namespace shorttoric {

namespace {

void require_eulerian(const Poset& p, const char* op) {
  if (p.is_eulerian()) return;
  std::optional<std::pair<int, int>> witness;
  if (p.is_graded()) witness = p.eulerian_witness();
  std::string detail = witness
                           ? std::string(op) + ": interval [" + p.label(witness->first) + ", " +
                                 p.label(witness->second) + "] has nonzero alternating rank sum"
                           : std::string(op) + ": poset has no unique maximum";
  fail(errc::not_eulerian, detail);
}

// g([0,p), x) for every p, in rank order; g(empty) = 1 is the entry of the
// minimum. Used by both Stanley's pair and the lower Eulerian extension.
std::vector<LaurentPoly> g_below_all(const Poset& p) {
  LaurentPoly x_minus_1 = LaurentPoly::x() - LaurentPoly::one();
  std::vector<LaurentPoly> powers(p.max_rank() + 1);
  for (int k = 0; k <= p.max_rank(); ++k) powers[k] = x_minus_1.pow(k);

  std::vector<LaurentPoly> g(p.size());
  LaurentPoly one_minus_x = LaurentPoly::one() - LaurentPoly::x();
  for (int v : p.elements_by_rank()) {
    if (p.rank(v) == 0) {
      g[v] = LaurentPoly::one();
      continue;
    }
    LaurentPoly f;
    for (int q = 0; q < p.size(); ++q)
      if (p.less(q, v)) f = f + g[q] * powers[p.rank(v) - 1 - p.rank(q)];
    g[v] = truncate_le(one_minus_x * f, (p.rank(v) - 1) / 2);
  }
  return g;
}

}  // namespace

ToricPair stanley_f_g(const Poset& p) {
  require_eulerian(p, "stanley_f_g");
  int top = *p.unique_maximum();
  int n = p.max_rank() - 1;
  std::vector<LaurentPoly> g = g_below_all(p);
  LaurentPoly x_minus_1 = LaurentPoly::x() - LaurentPoly::one();
  LaurentPoly f;
  for (int q = 0; q < p.size(); ++q)
    if (q != top) f = f + g[q] * x_minus_1.pow(n - p.rank(q));
  if (!is_mult_symmetric(f, n))
    fail(errc::not_eulerian, "toric f came out asymmetric; input cannot be Eulerian");
  return ToricPair{f, g[top], n};
}

std::vector<Integer> toric_h_vector(const ToricPair& t) {
  std::vector<Integer> h(t.n + 1, 0);
  for (int i = 0; i <= t.n; ++i) {
    Rational c = t.f.coeff(t.n - i);
    if (!is_integer(c)) fail(errc::invalid_argument, "toric h-entries must be integers");
    h[i] = c.get_num();
  }
  return h;
}

LaurentPoly f_lower_eulerian(const Poset& p) {
  if (p.is_empty()) return LaurentPoly::one();
  if (!p.is_lower_eulerian()) {
    auto witness = p.eulerian_witness();
    fail(errc::not_lower_eulerian,
         witness ? "interval [" + p.label(witness->first) + ", " + p.label(witness->second) +
                       "] has nonzero alternating rank sum"
                 : "no ranked minimum structure");
  }
  int n = p.max_rank();
  std::vector<LaurentPoly> g = g_below_all(p);
  LaurentPoly x_minus_1 = LaurentPoly::x() - LaurentPoly::one();
  LaurentPoly f;
  for (int q = 0; q < p.size(); ++q) f = f + g[q] * x_minus_1.pow(n - p.rank(q));
  return f;
}

namespace {

// U_{>=1}(st (x - 1/x)), the building block of the single recurrence.
LaurentPoly lift(const LaurentPoly& st) {
  LaurentPoly step = LaurentPoly::x() - LaurentPoly::monomial(-1, 1);
  return truncate_ge(st * step, 1);
}

// The recurrence evaluated on P as given (n = max rank, all elements above
// the minimum contribute).
LaurentPoly st_literal(const Poset& p) {
  if (p.is_empty()) return LaurentPoly::one();
  int n = p.max_rank();
  LaurentPoly down_step = LaurentPoly::monomial(-1, 1) - LaurentPoly::x();
  std::vector<LaurentPoly> powers(n + 1);
  for (int k = 0; k <= n; ++k) powers[k] = down_step.pow(k);

  // st_below[v] = st([0,v), x); the poset [0,v) has max rank rank(v)-1.
  std::vector<LaurentPoly> st_below(p.size());
  std::vector<LaurentPoly> lifted(p.size());
  for (int v : p.elements_by_rank()) {
    if (p.rank(v) == 0) {
      st_below[v] = LaurentPoly::one();  // st of the empty poset
      lifted[v] = lift(st_below[v]);
      continue;
    }
    int m = p.rank(v) - 1;
    LaurentPoly acc = powers[m];
    for (int q = 0; q < p.size(); ++q)
      if (p.rank(q) > 0 && p.less(q, v)) acc = acc + lifted[q] * powers[m - p.rank(q)];
    st_below[v] = truncate_ge(acc, 0);
    lifted[v] = lift(st_below[v]);
  }

  LaurentPoly acc = powers[n];
  for (int v = 0; v < p.size(); ++v)
    if (p.rank(v) > 0) acc = acc + lifted[v] * powers[n - p.rank(v)];
  return truncate_ge(acc, 0);
}

}  // namespace

ShortToric st_ranked_poset(const Poset& p) {
  if (p.is_empty()) return ShortToric{LaurentPoly::one(), 0};
  return ShortToric{st_literal(p), p.max_rank()};
}

ShortToric st_recurrence(const Poset& p) {
  if (p.is_empty()) return ShortToric{LaurentPoly::one(), 0};
  if (p.is_graded()) {
    Poset half_open = interior(p);
    return ShortToric{st_literal(half_open), p.max_rank() - 1};
  }
  return st_ranked_poset(p);
}

ShortToric st_from_f(const LaurentPoly& f, int n) {
  return ShortToric{to_additive_variant(f, n), n};
}

LaurentPoly f_from_st(const ShortToric& t) {
  return to_multiplicative_variant(t.poly, t.n);
}

LaurentPoly g_from_st(const ShortToric& t) {
  LaurentPoly lifted = lift(t.poly);
  LaurentPoly g;
  for (const auto& [e, c] : lifted.terms()) {
    if ((t.n + 1 - e) % 2 != 0 || e > t.n + 1)
      fail(errc::unexpected_parity,
           "surviving exponent " + std::to_string(e) + " is incompatible with rank " +
               std::to_string(t.n + 1));
    g.add_term((t.n + 1 - e) / 2, c);
  }
  return g;
}

namespace {

// S(lambda) and the count of -1 entries for the sign vector encoded by
// `bits` (bit i set means lambda_{i+1} = +1).
struct SignStats {
  uint64_t s_lambda = 0;
  int minus = 0;
};

SignStats sign_stats(uint64_t bits, int n) {
  SignStats st;
  int prefix = 0;
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1) {
      ++prefix;
    } else {
      --prefix;
      ++st.minus;
    }
    if (prefix > 0) st.s_lambda |= uint64_t{1} << i;
  }
  return st;
}

void require_oracle_span(int n) {
  if (n < 0 || n > 20)
    fail(errc::size_limit_exceeded, "sign-vector enumeration supports n <= 20");
}

}  // namespace

LaurentPoly fine_f(const FlagVector& f) {
  if (f.kind != FlagKind::F) fail(errc::kind_mismatch, "fine_f expects an F vector");
  int n = f.n;
  require_oracle_span(n);
  LaurentPoly out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SignStats st = sign_stats(bits, n);
    // every S contained in S(lambda) picks up this vector's term
    uint64_t s = st.s_lambda;
    while (true) {
      if (f.values[s] != 0) {
        int sign = ((std::popcount(s) + n - st.minus) % 2 == 0) ? 1 : -1;
        out.add_term(st.minus, sign * f.values[s]);
      }
      if (s == 0) break;
      s = (s - 1) & st.s_lambda;
    }
  }
  return out;
}

ShortToric fine_st(const FlagVector& f) {
  if (f.kind != FlagKind::F) fail(errc::kind_mismatch, "fine_st expects an F vector");
  int n = f.n;
  require_oracle_span(n);
  LaurentPoly out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SignStats st = sign_stats(bits, n);
    if (n - 2 * st.minus < 0) continue;
    uint64_t s = st.s_lambda;
    while (true) {
      if (f.values[s] != 0) {
        int sign = ((std::popcount(s) + n - st.minus) % 2 == 0) ? 1 : -1;
        out.add_term(n - 2 * st.minus, sign * f.values[s]);
      }
      if (s == 0) break;
      s = (s - 1) & st.s_lambda;
    }
  }
  return ShortToric{out, n};
}

LaurentPoly op_C(const LaurentPoly& p) {
  if (p.has_negative_exponent())
    fail(errc::negative_exponent_present, "C acts on ordinary polynomials");
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    out.add_term(e + 1, c);
    if (e >= 2) out.add_term(e - 1, -c);
  }
  return out;
}

LaurentPoly op_D(const LaurentPoly& p) {
  if (p.has_negative_exponent())
    fail(errc::negative_exponent_present, "D acts on ordinary polynomials");
  LaurentPoly out;
  out.add_term(0, p.coeff(0) - p.coeff(2));
  return out;
}

ShortToric st_via_cd(const NCPoly& phi) {
  if (phi.alphabet != Alphabet::CD)
    fail(errc::alphabet_mismatch, "st_via_cd expects a cd polynomial");
  int degree = 0;
  if (!phi.is_homogeneous(&degree))
    fail(errc::invalid_argument, "st_via_cd expects a homogeneous cd polynomial");
  LaurentPoly acc;
  for (const auto& [w, c] : phi.terms) {
    LaurentPoly value = LaurentPoly::one();
    for (char letter : w) value = (letter == 'c') ? op_C(value) : op_D(value);
    acc = acc + value.scale(c);
  }
  return ShortToric{acc, degree};
}

LaurentPoly Q_poly(int n) {
  if (n < 0) fail(errc::parameter_out_of_range, "Q_poly needs n >= 0");
  if (n == 0) return LaurentPoly::one();
  LaurentPoly out;
  for (int j = 0; 2 * j <= n - 1; ++j) {
    Integer c = binom(n - 1, j) - binom(n - 1, j - 1);
    if (j % 2 != 0) c = -c;
    out.add_term(n - 2 * j, Rational(c));
  }
  return out;
}

LaurentPoly t_poly(int n) {
  if (n < -1) fail(errc::parameter_out_of_range, "t_poly needs n >= -1");
  LaurentPoly out;
  for (int k = 0; n - 2 * k >= 0; ++k) out.add_term(n - 2 * k, 1);
  return out;
}

LaurentPoly st_cd_word(const std::string& word) {
  // word = c^{k_1} d c^{k_2} d ... c^{k_r} d c^{k}
  std::vector<int> runs{0};
  for (char letter : word) {
    if (letter == 'c')
      ++runs.back();
    else if (letter == 'd')
      runs.push_back(0);
    else
      fail(errc::alphabet_mismatch, "st_cd_word expects letters c,d");
  }
  int tail = runs.back();
  runs.pop_back();
  Rational factor(1);
  long half_sum = 0;
  for (int k : runs) {
    if (k % 2 != 0) return LaurentPoly::zero();
    factor *= Rational(catalan(k / 2));
    half_sum += k / 2;
  }
  if (half_sum % 2 != 0) factor = -factor;
  return Q_poly(tail).scale(factor);
}

std::vector<Integer> x_to_Q(int n) {
  if (n < 0) fail(errc::parameter_out_of_range, "x_to_Q needs n >= 0");
  if (n == 0) return {Integer(1)};
  std::vector<Integer> out;
  for (int k = 0; 2 * k <= n - 1; ++k) out.push_back(binom(n - 1 - k, k));
  return out;
}

std::vector<Integer> x_to_t(int n) {
  if (n < 0) fail(errc::parameter_out_of_range, "x_to_t needs n >= 0");
  std::vector<Integer> out(n / 2 + 1, 0);
  out[0] = 1;
  if (n >= 2) out[1] = -1;
  return out;
}

std::vector<Integer> morgan_voyce(int n, char kind) {
  if (n < 0) fail(errc::parameter_out_of_range, "morgan_voyce needs n >= 0");
  std::vector<Integer> out;
  if (kind == 'B') {
    // x^{2n}: coefficient of Q_{2k} is binom(n-1+k, n-k); k runs n..1, plus
    // the k=0 constant slot only for n=0.
    if (n == 0) return {Integer(1)};
    for (int j = 0; j <= n - 1; ++j) out.push_back(binom(2 * n - 1 - j, j));
    return out;  // index j multiplies Q_{2n-2j}
  }
  if (kind == 'b') {
    // x^{2n+1}: coefficient of Q_{2k+1} is binom(n+k, n-k), k = n..0.
    for (int j = 0; j <= n; ++j) out.push_back(binom(2 * n - j, j));
    return out;  // index j multiplies Q_{2n+1-2j}
  }
  fail(errc::invalid_argument, "morgan_voyce kind must be 'B' or 'b'");
}

std::pair<ShortToric, LaurentPoly> g_st_transfer(const std::vector<Rational>& coeffs, int n) {
  if (n < 0) fail(errc::parameter_out_of_range, "g_st_transfer needs n >= 0");
  LaurentPoly st, g;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    long deg = n - 2 * static_cast<long>(k);
    st = st + t_poly(static_cast<int>(deg)).scale(coeffs[k]);
    g.add_term(static_cast<long>(k), coeffs[k]);
  }
  return {ShortToric{st, n}, g};
}

Rational reduced_euler_char(const Poset& p) {
  FlagVector f = flag_f_ranked(p);
  Rational acc(0);
  for (uint64_t s = 0; s < f.values.size(); ++s)
    acc += (std::popcount(s) % 2 == 0 ? 1 : -1) * f.values[s];
  return acc;
}

std::vector<Rational> to_t_basis(const LaurentPoly& p, int n) {
  std::vector<Rational> coeffs(n / 2 + 1, Rational(0));
  LaurentPoly rest = p;
  for (int k = 0; k <= n / 2; ++k) {
    Rational c = rest.coeff(n - 2 * k);
    coeffs[k] = c;
    if (c != 0) rest = rest - t_poly(n - 2 * k).scale(c);
  }
  if (!rest.is_zero())
    fail(errc::unexpected_parity, "polynomial is not in the span of t_n, t_{n-2}, ...");
  return coeffs;
}

}  // namespace shorttoric
