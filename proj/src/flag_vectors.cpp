#include "shorttoric/flag_vectors.hpp"

#include <bit>

#include "shorttoric/error.hpp"

namespace shorttoric {

namespace {

constexpr int kMaxFlagSpan = 20;  // 2^n tables with O(3^n) transforms

void require_span(int n) {
  if (n < 0 || n > kMaxFlagSpan)
    fail(errc::size_limit_exceeded, "flag span must be in [0, 20], got " + std::to_string(n));
}

void require_kind(const FlagVector& v, FlagKind want, const char* what) {
  if (v.kind != want) fail(errc::kind_mismatch, what);
}

// Chains through the selected ranks, one element per rank, counted by a
// sweep along the selected ranks.
FlagVector flag_f_of(const Poset& p, const std::vector<std::vector<int>>& by_rank, int n) {
  require_span(n);
  FlagVector out;
  out.n = n;
  out.kind = FlagKind::F;
  out.values.assign(size_t{1} << n, Rational(0));
  for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
    std::vector<int> ranks;
    for (int i = 1; i <= n; ++i)
      if ((s >> (i - 1)) & 1) ranks.push_back(i);
    if (ranks.empty()) {
      out.values[s] = 1;
      continue;
    }
    // counts[j] = number of chains through the selected ranks so far ending
    // at the j-th element of the current rank level.
    std::vector<Integer> counts(by_rank[ranks[0]].size(), 1);
    for (size_t step = 1; step < ranks.size(); ++step) {
      const auto& prev = by_rank[ranks[step - 1]];
      const auto& cur = by_rank[ranks[step]];
      std::vector<Integer> next(cur.size(), 0);
      for (size_t j = 0; j < cur.size(); ++j)
        for (size_t i = 0; i < prev.size(); ++i)
          if (p.less(prev[i], cur[j])) next[j] += counts[i];
      counts.swap(next);
    }
    Integer total = 0;
    for (const auto& c : counts) total += c;
    out.values[s] = Rational(total);
  }
  return out;
}

}  // namespace

FlagVector flag_f_ranked(const Poset& p) {
  if (p.is_empty()) fail(errc::no_minimum, "flag vector of the empty poset");
  int n = p.max_rank();
  require_span(n);
  std::vector<std::vector<int>> by_rank(n + 1);
  for (int v = 0; v < p.size(); ++v)
    if (p.rank(v) > 0) by_rank[p.rank(v)].push_back(v);
  return flag_f_of(p, by_rank, n);
}

FlagVector flag_f(const Poset& p) {
  if (p.is_empty()) fail(errc::no_minimum, "flag vector of the empty poset");
  if (!p.is_graded()) return flag_f_ranked(p);
  int top = *p.unique_maximum();
  int n = p.max_rank() - 1;
  require_span(n);
  std::vector<std::vector<int>> by_rank(n + 1);
  for (int v = 0; v < p.size(); ++v)
    if (p.rank(v) > 0 && v != top) by_rank[p.rank(v)].push_back(v);
  return flag_f_of(p, by_rank, n);
}

FlagVector h_from_f(const FlagVector& f) {
  require_kind(f, FlagKind::F, "h_from_f expects an F vector");
  FlagVector out;
  out.n = f.n;
  out.kind = FlagKind::H;
  out.values.assign(f.values.size(), Rational(0));
  for (uint64_t s = 0; s < f.values.size(); ++s) {
    Rational acc(0);
    uint64_t t = s;
    int bits_s = std::popcount(s);
    while (true) {
      int sign = ((bits_s - std::popcount(t)) % 2 == 0) ? 1 : -1;
      acc += sign * f.values[t];
      if (t == 0) break;
      t = (t - 1) & s;
    }
    out.values[s] = acc;
  }
  return out;
}

FlagVector f_from_h(const FlagVector& h) {
  require_kind(h, FlagKind::H, "f_from_h expects an H vector");
  FlagVector out;
  out.n = h.n;
  out.kind = FlagKind::F;
  out.values.assign(h.values.size(), Rational(0));
  for (uint64_t s = 0; s < h.values.size(); ++s) {
    Rational acc(0);
    uint64_t t = s;
    while (true) {
      acc += h.values[t];
      if (t == 0) break;
      t = (t - 1) & s;
    }
    out.values[s] = acc;
  }
  return out;
}

FlagVector L_from_f(const FlagVector& f) {
  require_kind(f, FlagKind::F, "L_from_f expects an F vector");
  FlagVector out;
  out.n = f.n;
  out.kind = FlagKind::L;
  out.values.assign(f.values.size(), Rational(0));
  uint64_t full = f.values.size() - 1;
  Rational minus_half(-1, 2);
  for (uint64_t s = 0; s <= full; ++s) {
    uint64_t comp = full & ~s;
    Rational acc(0);
    // supersets of the complement: comp | u with u a subset of s
    uint64_t u = s;
    while (true) {
      uint64_t t = comp | u;
      acc += rational_pow(minus_half, std::popcount(t)) * f.values[t];
      if (u == 0) break;
      u = (u - 1) & s;
    }
    int sign = ((f.n - std::popcount(s)) % 2 == 0) ? 1 : -1;
    out.values[s] = sign * acc;
  }
  return out;
}

FlagVector f_from_L(const FlagVector& L) {
  require_kind(L, FlagKind::L, "f_from_L expects an L vector");
  FlagVector out;
  out.n = L.n;
  out.kind = FlagKind::F;
  out.values.assign(L.values.size(), Rational(0));
  uint64_t full = L.values.size() - 1;
  for (uint64_t s = 0; s <= full; ++s) {
    uint64_t comp = full & ~s;
    Rational acc(0);
    uint64_t t = comp;
    while (true) {
      acc += L.values[t];
      if (t == 0) break;
      t = (t - 1) & comp;
    }
    out.values[s] = rational_pow(Rational(2), std::popcount(s)) * acc;
  }
  return out;
}

bool is_even_set(uint64_t subset) {
  while (subset != 0) {
    int low = std::countr_zero(subset);
    uint64_t run = subset >> low;
    int len = std::countr_zero(~run);
    if (len % 2 != 0) return false;
    subset &= ~(((uint64_t{1} << len) - 1) << low);
  }
  return true;
}

bool evenly_contains(uint64_t s, uint64_t r) {
  if ((r & ~s) != 0) return false;
  return is_even_set(s & ~r);
}

}  // namespace shorttoric
