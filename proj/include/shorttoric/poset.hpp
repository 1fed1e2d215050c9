#ifndef SHORTTORIC_POSET_HPP
#define SHORTTORIC_POSET_HPP

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "shorttoric/error.hpp"

namespace shorttoric {

// Rank sets live in machine-word bitmasks, so ranks are capped.
inline constexpr int kMaxRank = 62;

/*
  A finite ranked poset with a unique minimum element. Covers step the rank
  by exactly one; the order relation is stored as bitset rows for fast
  interval work. Instances are immutable after construction; the semantic
  flags (eulerian etc.) are cached write-once.
*/
class Poset {
 public:
  // Builds and validates a poset from cover pairs over named elements.
  // Elements not mentioned in `extra_elements` must appear in some pair.
  // Without explicit ranks, rank(x) = length of the longest chain from the
  // minimum; explicit ranks are verified against the covers.
  static Poset from_covers(const std::vector<std::pair<std::string, std::string>>& covers,
                           const std::optional<std::map<std::string, int>>& explicit_ranks = {},
                           const std::vector<std::string>& extra_elements = {});

  static Poset empty();

  bool is_empty() const { return size_ == 0; }
  int size() const { return size_; }
  int max_rank() const { return max_rank_; }
  int rank(int v) const { return rank_[v]; }
  const std::string& label(int v) const { return labels_[v]; }
  int minimum() const;  // the element of rank 0

  bool less_equal(int u, int v) const;
  bool less(int u, int v) const { return u != v && less_equal(u, v); }

  const std::vector<int>& upper_covers(int v) const { return up_[v]; }
  const std::vector<int>& lower_covers(int v) const { return down_[v]; }
  std::vector<std::pair<int, int>> cover_pairs() const;

  // Elements listed in rank order (then by construction index).
  std::vector<int> elements_by_rank() const;
  std::vector<int> elements_of_rank(int r) const;

  // (f_{-1}, f_0, ..., f_{max_rank-1}): f_i counts elements of rank i+1.
  std::vector<long long> f_vector() const;

  std::optional<int> unique_maximum() const;

  bool is_graded() const;
  bool is_eulerian() const;
  bool is_simplicial() const;
  bool is_dual_simplicial() const;
  bool is_lower_eulerian() const;

  // First interval [u,v], u < v, with nonzero alternating rank sum, if any.
  std::optional<std::pair<int, int>> eulerian_witness() const;

  int find_element(const std::string& label) const;  // -1 if absent

 private:
  friend Poset dual(const Poset&);
  friend Poset closed_interval(const Poset&, int, int);
  friend Poset half_open_interval(const Poset&, int, int);
  friend Poset interior(const Poset&);

  Poset() = default;
  static Poset build(std::vector<std::string> labels,
                     std::vector<std::pair<int, int>> cover_idx,
                     const std::optional<std::vector<int>>& explicit_ranks);
  Poset induced(const std::vector<int>& keep) const;
  void finalize();  // computes closure bitsets, validates the minimum

  long long interval_alternating_sum(int u, int v) const;
  bool interval_is_boolean(int u, int v) const;

  int size_ = 0;
  int max_rank_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> up_, down_;
  // below_[v] holds the bitset of {z : z <= v}; above_[u] of {z : z >= u}.
  int words_ = 0;
  std::vector<uint64_t> below_, above_;
  std::vector<uint64_t> even_rank_mask_;  // elements of even rank

  // Tri-state caches: -1 unknown, 0 false, 1 true. Write-once, idempotent.
  mutable std::atomic<signed char> graded_{-1}, eulerian_{-1}, simplicial_{-1},
      dual_simplicial_{-1}, lower_eulerian_{-1};

 public:
  Poset(const Poset& o);
  Poset& operator=(const Poset& o);
  Poset(Poset&& o) noexcept;
  Poset& operator=(Poset&& o) noexcept;
};

// Generators. Ranks: boolean_algebra(r) has rank r, cube_lattice(d) and
// cross_polytope_lattice(d) have rank d+1, polygon_lattice(m) has rank 3,
// chain(k) has rank k.
Poset boolean_algebra(int r);
Poset cube_lattice(int d);
Poset cross_polytope_lattice(int d);
Poset polygon_lattice(int m);
Poset chain(int k);

Poset dual(const Poset& p);
Poset closed_interval(const Poset& p, int u, int v);
Poset half_open_interval(const Poset& p, int u, int v);

// The half-open [0,1) of a graded poset: the poset minus its maximum.
Poset interior(const Poset& p);

// Backtracking isomorphism test; intended for the small certified cases in
// the test-suites only.
bool are_isomorphic(const Poset& p, const Poset& q);

// Deterministic generator of ranked posets with a unique minimum (covers
// join adjacent levels only, so ranks are automatically cover-compatible).
Poset random_ranked_poset(std::mt19937_64& rng, int max_elements);

}  // namespace shorttoric

#endif
