#include "shorttoric/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace shorttoric {

namespace {

int load_tristate(const std::atomic<signed char>& a) { return a.load(std::memory_order_relaxed); }
void store_tristate(const std::atomic<signed char>& a, bool v) {
  const_cast<std::atomic<signed char>&>(a).store(v ? 1 : 0, std::memory_order_relaxed);
}

}  // namespace

Poset::Poset(const Poset& o)
    : size_(o.size_),
      max_rank_(o.max_rank_),
      labels_(o.labels_),
      rank_(o.rank_),
      up_(o.up_),
      down_(o.down_),
      words_(o.words_),
      below_(o.below_),
      above_(o.above_),
      even_rank_mask_(o.even_rank_mask_) {
  graded_ = load_tristate(o.graded_);
  eulerian_ = load_tristate(o.eulerian_);
  simplicial_ = load_tristate(o.simplicial_);
  dual_simplicial_ = load_tristate(o.dual_simplicial_);
  lower_eulerian_ = load_tristate(o.lower_eulerian_);
}

Poset& Poset::operator=(const Poset& o) {
  if (this != &o) *this = Poset(o);
  return *this;
}

Poset::Poset(Poset&& o) noexcept
    : size_(o.size_),
      max_rank_(o.max_rank_),
      labels_(std::move(o.labels_)),
      rank_(std::move(o.rank_)),
      up_(std::move(o.up_)),
      down_(std::move(o.down_)),
      words_(o.words_),
      below_(std::move(o.below_)),
      above_(std::move(o.above_)),
      even_rank_mask_(std::move(o.even_rank_mask_)) {
  graded_ = load_tristate(o.graded_);
  eulerian_ = load_tristate(o.eulerian_);
  simplicial_ = load_tristate(o.simplicial_);
  dual_simplicial_ = load_tristate(o.dual_simplicial_);
  lower_eulerian_ = load_tristate(o.lower_eulerian_);
}

Poset& Poset::operator=(Poset&& o) noexcept {
  size_ = o.size_;
  max_rank_ = o.max_rank_;
  labels_ = std::move(o.labels_);
  rank_ = std::move(o.rank_);
  up_ = std::move(o.up_);
  down_ = std::move(o.down_);
  words_ = o.words_;
  below_ = std::move(o.below_);
  above_ = std::move(o.above_);
  even_rank_mask_ = std::move(o.even_rank_mask_);
  graded_ = load_tristate(o.graded_);
  eulerian_ = load_tristate(o.eulerian_);
  simplicial_ = load_tristate(o.simplicial_);
  dual_simplicial_ = load_tristate(o.dual_simplicial_);
  lower_eulerian_ = load_tristate(o.lower_eulerian_);
  return *this;
}

Poset Poset::empty() { return Poset(); }

Poset Poset::from_covers(const std::vector<std::pair<std::string, std::string>>& covers,
                         const std::optional<std::map<std::string, int>>& explicit_ranks,
                         const std::vector<std::string>& extra_elements) {
  std::map<std::string, int> index;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& s) {
    auto [it, fresh] = index.emplace(s, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(s);
    return it->second;
  };
  for (const auto& s : extra_elements) intern(s);
  std::vector<std::pair<int, int>> cover_idx;
  cover_idx.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    int a = intern(lo), b = intern(hi);
    if (a == b) fail(errc::cycle_detected, "cover pair (" + lo + ", " + hi + ") is a loop");
    cover_idx.emplace_back(a, b);
  }
  if (labels.empty()) fail(errc::invalid_argument, "a poset needs at least one element");

  std::optional<std::vector<int>> ranks;
  if (explicit_ranks) {
    ranks.emplace(labels.size(), -1);
    for (const auto& [name, r] : *explicit_ranks) {
      auto it = index.find(name);
      if (it == index.end())
        fail(errc::parse_error, "rank given for unknown element " + name);
      if (r < 0) fail(errc::rank_mismatch, "negative rank for " + name);
      (*ranks)[it->second] = r;
    }
    for (size_t i = 0; i < labels.size(); ++i)
      if ((*ranks)[i] < 0) fail(errc::rank_mismatch, "no rank given for " + labels[i]);
  }
  return build(std::move(labels), std::move(cover_idx), ranks);
}

Poset Poset::build(std::vector<std::string> labels, std::vector<std::pair<int, int>> cover_idx,
                   const std::optional<std::vector<int>>& explicit_ranks) {
  Poset p;
  p.size_ = static_cast<int>(labels.size());
  p.labels_ = std::move(labels);
  p.up_.assign(p.size_, {});
  p.down_.assign(p.size_, {});
  {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : cover_idx) {
      if (!seen.insert({a, b}).second) continue;
      p.up_[a].push_back(b);
      p.down_[b].push_back(a);
    }
  }

  // Topological order; a leftover vertex means a directed cycle.
  std::vector<int> indeg(p.size_, 0);
  for (int v = 0; v < p.size_; ++v) indeg[v] = static_cast<int>(p.down_[v].size());
  std::vector<int> order;
  order.reserve(p.size_);
  for (int v = 0; v < p.size_; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (size_t head = 0; head < order.size(); ++head)
    for (int w : p.up_[order[head]])
      if (--indeg[w] == 0) order.push_back(w);
  if (static_cast<int>(order.size()) != p.size_)
    fail(errc::cycle_detected, "cover relation contains a directed cycle");

  if (explicit_ranks) {
    p.rank_ = *explicit_ranks;
  } else {
    p.rank_.assign(p.size_, 0);
    for (int v : order)
      for (int u : p.down_[v]) p.rank_[v] = std::max(p.rank_[v], p.rank_[u] + 1);
  }
  for (int v = 0; v < p.size_; ++v)
    for (int u : p.down_[v])
      if (p.rank_[v] != p.rank_[u] + 1)
        fail(errc::rank_mismatch, "cover (" + p.labels_[u] + ", " + p.labels_[v] +
                                      ") violates rank(upper) = rank(lower) + 1");
  p.finalize();
  return p;
}

void Poset::finalize() {
  if (size_ > 20000)
    fail(errc::size_limit_exceeded, "posets are limited to 20000 elements");
  max_rank_ = 0;
  for (int v = 0; v < size_; ++v) max_rank_ = std::max(max_rank_, rank_[v]);
  if (max_rank_ > kMaxRank)
    fail(errc::size_limit_exceeded, "rank exceeds the supported maximum of 62");

  int minima = 0;
  for (int v = 0; v < size_; ++v)
    if (down_[v].empty()) ++minima;
  if (minima != 1)
    fail(errc::multiple_minima,
         std::to_string(minima) + " minimal elements; exactly one is required");
  for (int v = 0; v < size_; ++v)
    if (down_[v].empty() && rank_[v] != 0)
      fail(errc::rank_mismatch, "the minimum " + labels_[v] + " must have rank 0");

  words_ = (size_ + 63) / 64;
  below_.assign(static_cast<size_t>(size_) * words_, 0);
  above_.assign(static_cast<size_t>(size_) * words_, 0);
  even_rank_mask_.assign(words_, 0);
  for (int v = 0; v < size_; ++v)
    if (rank_[v] % 2 == 0) even_rank_mask_[v / 64] |= uint64_t{1} << (v % 64);

  std::vector<int> order = elements_by_rank();
  for (int v : order) {
    uint64_t* row = &below_[static_cast<size_t>(v) * words_];
    row[v / 64] |= uint64_t{1} << (v % 64);
    for (int u : down_[v]) {
      const uint64_t* urow = &below_[static_cast<size_t>(u) * words_];
      for (int w = 0; w < words_; ++w) row[w] |= urow[w];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    uint64_t* row = &above_[static_cast<size_t>(v) * words_];
    row[v / 64] |= uint64_t{1} << (v % 64);
    for (int u : up_[v]) {
      const uint64_t* urow = &above_[static_cast<size_t>(u) * words_];
      for (int w = 0; w < words_; ++w) row[w] |= urow[w];
    }
  }
}

int Poset::minimum() const {
  if (is_empty()) fail(errc::no_minimum, "the empty poset has no minimum");
  for (int v = 0; v < size_; ++v)
    if (rank_[v] == 0) return v;
  fail(errc::no_minimum, "no rank-0 element");
}

bool Poset::less_equal(int u, int v) const {
  return (below_[static_cast<size_t>(v) * words_ + u / 64] >> (u % 64)) & 1;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < size_; ++v)
    for (int w : up_[v]) out.emplace_back(v, w);
  return out;
}

std::vector<int> Poset::elements_by_rank() const {
  std::vector<int> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rank_[a] < rank_[b]; });
  return order;
}

std::vector<int> Poset::elements_of_rank(int r) const {
  std::vector<int> out;
  for (int v = 0; v < size_; ++v)
    if (rank_[v] == r) out.push_back(v);
  return out;
}

std::vector<long long> Poset::f_vector() const {
  std::vector<long long> f(max_rank_ + 1, 0);
  for (int v = 0; v < size_; ++v) ++f[rank_[v]];
  return f;  // index i holds f_{i-1}
}

std::optional<int> Poset::unique_maximum() const {
  int found = -1;
  for (int v = 0; v < size_; ++v)
    if (up_[v].empty()) {
      if (found >= 0) return std::nullopt;
      found = v;
    }
  if (found < 0) return std::nullopt;
  return found;
}

bool Poset::is_graded() const {
  int c = load_tristate(graded_);
  if (c >= 0) return c;
  // Ranks step by one along covers and the minimum is unique, so all maximal
  // chains are saturated; gradedness reduces to having a unique maximum.
  bool ok = !is_empty() && unique_maximum().has_value();
  store_tristate(graded_, ok);
  return ok;
}

long long Poset::interval_alternating_sum(int u, int v) const {
  const uint64_t* ur = &above_[static_cast<size_t>(u) * words_];
  const uint64_t* vr = &below_[static_cast<size_t>(v) * words_];
  long long sum = 0;
  for (int w = 0; w < words_; ++w) {
    uint64_t both = ur[w] & vr[w];
    sum += std::popcount(both & even_rank_mask_[w]);
    sum -= std::popcount(both & ~even_rank_mask_[w]);
  }
  return sum;
}

std::optional<std::pair<int, int>> Poset::eulerian_witness() const {
  for (int u = 0; u < size_; ++u)
    for (int v = 0; v < size_; ++v)
      if (u != v && less_equal(u, v) && interval_alternating_sum(u, v) != 0)
        return std::make_pair(u, v);
  return std::nullopt;
}

bool Poset::is_eulerian() const {
  int c = load_tristate(eulerian_);
  if (c >= 0) return c;
  bool ok = is_graded() && !eulerian_witness().has_value();
  store_tristate(eulerian_, ok);
  return ok;
}

bool Poset::is_lower_eulerian() const {
  int c = load_tristate(lower_eulerian_);
  if (c >= 0) return c;
  // Every [0,p] is graded automatically; the alternating-sum condition over
  // all intervals of P is exactly the condition over all intervals of all
  // principal lower sets.
  bool ok = !is_empty() && !eulerian_witness().has_value();
  store_tristate(lower_eulerian_, ok);
  return ok;
}

bool Poset::interval_is_boolean(int u, int v) const {
  int r = rank_[v] - rank_[u];
  std::vector<int> members;
  const uint64_t* ur = &above_[static_cast<size_t>(u) * words_];
  const uint64_t* vr = &below_[static_cast<size_t>(v) * words_];
  for (int z = 0; z < size_; ++z)
    if (((ur[z / 64] & vr[z / 64]) >> (z % 64)) & 1) members.push_back(z);
  if (r > 30 || members.size() != (size_t{1} << r)) return false;
  std::vector<int> atoms;
  for (int z : members)
    if (rank_[z] == rank_[u] + 1) atoms.push_back(z);
  if (static_cast<int>(atoms.size()) != r) return false;
  // The atom-support map must be an order isomorphism onto the subset lattice.
  std::vector<uint32_t> support(members.size(), 0);
  std::set<uint32_t> images;
  for (size_t zi = 0; zi < members.size(); ++zi) {
    for (size_t ai = 0; ai < atoms.size(); ++ai)
      if (less_equal(atoms[ai], members[zi])) support[zi] |= uint32_t{1} << ai;
    images.insert(support[zi]);
  }
  if (images.size() != members.size()) return false;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      bool sub = (support[i] & support[j]) == support[i];
      if (sub != less_equal(members[i], members[j])) return false;
    }
  return true;
}

bool Poset::is_simplicial() const {
  int c = load_tristate(simplicial_);
  if (c >= 0) return c;
  if (!is_graded()) fail(errc::not_graded, "simplicial test needs a unique maximum");
  int top = *unique_maximum();
  int bottom = minimum();
  bool ok = true;
  for (int t = 0; t < size_ && ok; ++t)
    if (t != top) ok = interval_is_boolean(bottom, t);
  store_tristate(simplicial_, ok);
  return ok;
}

bool Poset::is_dual_simplicial() const {
  int c = load_tristate(dual_simplicial_);
  if (c >= 0) return c;
  bool ok = dual(*this).is_simplicial();
  store_tristate(dual_simplicial_, ok);
  return ok;
}

int Poset::find_element(const std::string& label) const {
  for (int v = 0; v < size_; ++v)
    if (labels_[v] == label) return v;
  return -1;
}

Poset Poset::induced(const std::vector<int>& keep) const {
  Poset out;
  if (keep.empty()) return out;
  std::vector<int> remap(size_, -1);
  out.size_ = static_cast<int>(keep.size());
  for (int i = 0; i < out.size_; ++i) remap[keep[i]] = i;
  int base_rank = rank_[keep[0]];
  for (int v : keep) base_rank = std::min(base_rank, rank_[v]);
  out.labels_.reserve(keep.size());
  out.rank_.reserve(keep.size());
  for (int v : keep) {
    out.labels_.push_back(labels_[v]);
    out.rank_.push_back(rank_[v] - base_rank);
  }
  out.up_.assign(out.size_, {});
  out.down_.assign(out.size_, {});
  // Intervals and interiors are convex, so covers restrict to covers.
  for (int v : keep)
    for (int w : up_[v])
      if (remap[w] >= 0) {
        out.up_[remap[v]].push_back(remap[w]);
        out.down_[remap[w]].push_back(remap[v]);
      }
  out.finalize();
  return out;
}

Poset dual(const Poset& p) {
  if (!p.is_graded()) fail(errc::not_graded, "dual requires a graded poset");
  Poset out;
  out.size_ = p.size_;
  out.labels_ = p.labels_;
  out.rank_.resize(p.size_);
  for (int v = 0; v < p.size_; ++v) out.rank_[v] = p.max_rank_ - p.rank_[v];
  out.up_ = p.down_;
  out.down_ = p.up_;
  out.finalize();
  return out;
}

Poset closed_interval(const Poset& p, int u, int v) {
  if (u < 0 || v < 0 || u >= p.size() || v >= p.size())
    fail(errc::index_out_of_range, "interval endpoint out of range");
  if (!p.less_equal(u, v))
    fail(errc::not_comparable, p.label(u) + " is not below " + p.label(v));
  std::vector<int> keep;
  for (int z = 0; z < p.size(); ++z)
    if (p.less_equal(u, z) && p.less_equal(z, v)) keep.push_back(z);
  return p.induced(keep);
}

Poset half_open_interval(const Poset& p, int u, int v) {
  if (u < 0 || v < 0 || u >= p.size() || v >= p.size())
    fail(errc::index_out_of_range, "interval endpoint out of range");
  if (!p.less_equal(u, v))
    fail(errc::not_comparable, p.label(u) + " is not below " + p.label(v));
  std::vector<int> keep;
  for (int z = 0; z < p.size(); ++z)
    if (p.less_equal(u, z) && p.less_equal(z, v) && z != v) keep.push_back(z);
  return p.induced(keep);
}

Poset interior(const Poset& p) {
  if (!p.is_graded()) fail(errc::not_graded, "interior requires a graded poset");
  return half_open_interval(p, p.minimum(), *p.unique_maximum());
}

Poset boolean_algebra(int r) {
  if (r < 0 || r > 14) fail(errc::parameter_out_of_range, "boolean rank must be in [0, 14]");
  std::vector<std::string> names(size_t{1} << r);
  for (uint32_t s = 0; s < (uint32_t{1} << r); ++s) {
    std::string name = "{";
    for (int i = 0; i < r; ++i)
      if ((s >> i) & 1) name += (name.size() > 1 ? "," : "") + std::to_string(i + 1);
    name += "}";
    names[s] = name;
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (uint32_t s = 0; s < (uint32_t{1} << r); ++s)
    for (int i = 0; i < r; ++i)
      if (!((s >> i) & 1)) covers.emplace_back(names[s], names[s | (uint32_t{1} << i)]);
  return Poset::from_covers(covers, {}, {names[0]});
}

Poset cube_lattice(int d) {
  if (d < 1 || d > 9) fail(errc::parameter_out_of_range, "cube dimension must be in [1, 9]");
  // Faces are words over {0,1,*}; the empty face sits below the vertices.
  std::vector<std::string> faces;
  std::string word(d, '0');
  auto gen = [&](auto&& self, int pos) -> void {
    if (pos == d) {
      faces.push_back(word);
      return;
    }
    for (char c : {'0', '1', '*'}) {
      word[pos] = c;
      self(self, pos + 1);
    }
  };
  gen(gen, 0);
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& f : faces) {
    bool vertex = true;
    for (char c : f)
      if (c == '*') vertex = false;
    if (vertex) covers.emplace_back("empty", f);
    for (int i = 0; i < d; ++i)
      if (f[i] != '*') {
        std::string g = f;
        g[i] = '*';
        covers.emplace_back(f, g);
      }
  }
  return Poset::from_covers(covers);
}

Poset cross_polytope_lattice(int d) { return dual(cube_lattice(d)); }

Poset polygon_lattice(int m) {
  if (m < 3) fail(errc::parameter_out_of_range, "a polygon needs at least 3 vertices");
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < m; ++i) {
    std::string v = "v" + std::to_string(i);
    std::string e = "e" + std::to_string(i);
    std::string eprev = "e" + std::to_string((i + m - 1) % m);
    covers.emplace_back("bottom", v);
    covers.emplace_back(v, e);
    covers.emplace_back(v, eprev);
    covers.emplace_back(e, "top");
  }
  return Poset::from_covers(covers);
}

Poset chain(int k) {
  if (k < 0) fail(errc::parameter_out_of_range, "chain length must be nonnegative");
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < k; ++i)
    covers.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  return Poset::from_covers(covers, {}, {"c0"});
}

namespace {

bool extend_isomorphism(const Poset& p, const Poset& q, std::vector<int>& map,
                        std::vector<char>& used, int next) {
  if (next == p.size()) return true;
  for (int cand = 0; cand < q.size(); ++cand) {
    if (used[cand] || q.rank(cand) != p.rank(next)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (p.less_equal(prev, next) != q.less_equal(map[prev], cand)) ok = false;
      if (p.less_equal(next, prev) != q.less_equal(cand, map[prev])) ok = false;
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_isomorphism(p, q, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.max_rank() != q.max_rank()) return false;
  if (p.f_vector() != q.f_vector()) return false;
  std::vector<int> map(p.size(), -1);
  std::vector<char> used(q.size(), 0);
  return extend_isomorphism(p, q, map, used, 0);
}

Poset random_ranked_poset(std::mt19937_64& rng, int max_elements) {
  if (max_elements < 2) fail(errc::parameter_out_of_range, "need room for at least 2 elements");
  int extra = 1 + static_cast<int>(rng() % (max_elements - 1));
  int height = 1 + static_cast<int>(rng() % std::min(extra, 5));
  std::vector<int> level_sizes(height, 1);
  for (int i = extra - height; i > 0; --i) ++level_sizes[rng() % height];

  std::vector<std::vector<std::string>> levels(height + 1);
  levels[0] = {"p0"};
  int counter = 1;
  for (int l = 1; l <= height; ++l)
    for (int i = 0; i < level_sizes[l - 1]; ++i)
      levels[l].push_back("p" + std::to_string(counter++));

  std::vector<std::pair<std::string, std::string>> covers;
  for (int l = 1; l <= height; ++l)
    for (const auto& el : levels[l]) {
      uint64_t mask = 0;
      size_t prev = levels[l - 1].size();
      while (mask == 0) mask = rng() & ((uint64_t{1} << prev) - 1);
      for (size_t i = 0; i < prev; ++i)
        if ((mask >> i) & 1) covers.emplace_back(levels[l - 1][i], el);
    }
  return Poset::from_covers(covers);
}

}  // namespace shorttoric
