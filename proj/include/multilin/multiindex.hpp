#pragma once

/**
 * @file multiindex.hpp
 * @brief Multi-indices, strictly increasing index tuples, permutations and
 * shuffle sets.
 *
 * Layout contract: the weight-p multi-indices of I_n are ranked in graded
 * order (within one weight, a larger first entry comes first, ties broken by
 * the next entry, and so on). Strict indices of J_n(p) are ranked
 * co-lexicographically (compare the last entry first). Both ranks are
 * computed combinatorially.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "multilin/errors.hpp"
#include "multilin/rational.hpp"

namespace multilin {

/// Number of weight-`weight` multi-indices with `parts` entries:
/// C(weight + parts - 1, parts - 1), and {0} when parts = 0.
inline std::size_t stratum_size(int parts, int weight) {
  if (parts < 0 || weight < 0) return 0;
  if (parts == 0) return weight == 0 ? 1 : 0;
  // C(weight + parts - 1, parts - 1), accumulated exactly.
  std::uint64_t r = 1;
  int k = std::min(parts - 1, weight);
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(weight + parts - 1 - k + i) / static_cast<std::uint64_t>(i);
  }
  return static_cast<std::size_t>(r);
}

/// C(n, k) as a size.
inline std::size_t choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return static_cast<std::size_t>(r);
}

class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_) {
      if (v < 0) throw DomainError("multi-index entries must be nonnegative");
    }
  }
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  /// e_i, 0-based coordinate i.
  static MultiIndex unit(int n, int i) {
    auto m = zero(n);
    m.e_.at(static_cast<std::size_t>(i)) = 1;
    return m;
  }

  int size() const { return static_cast<int>(e_.size()); }
  int weight() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  /// alpha! = alpha_1! alpha_2! ... alpha_n!
  Integer factorial() const {
    Integer r = 1;
    for (int v : e_) r *= multilin::factorial(v);
    return r;
  }

  /// Coordinatewise domination: *this << other.
  bool dominated_by(const MultiIndex& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    a.check_same_size(b);
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }

  /// Requires b << a.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    if (!b.dominated_by(a)) throw DomainError("multi-index difference leaves I_n");
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + std::to_string(e_[i]);
    return s + ")";
  }

  void check_same_size(const MultiIndex& other) const {
    if (e_.size() != other.e_.size()) {
      throw DimensionError("multi-index length mismatch: " + std::to_string(e_.size()) + " vs " +
                           std::to_string(other.e_.size()));
    }
  }

 private:
  std::vector<int> e_;
};

/// The graded total order on I_n.
inline std::strong_ordering compare_graded(const MultiIndex& a, const MultiIndex& b) {
  a.check_same_size(b);
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];  // larger entry sorts first
  }
  return std::strong_ordering::equal;
}

/// Position of `a` among all weight-|a| indices of I_n in graded order.
inline std::size_t rank_index(const MultiIndex& a) {
  const int n = a.size();
  int remaining = a.weight();
  std::size_t pos = 0;
  for (int i = 0; i + 1 < n; ++i) {
    // Indices agreeing on coordinates < i and larger at i precede `a`.
    for (int v = a[i] + 1; v <= remaining; ++v) pos += stratum_size(n - i - 1, remaining - v);
    remaining -= a[i];
  }
  return pos;
}

inline MultiIndex unrank_index(int n, int weight, std::size_t position) {
  if (n < 0 || weight < 0) throw DomainError("unrank_index: negative dimension or weight");
  if (position >= stratum_size(n, weight)) {
    throw DomainError("unrank_index: position " + std::to_string(position) + " out of range");
  }
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  int remaining = weight;
  for (int i = 0; i + 1 < n; ++i) {
    int v = remaining;
    for (;; --v) {
      std::size_t block = stratum_size(n - i - 1, remaining - v);
      if (position < block) break;
      position -= block;
    }
    e[static_cast<std::size_t>(i)] = v;
    remaining -= v;
  }
  if (n > 0) e.back() = remaining;
  return MultiIndex(std::move(e));
}

/// All weight-p indices of I_n in graded order.
inline std::vector<MultiIndex> enumerate_stratum(int n, int weight) {
  std::vector<MultiIndex> out;
  const std::size_t count = stratum_size(n, weight);
  out.reserve(count);
  if (count == 0) return out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  e[0] = weight;
  for (;;) {
    out.emplace_back(e);
    // Step to the graded successor: move one unit from the last nonzero
    // non-final coordinate to the right and collect the tail behind it.
    int j = n - 2;
    while (j >= 0 && e[static_cast<std::size_t>(j)] == 0) --j;
    if (j < 0) break;
    int tail = e[static_cast<std::size_t>(n - 1)];
    e[static_cast<std::size_t>(n - 1)] = 0;
    --e[static_cast<std::size_t>(j)];
    e[static_cast<std::size_t>(j + 1)] = tail + 1;
  }
  return out;
}

/// alpha! / (beta! (alpha - beta)!), and zero unless beta << alpha.
inline Integer multi_binomial(const MultiIndex& a, const MultiIndex& b) {
  a.check_same_size(b);
  Integer r = 1;
  for (int i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return 0;
    r *= binomial(a[i], b[i]);
  }
  return r;
}

/// |alpha|! / alpha!
inline Integer multinomial(const MultiIndex& a) { return factorial(a.weight()) / a.factorial(); }

// ---------------------------------------------------------------------------

/// A strictly increasing tuple 1 <= a_1 < ... < a_p <= n (an element of J_n(p)).
class StrictIndex {
 public:
  StrictIndex() = default;

  StrictIndex(std::vector<int> entries, int n) : e_(std::move(entries)) {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] < 1 || e_[i] > n) throw DomainError("strict index entry out of 1.." + std::to_string(n));
      if (i > 0 && e_[i - 1] >= e_[i]) throw DomainError("strict index entries must strictly increase");
    }
  }

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  friend bool operator==(const StrictIndex&, const StrictIndex&) = default;

 private:
  std::vector<int> e_;
};

/// Co-lexicographic rank within J_n(p): sum of C(a_i - 1, i).
inline std::size_t rank_strict(const std::vector<int>& sorted_entries) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < sorted_entries.size(); ++i) {
    r += choose(sorted_entries[i] - 1, static_cast<int>(i + 1));
  }
  return r;
}

inline std::size_t rank_strict(const StrictIndex& a) { return rank_strict(a.entries()); }

inline StrictIndex unrank_strict(int n, int p, std::size_t position) {
  if (position >= choose(n, p)) throw DomainError("unrank_strict: position out of range");
  std::vector<int> e(static_cast<std::size_t>(p));
  for (int i = p; i >= 1; --i) {
    int c = i - 1;
    while (choose(c + 1, i) <= position) ++c;
    position -= choose(c, i);
    e[static_cast<std::size_t>(i - 1)] = c + 1;
  }
  return StrictIndex(std::move(e), n);
}

/// J_n(p) in co-lexicographic order.
inline std::vector<StrictIndex> enumerate_strict(int n, int p) {
  std::vector<StrictIndex> out;
  const std::size_t count = choose(n, p);
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) out.push_back(unrank_strict(n, p, r));
  return out;
}

// ---------------------------------------------------------------------------

/// A bijection of {1..m}; images()[i-1] is the image of i.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
        throw DomainError("not a permutation of 1.." + std::to_string(size()));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    int inversions = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      for (std::size_t j = i + 1; j < img_.size(); ++j) inversions += img_[i] > img_[j];
    }
    sign_ = inversions % 2 ? -1 : 1;
  }

  static Permutation identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int sign() const { return sign_; }
  /// 1-based application.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(v));
  }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DimensionError("composing permutations of different sizes");
    std::vector<int> v(a.img_.size());
    for (int i = 1; i <= b.size(); ++i) v[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }

 private:
  std::vector<int> img_;
  int sign_ = 1;
};

/// True if `s` increases on each consecutive block of the given sizes and,
/// for every block flagged in `fixed`, maps the block onto itself identically.
inline bool is_block_shuffle(const Permutation& s, const std::vector<int>& blocks,
                             const std::vector<bool>& fixed = {}) {
  int total = std::accumulate(blocks.begin(), blocks.end(), 0);
  if (total != s.size()) return false;
  int start = 1;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int i = start; i < start + blocks[b]; ++i) {
      if (i > start && s(i - 1) >= s(i)) return false;
      if (b < fixed.size() && fixed[b] && s(i) != i) return false;
    }
    start += blocks[b];
  }
  return true;
}

/// S_{[b1]+[b2]+...}: permutations increasing on each block, ordered
/// lexicographically by their image sequences.
inline std::vector<Permutation> block_shuffles(const std::vector<int>& blocks) {
  for (int b : blocks) {
    if (b < 0) throw DomainError("negative shuffle block size");
  }
  const int m = std::accumulate(blocks.begin(), blocks.end(), 0);
  // A shuffle is determined by which block each value 1..m belongs to; the
  // image sequence is lexicographically ordered by the label word.
  std::vector<int> labels;
  for (std::size_t b = 0; b < blocks.size(); ++b) labels.insert(labels.end(), static_cast<std::size_t>(blocks[b]), static_cast<int>(b));
  std::vector<Permutation> out;
  do {
    std::vector<std::vector<int>> members(blocks.size());
    for (int v = 1; v <= m; ++v) members[static_cast<std::size_t>(labels[static_cast<std::size_t>(v - 1)])].push_back(v);
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(m));
    for (auto& mem : members) img.insert(img.end(), mem.begin(), mem.end());
    out.emplace_back(std::move(img));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end(),
            [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); });
  return out;
}

/// S_{[p]+[q]}.
inline std::vector<Permutation> shuffles(int p, int q) { return block_shuffles({p, q}); }

/// Splits s0 in S_{[p]+[q]+[r]} as sigma * tau with sigma in S_{[p]+[q+r]} and
/// tau in S_{(p)+[q]+[r]} (first block held fixed).
inline std::pair<Permutation, Permutation> shuffle_decompose(const Permutation& s0, int p, int q, int r) {
  if (!is_block_shuffle(s0, {p, q, r})) throw DomainError("permutation is not a (p,q,r)-shuffle");
  std::vector<int> img = s0.images();
  std::sort(img.begin() + p, img.end());
  Permutation sigma(std::move(img));
  Permutation tau = sigma.inverse() * s0;
  return {sigma, tau};
}

/// Mirror split: s0 = sigma * tau with sigma in S_{[p+q]+[r]} and tau in
/// S_{[p]+[q]+(r)} (last block held fixed).
inline std::pair<Permutation, Permutation> shuffle_decompose_tail(const Permutation& s0, int p, int q, int r) {
  if (!is_block_shuffle(s0, {p, q, r})) throw DomainError("permutation is not a (p,q,r)-shuffle");
  std::vector<int> img = s0.images();
  std::sort(img.begin(), img.begin() + p + q);
  Permutation sigma(std::move(img));
  Permutation tau = sigma.inverse() * s0;
  return {sigma, tau};
}

}  // namespace multilin
