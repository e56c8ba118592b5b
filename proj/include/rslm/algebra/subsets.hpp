#ifndef RSLM_ALGEBRA_SUBSETS_HPP_
#define RSLM_ALGEBRA_SUBSETS_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rslm {

/// Strictly increasing 0-based index set.
using Subset = std::vector<std::uint32_t>;

/// Binomial coefficient in 64 bits; throws on overflow. Zero when k > n.
inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // r * num / i is exact at every step
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      const std::uint64_t g = r / i;
      if (g * i == r) {
        if (g > std::numeric_limits<std::uint64_t>::max() / num) throw std::overflow_error("binom_u64 overflow");
        r = g * num;
        continue;
      }
      throw std::overflow_error("binom_u64 overflow");
    }
    r = r * num / i;
  }
  return r;
}

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  if (k > n) return;
  Subset s(k);
  for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    fn(static_cast<const Subset&>(s));
    if (k == 0) return;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && s[i] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) return;
    ++s[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

inline std::vector<Subset> all_subsets(std::uint32_t n, std::uint32_t k) {
  std::vector<Subset> out;
  for_each_subset(n, k, [&](const Subset& s) { out.push_back(s); });
  return out;
}

/// 1-based position of t in the sorted set s (t must be a member).
inline std::uint32_t position(std::uint32_t t, const Subset& s) {
  for (std::uint32_t i = 0; i < s.size(); ++i)
    if (s[i] == t) return i + 1;
  throw std::invalid_argument("position: element not in set");
}

inline bool contains(const Subset& s, std::uint32_t t) {
  for (auto v : s)
    if (v == t) return true;
  return false;
}

/// Sorted union s + {t} (t not in s).
inline Subset insert_sorted(const Subset& s, std::uint32_t t) {
  Subset out;
  out.reserve(s.size() + 1);
  bool placed = false;
  for (auto v : s) {
    if (!placed && t < v) {
      out.push_back(t);
      placed = true;
    }
    out.push_back(v);
  }
  if (!placed) out.push_back(t);
  return out;
}

inline Subset erase_value(const Subset& s, std::uint32_t t) {
  Subset out;
  out.reserve(s.size());
  for (auto v : s)
    if (v != t) out.push_back(v);
  return out;
}

/// Lexicographic ranking of the k-subsets of {0..n-1}.
class SubsetIndexer {
 public:
  SubsetIndexer(std::uint32_t n, std::uint32_t k) : n_(n), k_(k), count_(binom_u64(n, k)) {
    table_.assign(static_cast<std::size_t>(n + 1) * (k + 2), 0);
    for (std::uint32_t a = 0; a <= n; ++a)
      for (std::uint32_t b = 0; b <= k + 1; ++b) table_[a * (k + 2) + b] = binom_u64(a, b);
  }

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t count() const { return count_; }

  std::uint64_t rank(const Subset& s) const {
    // colex rank of the reflected set, then complement the order
    std::uint64_t colex = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      const std::uint32_t c = n_ - 1 - s[k_ - 1 - i];
      colex += choose(c, i + 1);
    }
    return count_ - 1 - colex;
  }

  Subset unrank(std::uint64_t r) const {
    Subset s;
    s.reserve(k_);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      for (std::uint32_t v = next;; ++v) {
        const std::uint64_t block = choose(n_ - 1 - v, k_ - 1 - i);
        if (r < block) {
          s.push_back(v);
          next = v + 1;
          break;
        }
        r -= block;
      }
    }
    return s;
  }

 private:
  std::uint64_t choose(std::uint32_t a, std::uint32_t b) const {
    if (b > k_ + 1) return binom_u64(a, b);
    return table_[a * (k_ + 2) + b];
  }

  std::uint32_t n_;
  std::uint32_t k_;
  std::uint64_t count_;
  std::vector<std::uint64_t> table_;
};

}  // namespace rslm

#endif  // RSLM_ALGEBRA_SUBSETS_HPP_
