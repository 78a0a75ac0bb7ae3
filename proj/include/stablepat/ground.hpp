#pragma once

// Subsets of a finite ground set {1..m} and naturally ordered partitions.
//
// Subsets are bit fields: element e lives in bit e-1. Partitions are stored as
// restricted growth words (element -> 0-based block index) plus block masks.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "stablepat/bigint.hpp"
#include "stablepat/errors.hpp"

namespace stablepat {

/// Largest supported ground set; subsets must fit in a 32-bit mask.
inline constexpr int kMaxGround = 30;

using Mask = std::uint32_t;

inline constexpr Mask full_mask(int m) { return m >= 32 ? ~Mask{0} : (Mask{1} << m) - 1; }

inline int popcount(Mask a) { return std::popcount(a); }

namespace detail {

inline void check_ground(int m, const char* who) {
  if (m < 1 || m > kMaxGround)
    throw UsageError(std::string(who) + ": ground size must lie in 1.." + std::to_string(kMaxGround) +
                     ", got " + std::to_string(m));
}

}  // namespace detail

class GroundSubset {
 public:
  GroundSubset() = default;

  GroundSubset(int m, std::initializer_list<int> members) : GroundSubset(m, std::span<const int>(members)) {}

  GroundSubset(int m, std::span<const int> members) : m_(m) {
    detail::check_ground(m, "GroundSubset");
    for (int e : members) {
      if (e < 1 || e > m)
        throw UsageError("GroundSubset: member " + std::to_string(e) + " outside 1.." + std::to_string(m));
      mask_ |= Mask{1} << (e - 1);
    }
  }

  static GroundSubset from_mask(int m, Mask mask) {
    detail::check_ground(m, "GroundSubset");
    if ((mask & ~full_mask(m)) != 0) throw UsageError("GroundSubset: mask has bits beyond ground size");
    GroundSubset g;
    g.m_ = m;
    g.mask_ = mask;
    return g;
  }

  static GroundSubset full(int m) { return from_mask(m, full_mask(m)); }
  static GroundSubset empty_set(int m) { return from_mask(m, 0); }

  int ground() const noexcept { return m_; }
  Mask mask() const noexcept { return mask_; }
  bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept { return popcount(mask_); }
  bool contains(int e) const noexcept { return e >= 1 && e <= m_ && ((mask_ >> (e - 1)) & 1U); }
  bool is_full() const noexcept { return mask_ == full_mask(m_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (Mask a = mask_; a != 0; a &= a - 1) out.push_back(std::countr_zero(a) + 1);
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int e : members()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;
  friend auto operator<=>(const GroundSubset& a, const GroundSubset& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  int m_ = 0;
  Mask mask_ = 0;
};

/// A naturally ordered partition (C_1..C_k) of {1..s}: min C_i < min C_j for i < j.
class OrderedPartition {
 public:
  OrderedPartition() = default;

  /// `word[e-1]` is the 0-based block of element e. The word must be a restricted
  /// growth string, which is exactly the natural-order condition.
  static OrderedPartition from_word(std::span<const std::uint8_t> word) {
    const int s = static_cast<int>(word.size());
    detail::check_ground(s, "OrderedPartition");
    OrderedPartition p;
    p.word_.assign(word.begin(), word.end());
    int next = 0;
    for (int e = 0; e < s; ++e) {
      const int b = word[static_cast<std::size_t>(e)];
      if (b > next) throw UsageError("OrderedPartition: blocks are not naturally ordered");
      if (b == next) {
        ++next;
        p.blocks_.push_back(0);
      }
      p.blocks_[static_cast<std::size_t>(b)] |= Mask{1} << e;
    }
    return p;
  }

  /// Builds from explicit blocks; they must be nonempty, disjoint, cover {1..s}
  /// and already be in natural order.
  static OrderedPartition from_blocks(int s, const std::vector<std::vector<int>>& blocks) {
    detail::check_ground(s, "OrderedPartition");
    std::vector<std::uint8_t> word(static_cast<std::size_t>(s), 0xFF);
    int prev_min = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw UsageError("OrderedPartition: empty block");
      const int mn = *std::min_element(blocks[b].begin(), blocks[b].end());
      if (mn <= prev_min) throw UsageError("OrderedPartition: blocks are not naturally ordered");
      prev_min = mn;
      for (int e : blocks[b]) {
        if (e < 1 || e > s) throw UsageError("OrderedPartition: element " + std::to_string(e) + " out of range");
        auto& slot = word[static_cast<std::size_t>(e - 1)];
        if (slot != 0xFF) throw UsageError("OrderedPartition: blocks overlap at " + std::to_string(e));
        slot = static_cast<std::uint8_t>(b);
      }
    }
    if (std::find(word.begin(), word.end(), std::uint8_t{0xFF}) != word.end())
      throw UsageError("OrderedPartition: blocks do not cover 1.." + std::to_string(s));
    return from_word(word);
  }

  int ground() const noexcept { return static_cast<int>(word_.size()); }
  int size() const noexcept { return static_cast<int>(blocks_.size()); }

  const std::vector<std::uint8_t>& word() const noexcept { return word_; }
  const std::vector<Mask>& block_masks() const noexcept { return blocks_; }

  /// 1-based block index of 1-based element e.
  int block_of(int e) const { return word_.at(static_cast<std::size_t>(e - 1)) + 1; }

  GroundSubset block(int i) const { return GroundSubset::from_mask(ground(), blocks_.at(static_cast<std::size_t>(i - 1))); }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    for (Mask b : blocks_) out.push_back(GroundSubset::from_mask(ground(), b).members());
    return out;
  }

  /// {j : C_j meets a}, as a mask over {1..k}.
  Mask project_mask(Mask a) const noexcept {
    Mask out = 0;
    for (; a != 0; a &= a - 1) out |= Mask{1} << word_[static_cast<std::size_t>(std::countr_zero(a))];
    return out;
  }

  bool is_naturally_ordered() const {
    for (std::size_t i = 1; i < blocks_.size(); ++i)
      if (std::countr_zero(blocks_[i - 1]) >= std::countr_zero(blocks_[i])) return false;
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 1; i <= size(); ++i) {
      if (i > 1) s += ",";
      s += block(i).str();
    }
    return s + ")";
  }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  friend auto operator<=>(const OrderedPartition& a, const OrderedPartition& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<std::uint8_t> word_;
  std::vector<Mask> blocks_;
};

/// Compares membership words from the last element backwards; the larger word
/// comes first. This is the enumeration order of Π(s, k) used everywhere.
inline bool partition_order_less(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

/// All of Π(s, k), each exactly once, in deterministic order. |result| = S(s, k).
inline std::vector<OrderedPartition> enumerate_partitions(int s, int k) {
  if (s < 1 || s > kMaxGround || k < 1 || k > s)
    throw UsageError("enumerate_partitions: need 1 <= k <= s <= " + std::to_string(kMaxGround) + ", got s=" +
                     std::to_string(s) + " k=" + std::to_string(k));
  std::vector<std::vector<std::uint8_t>> words;
  std::vector<std::uint8_t> w(static_cast<std::size_t>(s));
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == s) {
      if (used == k) words.push_back(w);
      return;
    }
    if (k - used > s - i) return;
    for (int b = 0; b <= std::min(used, k - 1); ++b) {
      w[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b);
      self(self, i + 1, b == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
  std::sort(words.begin(), words.end(), partition_order_less);
  std::vector<OrderedPartition> out;
  out.reserve(words.size());
  for (const auto& word : words) out.push_back(OrderedPartition::from_word(word));
  return out;
}

/// Shared, immutable copy of enumerate_partitions(s, k). Safe across threads.
inline const std::vector<OrderedPartition>& cached_partitions(int s, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<OrderedPartition>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{s, k}];
  if (!slot) slot = std::make_unique<const std::vector<OrderedPartition>>(enumerate_partitions(s, k));
  return *slot;
}

/// table[a] = gamma.project_mask(a) for every a < 2^s.
inline std::vector<Mask> projection_table(const OrderedPartition& gamma) {
  const int s = gamma.ground();
  if (s > 20) throw UsageError("projection_table: ground size " + std::to_string(s) + " too large for a table");
  std::vector<Mask> t(std::size_t{1} << s, 0);
  for (std::size_t a = 1; a < t.size(); ++a) {
    const Mask low = static_cast<Mask>(a & (~a + 1));
    t[a] = t[a & (a - 1)] | (Mask{1} << gamma.word()[static_cast<std::size_t>(std::countr_zero(low))]);
  }
  return t;
}

/// γ_β: block j of the result is the union of γ's blocks indexed by β's block j.
inline OrderedPartition amalgamate(const OrderedPartition& gamma, const OrderedPartition& beta) {
  if (beta.ground() != gamma.size())
    throw UsageError("amalgamate: beta partitions " + std::to_string(beta.ground()) + " elements but gamma has " +
                     std::to_string(gamma.size()) + " blocks");
  std::vector<std::uint8_t> w(gamma.word().size());
  for (std::size_t e = 0; e < w.size(); ++e) w[e] = beta.word()[gamma.word()[e]];
  return OrderedPartition::from_word(w);
}

/// γ_{i,j} over {1..m+1}: i and j share a block, every other element is a singleton.
inline OrderedPartition merge_pair(int m_plus_one, int i, int j) {
  if (m_plus_one < 2 || m_plus_one > kMaxGround || i < 1 || i >= j || j > m_plus_one)
    throw UsageError("merge_pair: need 1 <= i < j <= " + std::to_string(m_plus_one));
  std::vector<std::uint8_t> w(static_cast<std::size_t>(m_plus_one));
  std::uint8_t next = 0;
  for (int e = 1; e <= m_plus_one; ++e) w[static_cast<std::size_t>(e - 1)] = e == j ? w[static_cast<std::size_t>(i - 1)] : next++;
  return OrderedPartition::from_word(w);
}

/// A ↦ A⁺ over {1..m+1}.
inline GroundSubset shift_up(const GroundSubset& a) {
  return GroundSubset::from_mask(a.ground() + 1, a.mask() << 1);
}

/// A ↦ A⁻ over {1..m-1}; requires 1 ∉ A.
inline GroundSubset shift_down(const GroundSubset& a) {
  if (a.contains(1)) throw DomainError("shift_down: set " + a.str() + " contains 1");
  if (a.ground() < 2) throw UsageError("shift_down: ground size must be at least 2");
  return GroundSubset::from_mask(a.ground() - 1, a.mask() >> 1);
}

/// D_j: members below j stay, members >= j move up by one. The result misses j.
inline GroundSubset insert_gap(int j, const GroundSubset& a) {
  const int m = a.ground();
  if (j < 1 || j > m + 1) throw UsageError("insert_gap: j must lie in 1.." + std::to_string(m + 1));
  const Mask low = full_mask(j - 1);
  return GroundSubset::from_mask(m + 1, (a.mask() & low) | ((a.mask() & ~low) << 1));
}

/// p_γ(A) = {j : C_j ∩ A ≠ ∅}.
inline GroundSubset project_subset(const OrderedPartition& gamma, const GroundSubset& a) {
  if (a.ground() != gamma.ground())
    throw UsageError("project_subset: subset over " + std::to_string(a.ground()) + " but partition of " +
                     std::to_string(gamma.ground()));
  if (a.empty()) throw DomainError("project_subset: empty set");
  return GroundSubset::from_mask(gamma.size(), gamma.project_mask(a.mask()));
}

/// Every nonempty A over {1..s} whose projection is q, as masks in ascending order.
inline std::vector<Mask> preimage_masks(const OrderedPartition& gamma, Mask q) {
  std::vector<Mask> out{0};
  for (Mask rest = q; rest != 0; rest &= rest - 1) {
    const Mask block = gamma.block_masks()[static_cast<std::size_t>(std::countr_zero(rest))];
    std::vector<Mask> next;
    // nonempty submasks of the block
    for (Mask sub = block; sub != 0; sub = (sub - 1) & block)
      for (Mask base : out) next.push_back(base | sub);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<GroundSubset> preimage_subsets(const OrderedPartition& gamma, const GroundSubset& q) {
  if (q.ground() != gamma.size())
    throw UsageError("preimage_subsets: subset over " + std::to_string(q.ground()) + " but partition has " +
                     std::to_string(gamma.size()) + " blocks");
  if (q.empty()) throw DomainError("preimage_subsets: empty set");
  std::vector<GroundSubset> out;
  for (Mask a : preimage_masks(gamma, q.mask())) out.push_back(GroundSubset::from_mask(gamma.ground(), a));
  return out;
}

/// {1..m} \ a, ascending.
inline std::vector<int> holes(const GroundSubset& a) {
  return GroundSubset::from_mask(a.ground(), full_mask(a.ground()) & ~a.mask()).members();
}

/// e(a): the smallest hole.
inline int first_hole(const GroundSubset& a) {
  const Mask h = full_mask(a.ground()) & ~a.mask();
  if (h == 0) throw DomainError("first_hole: " + a.str() + " is the full set and has no holes");
  return std::countr_zero(h) + 1;
}

inline int first_hole_of_mask(Mask a, int m) {
  const Mask h = full_mask(m) & ~a;
  return h == 0 ? 0 : std::countr_zero(h) + 1;
}

}  // namespace stablepat
