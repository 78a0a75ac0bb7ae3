#pragma once

// Stabilizing-partition search, monochromatic-partition search, and the strong
// dual Ramsey recursion over supplied dual Ramsey values.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "stablepat/bigint.hpp"
#include "stablepat/errors.hpp"
#include "stablepat/ground.hpp"
#include "stablepat/parallel.hpp"
#include "stablepat/pattern.hpp"
#include "stablepat/stability.hpp"

namespace stablepat {

inline constexpr std::uint64_t kDefaultPartitionBudget = 1'000'000;

/// Supplies DR(k, m, r). Lookups of unknown keys are errors.
class DrOracle {
 public:
  using Key = std::tuple<BigInt, BigInt, BigInt>;
  using Fn = std::function<BigInt(const BigInt& k, const BigInt& m, const BigInt& r)>;

  DrOracle() = default;

  static DrOracle from_table(std::map<Key, BigInt> table) {
    for (const auto& [key, v] : table)
      if (v <= 0) throw UsageError("DrOracle: values must be positive");
    DrOracle o;
    o.table_ = std::move(table);
    return o;
  }

  static DrOracle from_function(Fn fn) {
    DrOracle o;
    o.fn_ = std::move(fn);
    return o;
  }

  BigInt operator()(const BigInt& k, const BigInt& m, const BigInt& r) const {
    if (fn_) {
      BigInt v = fn_(k, m, r);
      if (v <= 0) throw DomainError("DrOracle: non-positive value for " + key_str(k, m, r));
      return v;
    }
    auto it = table_.find({k, m, r});
    if (it == table_.end()) throw DomainError("DrOracle: no value for " + key_str(k, m, r));
    return it->second;
  }

  const std::map<Key, BigInt>& table() const noexcept { return table_; }

  static std::string key_str(const BigInt& k, const BigInt& m, const BigInt& r) {
    return "DR(k=" + to_string(k) + ", m=" + to_string(m) + ", r=" + to_string(r) + ")";
  }

 private:
  std::map<Key, BigInt> table_;
  Fn fn_;
};

struct SdrQuery {
  BigInt k;
  BigInt m;
  BigInt r;
  BigInt n;
};

struct SdrResult {
  BigInt value;
  std::vector<SdrQuery> trace;
};

/// n_2 = DR(2, m, r_2), n_{j+1} = DR(j+1, n_j, r_{j+1}); returns n_{m−1}.
/// `colors` holds r_2, ..., r_{m−1}.
inline SdrResult sdr(int m, const std::vector<BigInt>& colors, const DrOracle& oracle) {
  if (m < 3) throw UsageError("sdr: m must be at least 3");
  if (static_cast<int>(colors.size()) != m - 2)
    throw UsageError("sdr: expected " + std::to_string(m - 2) + " colors r_2..r_" + std::to_string(m - 1) + ", got " +
                     std::to_string(colors.size()));
  SdrResult res;
  BigInt cur = m;
  for (int k = 2; k <= m - 1; ++k) {
    const BigInt& r = colors[static_cast<std::size_t>(k - 2)];
    BigInt next = oracle(k, cur, r);
    res.trace.push_back({k, cur, r, next});
    cur = std::move(next);
  }
  res.value = cur;
  return res;
}

/// 2^((2^k − 1)^n) − 1.
inline BigInt pattern_color_count(int k, int n) { return count_patterns(k, n); }

struct StabilizerResult {
  std::optional<OrderedPartition> partition;
  std::optional<Pattern> induced;
  bool exhausted = false;
  std::uint64_t candidates_tested = 0;

  friend bool operator==(const StabilizerResult&, const StabilizerResult&) = default;
};

namespace detail {

inline void check_partition_budget(int big_n, int target, std::uint64_t budget, const char* who) {
  const BigInt count = stirling2(big_n, target);
  if (count > budget)
    throw BudgetError(std::string(who) + ": S(" + std::to_string(big_n) + "," + std::to_string(target) + ") = " +
                          to_string(count) + " partitions exceeds budget " + std::to_string(budget),
                      to_string(count));
}

// Index of the first i in [0, total) with pred(i), scanning chunks in parallel.
template <class Pred>
std::optional<std::size_t> first_index(std::size_t total, Pred pred) {
  const auto chunks = split_range(total, std::max<std::uint64_t>(1, worker_count() * 4));
  std::optional<std::size_t> best;
  for (std::size_t base = 0; base < chunks.size() && !best; base += worker_count()) {
    const std::size_t wave = std::min<std::size_t>(worker_count(), chunks.size() - base);
    auto hits = parallel_map(wave, [&](std::size_t w) -> std::optional<std::size_t> {
      const auto [b, e] = chunks[base + w];
      for (std::uint64_t i = b; i < e; ++i)
        if (pred(static_cast<std::size_t>(i))) return static_cast<std::size_t>(i);
      return std::nullopt;
    });
    for (const auto& h : hits)
      if (h) {
        best = h;
        break;
      }
  }
  return best;
}

}  // namespace detail

/// First α ∈ Π(N, target) in enumeration order with 𝒫_α target-stable.
inline StabilizerResult find_stabilizing_partition(const Pattern& p, int target,
                                                   std::uint64_t budget = kDefaultPartitionBudget) {
  const int big_n = p.ground();
  if (target < 2 || target > big_n)
    throw UsageError("find_stabilizing_partition: need 2 <= target <= N, got target=" + std::to_string(target) +
                     " N=" + std::to_string(big_n));
  detail::check_partition_budget(big_n, target, budget, "find_stabilizing_partition");
  const auto parts = enumerate_partitions(big_n, target);
  StabilizerResult res;
  auto hit = detail::first_index(parts.size(), [&](std::size_t i) {
    return is_k_stable(induce(p, parts[i]), target).verdict;
  });
  if (hit) {
    res.partition = parts[*hit];
    res.induced = induce(p, parts[*hit]);
    res.candidates_tested = *hit + 1;
  } else {
    res.exhausted = true;
    res.candidates_tested = parts.size();
  }
  return res;
}

/// First α ∈ Π(N, m) whose coarsenings γ_β, β ∈ Π(m, k), all receive one color.
template <class Coloring>
std::optional<OrderedPartition> find_monochromatic_partition(Coloring&& coloring, int big_n, int k, int m,
                                                             std::uint64_t budget = kDefaultPartitionBudget) {
  if (k < 1 || k > m || m > big_n)
    throw UsageError("find_monochromatic_partition: need 1 <= k <= m <= N");
  detail::check_partition_budget(big_n, m, budget, "find_monochromatic_partition");
  const auto parts = enumerate_partitions(big_n, m);
  const auto& betas = cached_partitions(m, k);
  auto hit = detail::first_index(parts.size(), [&](std::size_t i) {
    const auto first = coloring(amalgamate(parts[i], betas[0]));
    for (std::size_t b = 1; b < betas.size(); ++b)
      if (!(coloring(amalgamate(parts[i], betas[b])) == first)) return false;
    return true;
  });
  if (!hit) return std::nullopt;
  return parts[*hit];
}

}  // namespace stablepat
