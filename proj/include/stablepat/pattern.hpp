#pragma once

// m_n-patterns: nonempty sets of n-vectors of nonempty subsets of {1..m}.
//
// A vector is packed into one 64-bit cell, component 0 in the highest m bits,
// so numeric order of cells is lexicographic order of component masks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "stablepat/bigint.hpp"
#include "stablepat/errors.hpp"
#include "stablepat/ground.hpp"

namespace stablepat {

using Cell = std::uint64_t;

class Pattern {
 public:
  Pattern() = default;

  /// Canonicalizes (sort, dedup) and validates.
  Pattern(int m, int n, std::vector<Cell> cells) : m_(m), n_(n), cells_(std::move(cells)) {
    check_shape(m, n);
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    if (cells_.empty()) throw DomainError("Pattern: a pattern must contain at least one vector");
    for (Cell c : cells_) {
      if (n * m < 64 && (c >> (n * m)) != 0) throw UsageError("Pattern: cell has bits beyond n*m");
      for (int i = 0; i < n; ++i)
        if (component(c, i) == 0) throw DomainError("Pattern: vectors may not have empty components");
    }
  }

  static Pattern of_masks(int m, std::vector<Mask> masks) {
    return Pattern(m, 1, std::vector<Cell>(masks.begin(), masks.end()));
  }

  static Pattern of_subsets(int m, const std::vector<std::vector<int>>& subsets) {
    std::vector<Mask> masks;
    for (const auto& s : subsets) masks.push_back(GroundSubset(m, std::span<const int>(s)).mask());
    return of_masks(m, std::move(masks));
  }

  static Pattern of_vectors(int m, int n, const std::vector<std::vector<GroundSubset>>& vectors) {
    check_shape(m, n);
    std::vector<Cell> cells;
    for (const auto& v : vectors) {
      if (static_cast<int>(v.size()) != n) throw UsageError("Pattern: vector has wrong dimension");
      std::vector<Mask> comps;
      for (const auto& g : v) {
        if (g.ground() != m) throw UsageError("Pattern: component ground size mismatch");
        comps.push_back(g.mask());
      }
      cells.push_back(pack(m, comps));
    }
    return Pattern(m, n, std::move(cells));
  }

  static void check_shape(int m, int n) {
    detail::check_ground(m, "Pattern");
    if (n < 1) throw UsageError("Pattern: dimension must be at least 1");
    if (static_cast<long>(n) * m > 64)
      throw UsageError("Pattern: n*m must not exceed 64, got " + std::to_string(n * m));
  }

  static Cell pack(int m, const std::vector<Mask>& comps) {
    Cell c = 0;
    for (Mask a : comps) c = (c << m) | a;
    return c;
  }

  int ground() const noexcept { return m_; }
  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  Mask component(Cell c, int i) const noexcept {
    return static_cast<Mask>((c >> (m_ * (n_ - 1 - i))) & full_mask(m_));
  }

  bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  bool contains_set(const GroundSubset& a) const { return n_ == 1 && contains(a.mask()); }

  std::vector<std::vector<GroundSubset>> vectors() const {
    std::vector<std::vector<GroundSubset>> out;
    for (Cell c : cells_) {
      std::vector<GroundSubset> v;
      for (int i = 0; i < n_; ++i) v.push_back(GroundSubset::from_mask(m_, component(c, i)));
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Union with a pattern of the same shape.
  Pattern unite(const Pattern& o) const {
    same_shape(o, "unite");
    std::vector<Cell> out;
    std::set_union(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(), std::back_inserter(out));
    return Pattern(m_, n_, std::move(out));
  }

  bool is_subset_of(const Pattern& o) const {
    return m_ == o.m_ && n_ == o.n_ && std::includes(o.cells_.begin(), o.cells_.end(), cells_.begin(), cells_.end());
  }

  void same_shape(const Pattern& o, const char* who) const {
    if (m_ != o.m_ || n_ != o.n_) throw UsageError(std::string(who) + ": pattern shapes differ");
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& v : vectors()) {
      if (!first) s += ",";
      first = false;
      if (n_ == 1) {
        s += v[0].str();
      } else {
        s += "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
        s += ")";
      }
    }
    return s + "}";
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Cell> cells_;
};

inline Pattern operator|(const Pattern& a, const Pattern& b) { return a.unite(b); }

struct PatternHash {
  std::size_t operator()(const Pattern& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.ground()) * 131 + static_cast<std::size_t>(p.dimension());
    for (Cell c : p.cells()) h = (h ^ std::hash<Cell>{}(c)) * 0x100000001b3ULL;
    return h;
  }
};

/// Projects a whole cell componentwise through a mask table.
inline Cell project_cell(Cell c, int m, int n, int k, const std::vector<Mask>& table) {
  Cell out = 0;
  for (int i = 0; i < n; ++i) {
    const Mask a = static_cast<Mask>((c >> (m * (n - 1 - i))) & full_mask(m));
    out = (out << k) | table[a];
  }
  return out;
}

inline Cell project_cell(Cell c, int m, int n, const OrderedPartition& gamma) {
  Cell out = 0;
  for (int i = 0; i < n; ++i) {
    const Mask a = static_cast<Mask>((c >> (m * (n - 1 - i))) & full_mask(m));
    out = (out << gamma.size()) | gamma.project_mask(a);
  }
  return out;
}

/// 𝒫_γ.
inline Pattern induce(const Pattern& p, const OrderedPartition& gamma) {
  if (gamma.ground() != p.ground())
    throw UsageError("induce: pattern over " + std::to_string(p.ground()) + " but partition of " +
                     std::to_string(gamma.ground()));
  std::vector<Cell> out;
  out.reserve(p.size());
  for (Cell c : p.cells()) out.push_back(project_cell(c, p.ground(), p.dimension(), gamma));
  return Pattern(gamma.size(), p.dimension(), std::move(out));
}

class Permutation {
 public:
  Permutation() = default;

  /// images[i-1] = σ(i).
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = degree();
    detail::check_ground(m, "Permutation");
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int x : images_) {
      if (x < 1 || x > m || seen[static_cast<std::size_t>(x)]) throw UsageError("Permutation: images are not a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// The transposition (a b).
  static Permutation transposition(int m, int a, int b) {
    auto p = identity(m);
    std::swap(p.images_.at(static_cast<std::size_t>(a - 1)), p.images_.at(static_cast<std::size_t>(b - 1)));
    return p;
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  Mask apply(Mask a) const {
    Mask out = 0;
    for (; a != 0; a &= a - 1) out |= Mask{1} << (images_[static_cast<std::size_t>(std::countr_zero(a))] - 1);
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (σ∘τ)(i) = σ(τ(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw UsageError("compose: degrees differ");
  std::vector<int> v;
  for (int i = 1; i <= tau.degree(); ++i) v.push_back(sigma(tau(i)));
  return Permutation(std::move(v));
}

/// All of S_m in lexicographic order of image words.
inline std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Pattern apply_permutation(const Permutation& sigma, const Pattern& p) {
  if (sigma.degree() != p.ground())
    throw UsageError("apply_permutation: degree " + std::to_string(sigma.degree()) + " but pattern over " +
                     std::to_string(p.ground()));
  std::vector<Cell> out;
  for (Cell c : p.cells()) {
    std::vector<Mask> comps;
    for (int i = 0; i < p.dimension(); ++i) comps.push_back(sigma.apply(p.component(c, i)));
    out.push_back(Pattern::pack(p.ground(), comps));
  }
  return Pattern(p.ground(), p.dimension(), std::move(out));
}

/// Exponent of the largest pattern count we will materialize as an integer.
inline constexpr unsigned long kMaxCountExponent = 1UL << 24;

/// Number of possible n-vectors of nonempty subsets: (2^m - 1)^n.
inline BigInt vector_count(int m, int n) {
  if (m < 1 || n < 1) throw UsageError("vector_count: m and n must be at least 1");
  return boost::multiprecision::pow(BigInt((BigInt(1) << m) - 1), static_cast<unsigned>(n));
}

/// 2^((2^m - 1)^n) - 1.
inline BigInt count_patterns(int m, int n) {
  if (m < 1 || n < 1) throw UsageError("count_patterns: m and n must be at least 1");
  if (m > 24) throw BudgetError("count_patterns: 2^m - 1 exponent too large to materialize", "2^(" + std::to_string(m) + ")");
  const BigInt v = vector_count(m, n);
  if (v > kMaxCountExponent)
    throw BudgetError("count_patterns: result has " + to_string(v) + " bits, beyond the materialization limit",
                      "2^" + to_string(v) + "-1");
  return (BigInt(1) << static_cast<unsigned>(v)) - 1;
}

inline constexpr std::uint64_t kDefaultPatternBudget = std::uint64_t{1} << 20;

/// All m_n-patterns, indexable. Index x corresponds to the characteristic word
/// x+1 over the canonically ordered list of vectors.
class PatternSpace {
 public:
  PatternSpace(int m, int n, std::uint64_t budget = kDefaultPatternBudget) : m_(m), n_(n) {
    Pattern::check_shape(m, n);
    const BigInt total = (m <= 24 && vector_count(m, n) <= 63) ? count_patterns(m, n) : BigInt(-1);
    if (total < 0 || total > budget) {
      std::string exact;
      try {
        exact = to_string(count_patterns(m, n));
      } catch (const BudgetError& e) {
        exact = e.count();
      }
      throw BudgetError("enumerate_patterns: " + exact + " patterns for m=" + std::to_string(m) + " n=" +
                            std::to_string(n) + " exceeds budget " + std::to_string(budget),
                        exact);
    }
    size_ = static_cast<std::uint64_t>(total);
    const Mask nz = full_mask(m);
    std::vector<Cell> cur{0};
    for (int i = 0; i < n; ++i) {
      std::vector<Cell> next;
      for (Cell c : cur)
        for (Mask a = 1; a <= nz; ++a) next.push_back((c << m) | a);
      cur = std::move(next);
    }
    universe_ = std::move(cur);
  }

  int ground() const noexcept { return m_; }
  int dimension() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  const std::vector<Cell>& universe() const noexcept { return universe_; }

  Pattern at(std::uint64_t index) const {
    if (index >= size_) throw UsageError("PatternSpace: index out of range");
    std::vector<Cell> cells;
    for (std::uint64_t x = index + 1; x != 0; x &= x - 1) cells.push_back(universe_[static_cast<std::size_t>(std::countr_zero(x))]);
    return Pattern(m_, n_, std::move(cells));
  }

  /// Visits indices [begin, end) in order.
  template <class F>
  void for_each(std::uint64_t begin, std::uint64_t end, F&& f) const {
    for (std::uint64_t i = begin; i < std::min(end, size_); ++i) f(at(i));
  }

  template <class F>
  void for_each(F&& f) const {
    for_each(0, size_, std::forward<F>(f));
  }

 private:
  int m_;
  int n_;
  std::uint64_t size_ = 0;
  std::vector<Cell> universe_;
};

inline std::vector<Pattern> enumerate_patterns(int m, int n, std::uint64_t budget = kDefaultPatternBudget) {
  PatternSpace space(m, n, budget);
  std::vector<Pattern> out;
  out.reserve(static_cast<std::size_t>(space.size()));
  space.for_each([&](Pattern p) { out.push_back(std::move(p)); });
  return out;
}

}  // namespace stablepat
