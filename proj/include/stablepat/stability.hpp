#pragma once

// Stability, stable lifts, enumeration of stable patterns, and the
// hereditary / unique-lift checks built on lift chains.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stablepat/errors.hpp"
#include "stablepat/ground.hpp"
#include "stablepat/parallel.hpp"
#include "stablepat/pattern.hpp"
#include "stablepat/standard.hpp"

namespace stablepat {

struct StabilityReport {
  std::string kind = "stability";
  bool verdict = false;
  int k_checked = 0;
  /// Two partitions with equal block counts and different induced patterns.
  std::optional<std::pair<OrderedPartition, OrderedPartition>> witness;
  /// Common induced pattern per block count, filled when verdict holds.
  std::map<int, Pattern> induced;
  /// Lift chain P_m, ..., P_M for the hereditary and unique-lift checks.
  std::vector<Pattern> chain;
  /// Number of stable lifts seen at each level of the chain.
  std::vector<std::size_t> lift_counts;
  /// First level whose pattern has no (or no unique) continuation.
  std::optional<int> failed_level;

  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

namespace detail {

struct MergeTables {
  std::vector<const OrderedPartition*> parts;
  std::vector<std::vector<Mask>> tables;
};

inline const MergeTables& tables_for(int s, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const MergeTables>> cache;
  const auto& parts = cached_partitions(s, k);
  std::lock_guard lock(mu);
  auto& slot = cache[{s, k}];
  if (!slot) {
    auto t = std::make_unique<MergeTables>();
    for (const auto& p : parts) {
      t->parts.push_back(&p);
      t->tables.push_back(projection_table(p));
    }
    slot = std::move(t);
  }
  return *slot;
}

// Induced set over k ≤ 6 blocks as a bit signature (n = 1 only).
inline std::uint64_t induced_signature(const Pattern& p, const std::vector<Mask>& table) {
  std::uint64_t sig = 0;
  for (Cell c : p.cells()) sig |= std::uint64_t{1} << table[static_cast<std::size_t>(c)];
  return sig;
}

inline Pattern induce_with(const Pattern& p, int k, const std::vector<Mask>& table) {
  std::vector<Cell> out;
  out.reserve(p.size());
  for (Cell c : p.cells()) out.push_back(project_cell(c, p.ground(), p.dimension(), k, table));
  return Pattern(k, p.dimension(), std::move(out));
}

}  // namespace detail

/// k-stability: for every 2 ≤ k′ ≤ k all partitions in Π(m, k′) induce one pattern.
inline StabilityReport is_k_stable(const Pattern& p, int k) {
  const int m = p.ground();
  if (k < 2 || k > m)
    throw UsageError("is_k_stable: need 2 <= k <= m, got k=" + std::to_string(k) + " m=" + std::to_string(m));
  StabilityReport rep;
  rep.k_checked = k;
  const bool tables = m <= 16;
  for (int kk = 2; kk <= k; ++kk) {
    if (tables) {
      const auto& mt = detail::tables_for(m, kk);
      if (p.dimension() == 1 && kk <= 6) {
        const std::uint64_t ref = detail::induced_signature(p, mt.tables[0]);
        for (std::size_t i = 1; i < mt.parts.size(); ++i) {
          if (detail::induced_signature(p, mt.tables[i]) != ref) {
            rep.witness.emplace(*mt.parts[0], *mt.parts[i]);
            rep.induced.clear();
            return rep;
          }
        }
        rep.induced.emplace(kk, detail::induce_with(p, kk, mt.tables[0]));
      } else {
        Pattern ref = detail::induce_with(p, kk, mt.tables[0]);
        for (std::size_t i = 1; i < mt.parts.size(); ++i) {
          if (detail::induce_with(p, kk, mt.tables[i]) != ref) {
            rep.witness.emplace(*mt.parts[0], *mt.parts[i]);
            rep.induced.clear();
            return rep;
          }
        }
        rep.induced.emplace(kk, std::move(ref));
      }
    } else {
      const auto parts = enumerate_partitions(m, kk);
      Pattern ref = induce(p, parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        if (induce(p, parts[i]) != ref) {
          rep.witness.emplace(parts[0], parts[i]);
          rep.induced.clear();
          return rep;
        }
      }
      rep.induced.emplace(kk, std::move(ref));
    }
  }
  rep.verdict = true;
  return rep;
}

/// m-stability of an m-pattern; vacuous for m = 1.
inline bool is_stable(const Pattern& p) { return p.ground() < 2 || is_k_stable(p, p.ground()).verdict; }

struct LiftOptions {
  bool require_stable_base = false;
  /// Search-node cap; 0 means unlimited.
  std::uint64_t max_nodes = 0;
};

struct LiftStats {
  std::uint64_t nodes = 0;
  std::uint64_t found = 0;
  bool complete = true;
};

/// Visits every (m+1)-stable pattern all of whose merge-pair projections equal q,
/// in an unspecified but deterministic order. The visitor returns false to stop.
template <class Visitor>
LiftStats for_each_stable_lift(const Pattern& q, Visitor&& visit, LiftOptions opts = {}) {
  const int m = q.ground();
  const int n = q.dimension();
  const int up = m + 1;
  LiftStats stats;
  if (up > kMaxGround || static_cast<long>(n) * up > 64)
    throw UsageError("stable_lifts: lifted pattern would exceed the supported size");
  const bool base_stable = is_stable(q);
  if (opts.require_stable_base && !base_stable)
    throw DomainError("stable_lifts: base pattern " + q.str() + " is not " + std::to_string(m) + "-stable");

  const auto& mt = detail::tables_for(up, m);
  const std::size_t merges = mt.parts.size();

  // Candidates: cells whose every merge projection lies in q.
  std::vector<Cell> universe;
  std::vector<std::vector<std::uint32_t>> member_of;  // per candidate, constraint ids
  const auto& qc = q.cells();
  {
    std::vector<Cell> cur{0};
    for (int i = 0; i < n; ++i) {
      std::vector<Cell> next;
      for (Cell c : cur)
        for (Mask a = 1; a <= full_mask(up); ++a) next.push_back((c << up) | a);
      cur = std::move(next);
    }
    for (Cell c : cur) {
      std::vector<std::uint32_t> cons;
      bool ok = true;
      for (std::size_t g = 0; g < merges && ok; ++g) {
        const Cell pc = project_cell(c, up, n, m, mt.tables[g]);
        auto it = std::lower_bound(qc.begin(), qc.end(), pc);
        if (it == qc.end() || *it != pc) ok = false;
        else cons.push_back(static_cast<std::uint32_t>(g * qc.size() + static_cast<std::size_t>(it - qc.begin())));
      }
      if (ok) {
        universe.push_back(c);
        member_of.push_back(std::move(cons));
      }
    }
  }
  // Constraint (γ, A): some chosen candidate projects to A under γ.
  std::vector<int> alive(merges * qc.size(), 0);
  for (const auto& cons : member_of)
    for (auto c : cons) ++alive[c];
  if (std::find(alive.begin(), alive.end(), 0) != alive.end()) return stats;

  const std::size_t u = universe.size();
  std::vector<char> chosen(u, 0);
  bool stop = false;
  auto emit = [&] {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < u; ++i)
      if (chosen[i]) cells.push_back(universe[i]);
    Pattern p(up, n, std::move(cells));
    if (!base_stable && !is_stable(p)) return;
    ++stats.found;
    if (!visit(p)) stop = true;
  };
  // Every node extends to a solution: including all undecided candidates always works.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (opts.max_nodes && stats.nodes >= opts.max_nodes) {
      stats.complete = false;
      stop = true;
      return;
    }
    ++stats.nodes;
    if (i == u) {
      emit();
      return;
    }
    chosen[i] = 1;
    self(self, i + 1);
    chosen[i] = 0;
    bool can_drop = true;
    for (auto c : member_of[i])
      if (alive[c] <= 1) can_drop = false;
    if (can_drop) {
      for (auto c : member_of[i]) --alive[c];
      self(self, i + 1);
      for (auto c : member_of[i]) ++alive[c];
    }
  };
  rec(rec, 0);
  return stats;
}

/// Sorted stable lifts of q.
inline std::vector<Pattern> stable_lifts(const Pattern& q, bool require_stable_base = false) {
  std::vector<Pattern> out;
  for_each_stable_lift(q, [&](const Pattern& p) {
    out.push_back(p);
    return true;
  }, LiftOptions{require_stable_base, 0});
  std::sort(out.begin(), out.end());
  return out;
}

/// Memoized stable_lifts, safe to share across threads.
class LiftCache {
 public:
  std::shared_ptr<const std::vector<Pattern>> lifts(const Pattern& q) {
    {
      std::lock_guard lock(mu_);
      if (auto it = map_.find(q); it != map_.end()) return it->second;
    }
    auto v = std::make_shared<const std::vector<Pattern>>(stable_lifts(q));
    std::lock_guard lock(mu_);
    return map_.emplace(q, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<Pattern, std::shared_ptr<const std::vector<Pattern>>, PatternHash> map_;
};

enum class Method { Brute, Lift };

/// All 2_1-patterns; every one is 2-stable.
inline std::vector<Pattern> stable_base_m2() { return enumerate_patterns(2, 1); }

/// SP_n(m), sorted.
inline std::vector<Pattern> enumerate_stable(int m, int n, Method method,
                                             std::uint64_t budget = kDefaultPatternBudget) {
  if (method == Method::Brute) {
    PatternSpace space(m, n, budget);
    const auto chunks = split_range(space.size(), 64);
    auto parts = parallel_map(chunks.size(), [&](std::size_t c) {
      std::vector<Pattern> found;
      space.for_each(chunks[c].first, chunks[c].second, [&](Pattern p) {
        if (is_stable(p)) found.push_back(std::move(p));
      });
      return found;
    });
    std::vector<Pattern> out;
    for (auto& v : parts) out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    std::sort(out.begin(), out.end());
    return out;
  }
  if (n != 1) throw UsageError("enumerate_stable: the lift method supports n = 1 only");
  if (m < 2 || m > 12) throw UsageError("enumerate_stable: the lift method needs 2 <= m <= 12");
  std::vector<Pattern> level = stable_base_m2();
  for (int cur = 2; cur < m; ++cur) {
    auto lifted = parallel_map(level.size(), [&](std::size_t i) { return stable_lifts(level[i]); });
    std::vector<Pattern> next;
    for (auto& v : lifted) next.insert(next.end(), v.begin(), v.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

namespace detail {

inline void require_stable(const Pattern& p, const char* who) {
  if (!is_stable(p)) throw DomainError(std::string(who) + ": pattern " + p.str() + " is not stable");
}

}  // namespace detail

/// Searches for a lift chain p = P_m, ..., P_M. A false verdict is exact; a true
/// verdict certifies only the levels up to M.
inline StabilityReport hereditary_up_to(const Pattern& p, int depth, LiftCache* cache = nullptr) {
  detail::require_stable(p, "hereditary_up_to");
  const int m = p.ground();
  if (depth < m) throw UsageError("hereditary_up_to: depth must be at least m");
  LiftCache local;
  LiftCache& lc = cache ? *cache : local;
  StabilityReport rep;
  rep.kind = "hereditary";
  rep.k_checked = depth;
  std::unordered_set<Pattern, PatternHash> dead;
  std::vector<Pattern> chain{p};
  int deepest = m;
  auto dfs = [&](auto&& self, const Pattern& cur) -> bool {
    if (cur.ground() == depth) return true;
    if (dead.count(cur)) return false;
    auto ls = lc.lifts(cur);
    deepest = std::max(deepest, cur.ground());
    for (const auto& next : *ls) {
      chain.push_back(next);
      if (self(self, next)) return true;
      chain.pop_back();
    }
    dead.insert(cur);
    return false;
  };
  rep.lift_counts.push_back(depth > m ? lc.lifts(p)->size() : 0);
  rep.verdict = dfs(dfs, p);
  if (rep.verdict) {
    rep.chain = std::move(chain);
  } else {
    rep.failed_level = deepest;
  }
  return rep;
}

/// Unique stable lift at every level m..M−1.
inline StabilityReport usl_up_to(const Pattern& p, int depth, LiftCache* cache = nullptr) {
  detail::require_stable(p, "usl_up_to");
  const int m = p.ground();
  if (depth < m) throw UsageError("usl_up_to: depth must be at least m");
  LiftCache local;
  LiftCache& lc = cache ? *cache : local;
  StabilityReport rep;
  rep.kind = "usl";
  rep.k_checked = depth;
  rep.chain.push_back(p);
  Pattern cur = p;
  for (int level = m; level < depth; ++level) {
    auto ls = lc.lifts(cur);
    rep.lift_counts.push_back(ls->size());
    if (ls->size() != 1) {
      rep.failed_level = level;
      return rep;
    }
    cur = ls->front();
    rep.chain.push_back(cur);
  }
  rep.verdict = true;
  return rep;
}

/// One displayed list: the hereditary lifts of `base`, computed and expected.
struct LiftSetCheck {
  std::string label;
  Pattern base;
  std::vector<Pattern> computed;
  std::vector<Pattern> expected;
  bool equal() const { return computed == expected; }
};

namespace detail {

inline std::vector<Pattern> sorted_unique(std::vector<Pattern> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// Hereditary (to `depth`) stable lifts of 𝒜_{m,m}, 𝒜¹_{m,m} and 𝒜¹_{m,m} ∪ 𝒜_{j,m}
/// against their closed-form descriptions.
inline std::vector<LiftSetCheck> check_nonunique_lift_sets(int m, int depth, LiftCache* cache = nullptr) {
  if (m < 3) throw UsageError("check_nonunique_lift_sets: m must be at least 3");
  if (depth < m + 1) throw UsageError("check_nonunique_lift_sets: depth must be at least m + 1");
  LiftCache local;
  LiftCache& lc = cache ? *cache : local;
  const int u = m + 1;
  auto hereditary_lifts = [&](const Pattern& base) {
    std::vector<Pattern> out;
    for (const auto& p : *lc.lifts(base))
      if (hereditary_up_to(p, depth, &lc).verdict) out.push_back(p);
    return detail::sorted_unique(std::move(out));
  };
  std::vector<LiftSetCheck> out;
  {
    std::vector<Pattern> e{a(m, u), a(u, u), a(m - 1, u) | a1(m, u), a(m - 1, u) | full(u)};
    for (int l = 2; l <= u; ++l) e.push_back(d(1, l, u) | a(m - 1, u));
    const Pattern base = a(m, m);
    out.push_back({"A(m,m)", base, hereditary_lifts(base), detail::sorted_unique(e)});
  }
  {
    std::vector<Pattern> e{a1(m, u), a1(u, u), a1(m - 1, u) | full(u)};
    for (int l = 3; l <= u; ++l) e.push_back(d(1, l, u));
    const Pattern base = a1(m, m);
    out.push_back({"A1(m,m)", base, hereditary_lifts(base), detail::sorted_unique(e)});
  }
  for (int j = 1; j <= m - 2; ++j) {
    std::vector<Pattern> e{a1(m, u) | a(j, u), a1(m - 1, u) | a(j, u) | full(u), a1(u, u) | a(j, u)};
    for (int l = 3; l <= u; ++l) e.push_back(d(1, l, u) | a(j, u));
    const Pattern base = a1(m, m) | a(j, m);
    out.push_back({"A1(m,m)+A(" + std::to_string(j) + ",m)", base, hereditary_lifts(base), detail::sorted_unique(e)});
  }
  return out;
}

struct ExploreResult {
  std::vector<Pattern> patterns;
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Stable m_n-patterns reachable within a search-node budget.
inline ExploreResult explore_stable(int m, int n, std::uint64_t node_budget) {
  ExploreResult res;
  if (n == 1) {
    res.patterns = m == 1 ? enumerate_patterns(1, 1) : enumerate_stable(m, 1, m <= 2 ? Method::Brute : Method::Lift);
    return res;
  }
  if (n != 2 || m < 1 || m > 3) throw UsageError("explore_stable: supports n = 1, or n = 2 with m <= 3");
  if (m <= 2) {
    res.patterns = enumerate_patterns(m, 2);
    return res;
  }
  std::vector<Pattern> found;
  for (const auto& base : enumerate_patterns(2, 2)) {
    if (res.nodes >= node_budget) {
      res.complete = false;
      break;
    }
    auto st = for_each_stable_lift(base, [&](const Pattern& p) {
      found.push_back(p);
      return true;
    }, LiftOptions{false, node_budget - res.nodes});
    res.nodes += st.nodes;
    if (!st.complete) {
      res.complete = false;
      break;
    }
  }
  res.patterns = detail::sorted_unique(std::move(found));
  return res;
}

}  // namespace stablepat
