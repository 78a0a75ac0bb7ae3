#pragma once

// Verification suites: each recomputes a classification or identity at small
// ground sizes and lists every disagreement it finds.

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stablepat/family.hpp"
#include "stablepat/ground.hpp"
#include "stablepat/json_io.hpp"
#include "stablepat/parallel.hpp"
#include "stablepat/pattern.hpp"
#include "stablepat/ramsey.hpp"
#include "stablepat/stability.hpp"
#include "stablepat/standard.hpp"

namespace stablepat {

struct SuiteFailure {
  std::string statement;
  Json counterexample;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t checks_run = 0;
  std::vector<SuiteFailure> failures;
  double elapsed_seconds = 0;
  Json details = Json::object();

  explicit SuiteResult(std::string name = {}) : suite(std::move(name)) {}

  bool ok() const { return failures.empty(); }

  void check(bool cond, const std::string& statement, Json counterexample = nullptr) {
    ++checks_run;
    if (!cond) failures.push_back({statement, std::move(counterexample)});
  }
};

inline Json to_json(const SuiteResult& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back(Json{{"statement", f.statement}, {"counterexample", f.counterexample}});
  return Json{{"suite", r.suite},
              {"checks_run", r.checks_run},
              {"failures", std::move(fails)},
              {"elapsed_seconds", r.elapsed_seconds},
              {"details", r.details}};
}

/// Shared caches for a verification run.
class SuiteContext {
 public:
  LiftCache lifts;

  /// SP_1(m) by repeated lifting from the m = 2 base.
  const std::vector<Pattern>& stable_level(int m) {
    if (m < 2) throw UsageError("stable_level: m must be at least 2");
    if (levels_.empty()) levels_[2] = stable_base_m2();
    for (int cur = levels_.rbegin()->first; cur < m; ++cur) {
      const auto& prev = levels_[cur];
      auto lifted = parallel_map(prev.size(), [&](std::size_t i) { return lifts.lifts(prev[i]); });
      std::vector<Pattern> next;
      for (const auto& v : lifted) next.insert(next.end(), v->begin(), v->end());
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      levels_[cur + 1] = std::move(next);
    }
    return levels_.at(m);
  }

 private:
  std::map<int, std::vector<Pattern>> levels_;
};

namespace detail {

inline Json patterns_json(const std::vector<Pattern>& ps, std::size_t limit = 8) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ps.size() && i < limit; ++i) out.push_back(to_json(ps[i]));
  return out;
}

inline std::vector<Pattern> minus(const std::vector<Pattern>& a, const std::vector<Pattern>& b) {
  std::vector<Pattern> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void compare_sets(SuiteResult& r, const std::string& what, const std::vector<Pattern>& got,
                         const std::vector<Pattern>& want) {
  const auto extra = minus(got, want);
  const auto missing = minus(want, got);
  r.check(extra.empty() && missing.empty(), what,
          Json{{"unexpected", patterns_json(extra)}, {"missing", patterns_json(missing)}});
}

inline std::vector<MaskSet> subcollections_of_size(const MaskSet& base, std::size_t size) {
  std::vector<MaskSet> out;
  for (auto& s : all_subcollections(base))
    if (s.size() == size) out.push_back(std::move(s));
  return out;
}

}  // namespace detail

/// The 3-stable 3_1-patterns, by brute force and by lifting, against the standard catalog.
inline SuiteResult suite_stable_three(SuiteContext& ctx) {
  SuiteResult r{"stable-3"};
  const auto brute = enumerate_stable(3, 1, Method::Brute);
  const auto want = patterns_of(standard_catalog(3));
  detail::compare_sets(r, "brute-force SP_1(3) equals the standard catalog", brute, want);
  detail::compare_sets(r, "lifted SP_1(3) equals the standard catalog", ctx.stable_level(3), want);
  r.check(brute.size() == 20, "SP_1(3) has 20 members", Json{{"size", brute.size()}});
  r.details["count"] = brute.size();
  return r;
}

/// SP_1(m) against the standard catalog for 3 ≤ m ≤ max_m; brute force where m ≤ 4.
inline SuiteResult suite_stable_classification(SuiteContext& ctx, int max_m) {
  SuiteResult r{"stable-classification"};
  for (int m = 3; m <= max_m; ++m) {
    const auto want = patterns_of(standard_catalog(m));
    const auto& lifted = ctx.stable_level(m);
    detail::compare_sets(r, "lifted SP_1(" + std::to_string(m) + ") equals the standard catalog", lifted, want);
    if (m <= 4)
      detail::compare_sets(r, "brute-force SP_1(" + std::to_string(m) + ") equals the standard catalog",
                           enumerate_stable(m, 1, Method::Brute), want);
    r.details["count_m" + std::to_string(m)] = lifted.size();
  }
  return r;
}

/// The projection identities of the standard patterns under every γ ∈ Π(m, m−1).
inline SuiteResult suite_projection_identities(int max_m) {
  using namespace detail;
  SuiteResult r{"projection-identities"};
  for (int m = 3; m <= max_m; ++m) {
    const int k = m - 1;
    const auto& mt = tables_for(m, k);
    auto expect_all = [&](const std::string& name, const Pattern& p, const Pattern& want) {
      for (std::size_t g = 0; g < mt.parts.size(); ++g) {
        const Pattern got = induce_with(p, k, mt.tables[g]);
        r.check(got == want, name + " at m=" + std::to_string(m),
                Json{{"pattern", to_json(p)}, {"partition", to_json(*mt.parts[g])}, {"induced", to_json(got)}});
      }
    };
    expect_all("{m} projects to {m-1}", full(m), full(k));
    expect_all("phi_m projects to phi_{m-1}", phi(m), phi(k));
    expect_all("A_{m,m} projects to A_{m-1,m-1}", a(m, m), a(k, k));
    expect_all("A1_{m,m} projects to A1_{m-1,m-1}", a1(m, m), a1(k, k));
    for (int j = 1; j <= m - 1; ++j) {
      expect_all("A_{j,m} projects to A_{j,m-1} (j=" + std::to_string(j) + ")", a(j, m), a(j, k));
      expect_all("A1_{j,m} projects to A1_{j,m-1} (j=" + std::to_string(j) + ")", a1(j, m), a1(j, k));
    }
    for (int rr = 2; rr < m; ++rr)
      for (int s = rr + 2; s < m; ++s)
        expect_all("D_{r,s} projects to D_{r-1,s-1} (r=" + std::to_string(rr) + ",s=" + std::to_string(s) + ")",
                   d(rr, s, m), d(rr - 1, s - 1, k));
    const MaskSet h12 = h_set(1, 2, m);
    const MaskSet h11 = h_set(1, 1, m);
    for (const auto& n : all_subcollections(h12))
      expect_all("A1_{m-2,m} + N + {m} projects to A1_{m-1,m-1}",
                 to_pattern(m, unite(a1_set(m - 2, m), n, full_set(m))), a1(k, k));
    for (const auto& n : all_subcollections(h11))
      expect_all("A_{m-2,m} + N + {m} projects to A_{m-1,m-1}",
                 to_pattern(m, unite(a_set(m - 2, m), n, full_set(m))), a(k, k));
    for (const auto& n : subcollections_of_size(h11, static_cast<std::size_t>(m - 1)))
      expect_all("A_{m-2,m} + N with |N| = m-1 projects to A_{m-1,m-1}", to_pattern(m, unite(a_set(m - 2, m), n)),
                 a(k, k));
  }
  return r;
}

/// Hereditary-up-to-(m+3) filtering of SP_1(m) against the hereditary catalog.
inline SuiteResult suite_hereditary(SuiteContext& ctx, int max_m) {
  SuiteResult r{"hereditary"};
  for (int m = 3; m <= max_m; ++m) {
    const auto& sp = ctx.stable_level(m);
    auto flags = parallel_map(sp.size(), [&](std::size_t i) { return hereditary_up_to(sp[i], m + 3, &ctx.lifts).verdict; });
    std::vector<Pattern> got;
    for (std::size_t i = 0; i < sp.size(); ++i)
      if (flags[i]) got.push_back(sp[i]);
    detail::compare_sets(r, "hereditary-up-to-" + std::to_string(m + 3) + " members of SP_1(" + std::to_string(m) +
                                ") equal the hereditary catalog",
                         got, patterns_of(hereditary_catalog(m)));
    r.details["count_m" + std::to_string(m)] = got.size();
  }
  return r;
}

/// Unique-lift filtering of SP_1(m) against the usl catalog; excluded hereditary
/// patterns must branch at their first level.
inline SuiteResult suite_unique_lifts(SuiteContext& ctx, int max_m) {
  SuiteResult r{"unique-lifts"};
  for (int m = 3; m <= max_m; ++m) {
    const auto& sp = ctx.stable_level(m);
    auto flags = parallel_map(sp.size(), [&](std::size_t i) { return usl_up_to(sp[i], m + 3, &ctx.lifts).verdict; });
    std::vector<Pattern> got;
    for (std::size_t i = 0; i < sp.size(); ++i)
      if (flags[i]) got.push_back(sp[i]);
    const auto usl = patterns_of(usl_catalog(m));
    detail::compare_sets(r, "usl-up-to-" + std::to_string(m + 3) + " members of SP_1(" + std::to_string(m) +
                                ") equal the usl catalog",
                         got, usl);
    for (const auto& p : detail::minus(patterns_of(hereditary_catalog(m)), usl)) {
      const auto n = ctx.lifts.lifts(p)->size();
      r.check(n >= 2, "excluded hereditary pattern has at least two stable lifts",
              Json{{"pattern", to_json(p)}, {"lifts", n}});
    }
    r.details["count_m" + std::to_string(m)] = got.size();
  }
  return r;
}

/// The alternative 𝒟 description and the two 𝒟 identities, for m ≤ max_m.
inline SuiteResult suite_d_identities(int max_m) {
  SuiteResult r{"d-identities"};
  for (int m = 3; m <= max_m; ++m) {
    std::vector<std::pair<int, int>> valid;
    for (int rr = 2; rr < m; ++rr)
      for (int s = rr + 2; s < m; ++s) valid.emplace_back(rr, s);
    for (auto [rr, s] : valid)
      r.check(d_alternative(rr, s, m) == d(rr, s, m), "alternative D description matches",
              Json{{"r", rr}, {"s", s}, {"m", m}});
    for (auto [r1, s1] : valid)
      for (auto [r2, s2] : valid)
        r.check((d(r1, s1, m) | d(r2, s2, m)) == d(std::min(r1, r2), std::min(s1, s2), m),
                "D union identity", Json{{"r1", r1}, {"s1", s1}, {"r2", r2}, {"s2", s2}, {"m", m}});
    for (int s = 1; s + 1 <= m; ++s)
      r.check(d(s, s + 1, m) == d(s - 1, s + 1, m), "D_{s,s+1} = D_{s-1,s+1}", Json{{"s", s}, {"m", m}});
  }
  return r;
}

/// Distinct hereditary patterns are never permutations of each other.
inline SuiteResult suite_permutation_stability(int max_m) {
  SuiteResult r{"permutation-stability"};
  for (int m = 3; m <= max_m; ++m) {
    const auto hc = patterns_of(hereditary_catalog(m));
    const auto perms = all_permutations(m);
    auto bad = parallel_map(hc.size(), [&](std::size_t i) {
      std::vector<std::pair<Pattern, Permutation>> out;
      for (const auto& s : perms) {
        Pattern q = apply_permutation(s, hc[i]);
        if (q != hc[i] && std::binary_search(hc.begin(), hc.end(), q)) out.emplace_back(q, s);
      }
      return out;
    });
    for (std::size_t i = 0; i < hc.size(); ++i) {
      r.checks_run += perms.size();
      for (const auto& [q, s] : bad[i])
        r.failures.push_back({"permuted hereditary pattern is hereditary but different",
                              Json{{"pattern", to_json(hc[i])}, {"sigma", s.images()}, {"image", to_json(q)}}});
    }
  }
  return r;
}

/// Hereditary lifts of the three non-unique-lift shapes against their closed forms.
inline SuiteResult suite_nonunique_lift_sets(SuiteContext& ctx, int max_m) {
  SuiteResult r{"nonunique-lift-sets"};
  for (int m = 3; m <= max_m; ++m) {
    for (const auto& c : check_nonunique_lift_sets(m, m + 3, &ctx.lifts))
      detail::compare_sets(r, "hereditary lifts of " + c.label + " at m=" + std::to_string(m), c.computed, c.expected);
  }
  return r;
}

/// Coherence and hereditary membership of every grid family, plus a trace collision census.
inline SuiteResult suite_families(SuiteContext& ctx, int max_m) {
  SuiteResult r{"families"};
  const auto grid = family_grid();
  auto reps = parallel_map(grid.size(), [&](std::size_t i) { return check_coherence(grid[i], max_m, 2, 5, &ctx.lifts); });
  for (const auto& rep : reps) {
    r.checks_run += rep.checks;
    for (const auto& f : rep.failures) r.failures.push_back({f, to_json(rep.family)});
  }
  std::map<std::vector<Pattern>, std::vector<FamilySpec>> traces;
  for (const auto& f : grid) {
    std::vector<Pattern> t;
    for (int m = 3; m <= max_m; ++m) t.push_back(family_pattern(f, m));
    traces[t].push_back(f);
  }
  Json collisions = Json::array();
  for (const auto& [t, fs] : traces)
    if (fs.size() > 1) {
      Json group = Json::array();
      for (const auto& f : fs) group.push_back(to_json(f));
      collisions.push_back(std::move(group));
    }
  r.details["grid_size"] = grid.size();
  r.details["trace_collisions"] = std::move(collisions);
  return r;
}

/// Structural properties of the calculus, checked exhaustively at small sizes.
inline SuiteResult suite_properties(SuiteContext& ctx) {
  using namespace detail;
  SuiteResult r{"properties"};
  auto natural = [&](const OrderedPartition& p, const char* who) {
    r.check(p.is_naturally_ordered(), std::string(who) + " output is naturally ordered", to_json(p));
  };

  // Subset calculus.
  for (int s = 1; s <= 6; ++s)
    for (int k = 1; k <= s; ++k)
      for (const auto& g : cached_partitions(s, k)) {
        natural(g, "enumerate_partitions");
        for (Mask x = 1; x <= full_mask(s); ++x) {
          const auto A = GroundSubset::from_mask(s, x);
          const auto q = project_subset(g, A);
          const auto pre = preimage_subsets(g, q);
          r.check(std::binary_search(pre.begin(), pre.end(), A), "A lies in the preimage of its projection",
                  Json{{"partition", to_json(g)}, {"A", to_json(A)}});
        }
        for (Mask y = 1; y <= full_mask(k); ++y) {
          const auto q = GroundSubset::from_mask(k, y);
          for (const auto& b : preimage_subsets(g, q))
            r.check(project_subset(g, b) == q, "preimage members project back",
                    Json{{"partition", to_json(g)}, {"q", to_json(q)}, {"B", to_json(b)}});
        }
        for (int jj = 1; jj <= k; ++jj)
          for (const auto& beta : cached_partitions(k, jj)) {
            const auto gb = amalgamate(g, beta);
            natural(gb, "amalgamate");
            for (Mask x = 1; x <= full_mask(s); ++x) {
              const auto A = GroundSubset::from_mask(s, x);
              r.check(project_subset(gb, A) == project_subset(beta, project_subset(g, A)),
                      "projection through an amalgamation factors",
                      Json{{"gamma", to_json(g)}, {"beta", to_json(beta)}, {"A", to_json(A)}});
            }
          }
      }
  for (int m = 1; m <= 6; ++m) {
    for (int i = 1; i <= m + 1; ++i)
      for (int j = i + 1; j <= m + 1; ++j) {
        const auto g = merge_pair(m + 1, i, j);
        natural(g, "merge_pair");
        for (Mask x = 1; x <= full_mask(m); ++x) {
          const auto Q = GroundSubset::from_mask(m, x);
          if (Q.contains(i)) continue;
          r.check(preimage_subsets(g, Q) == std::vector<GroundSubset>{insert_gap(j, Q)},
                  "merge-pair preimage of a set missing i is its gap insertion",
                  Json{{"i", i}, {"j", j}, {"Q", to_json(Q)}});
        }
      }
    if (m + 1 >= 2) {
      const auto pi = merge_pair(m + 1, m, m + 1);
      for (Mask x = 1; x <= full_mask(m); ++x) {
        const auto P = GroundSubset::from_mask(m, x);
        if (!P.contains(m)) continue;
        const Mask up = x | (Mask{1} << m);
        std::vector<GroundSubset> want{GroundSubset::from_mask(m + 1, x), GroundSubset::from_mask(m + 1, up),
                                       GroundSubset::from_mask(m + 1, up & ~(Mask{1} << (m - 1)))};
        std::sort(want.begin(), want.end());
        r.check(preimage_subsets(pi, P) == want, "preimage under pi has the three expected members", to_json(P));
      }
    }
    for (Mask x = 0; x <= full_mask(m); ++x)
      for (int j = 1; j <= m + 1; ++j)
        r.check(!insert_gap(j, GroundSubset::from_mask(m, x)).contains(j), "insert_gap omits its gap",
                Json{{"j", j}, {"A", mask_json(m, x)}});
  }

  // Pattern calculus.
  std::mt19937_64 rng(20240601);
  for (int m = 2; m <= 5; ++m) {
    for (int sample = 0; sample < 12; ++sample) {
      std::vector<Mask> cells;
      std::uniform_int_distribution<Mask> pick(1, full_mask(m));
      const int size = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < size; ++i) cells.push_back(pick(rng));
      const Pattern p = Pattern::of_masks(m, cells);
      r.check(Pattern(p.ground(), p.dimension(), p.cells()) == p, "canonical form is idempotent", to_json(p));
      for (int k = 1; k <= m; ++k)
        for (const auto& g : cached_partitions(m, k))
          for (int jj = 1; jj <= k; ++jj)
            for (const auto& beta : cached_partitions(k, jj))
              r.check(induce(induce(p, g), beta) == induce(p, amalgamate(g, beta)), "induction respects amalgamation",
                      Json{{"pattern", to_json(p)}, {"gamma", to_json(g)}, {"beta", to_json(beta)}});
      if (m <= 4) {
        const auto perms = all_permutations(m);
        r.check(apply_permutation(Permutation::identity(m), p) == p, "identity acts trivially", to_json(p));
        for (const auto& s : perms)
          for (const auto& t : perms)
            r.check(apply_permutation(compose(s, t), p) == apply_permutation(s, apply_permutation(t, p)),
                    "the action is compatible with composition",
                    Json{{"pattern", to_json(p)}, {"sigma", s.images()}, {"tau", t.images()}});
      }
    }
  }
  const std::vector<std::pair<int, int>> counted{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}};
  for (auto [m, n] : counted)
    r.check(count_patterns(m, n) == enumerate_patterns(m, n).size(), "count formula matches enumeration",
            Json{{"m", m}, {"n", n}});

  // Stability and lifting.
  for (int m = 3; m <= 5; ++m)
    for (const auto& p : ctx.stable_level(m))
      for (int k = 2; k < m; ++k)
        for (const auto& g : cached_partitions(m, k))
          r.check(is_stable(induce(p, g)), "induced patterns of stable patterns are stable",
                  Json{{"pattern", to_json(p)}, {"partition", to_json(g)}});
  for (int up = 3; up <= 4; ++up) {
    const int m = up - 1;
    const auto& mt = tables_for(up, m);
    PatternSpace(up, 1).for_each([&](const Pattern& P) {
      const Pattern first = induce_with(P, m, mt.tables[0]);
      bool same = true;
      for (std::size_t g = 1; g < mt.tables.size() && same; ++g) same = induce_with(P, m, mt.tables[g]) == first;
      r.check(is_stable(P) == (same && is_stable(first)), "stability iff merge projections agree on a stable pattern",
              to_json(P));
      for (int k = 1; k < up; ++k)
        for (const auto& g : cached_partitions(up, k)) {
          const Pattern Q = induce(P, g);
          for (Cell c : Q.cells()) {
            const auto pre = preimage_masks(g, static_cast<Mask>(c));
            if (pre.size() == 1)
              r.check(P.contains(pre[0]), "a singleton preimage of an induced member lies in the pattern",
                      Json{{"pattern", to_json(P)}, {"partition", to_json(g)}});
          }
        }
    });
  }
  for (int up = 3; up <= 5; ++up) {
    const int m = up - 1;
    const auto pi = merge_pair(up, m, up);
    for (const auto& P : ctx.stable_level(up)) {
      const Pattern Pp = induce(P, pi);
      auto in = [](const Pattern& p, const MaskSet& s) {
        MaskSet out;
        for (Mask x : s)
          if (p.contains(x)) out.push_back(x);
        return out;
      };
      std::vector<Cell> lifted;
      for (Cell c : Pp.cells())
        for (Mask a : preimage_masks(pi, static_cast<Mask>(c)))
          if (P.contains(a)) lifted.push_back(a);
      r.check(Pattern(up, 1, lifted) == P, "a pattern is the union of its pi-fibres", to_json(P));
      for (int hh = 1; hh <= m; ++hh)
        for (int l = 1; l + hh <= m + 1; ++l) {
          bool earlier_empty = true;
          for (int i = 1; i < l; ++i) earlier_empty = earlier_empty && in(Pp, eh_set(hh, i, m)).empty();
          if (!earlier_empty || in(Pp, eh_set(hh, l, m)).empty()) continue;
          r.check(in(P, h_set(hh + 1, 1, up)) == h_set(hh + 1, l, up),
                  "first-hole propagation across one lift", Json{{"pattern", to_json(P)}, {"h", hh}, {"l", l}});
        }
      for (int j = 1; j < m; ++j) {
        auto contains_all = [](const Pattern& p, const MaskSet& s) {
          return std::all_of(s.begin(), s.end(), [&](Mask x) { return p.contains(x); });
        };
        if (contains_all(Pp, a_set(j, m)))
          r.check(contains_all(P, a_set(j, up)), "small sets lift", Json{{"pattern", to_json(P)}, {"j", j}});
        if (contains_all(Pp, a1_set(j, m)))
          r.check(contains_all(P, a1_set(j, up)), "small sets through 1 lift", Json{{"pattern", to_json(P)}, {"j", j}});
      }
      for (int e = 3; e <= m; ++e) {
        if (in(Pp, h_set(1, 1, m)) != h_set(1, e, m)) continue;
        r.check(in(P, h_set(1, 1, up)) == h_set(1, e + 1, up), "one-hole sets shift by one",
                Json{{"pattern", to_json(P)}, {"e", e}});
        if (Pp.contains(full_mask(m)))
          r.check(P.contains(full_mask(up)), "the full set lifts", Json{{"pattern", to_json(P)}, {"e", e}});
      }
    }
  }
  return r;
}

struct SuiteInfo {
  std::string name;
  std::string alias;
  int default_max_m;
  std::function<SuiteResult(SuiteContext&, int)> run;
};

inline const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg = {
      {"stable-3", "prop2.13", 3, [](SuiteContext& c, int) { return suite_stable_three(c); }},
      {"projection-identities", "thm2.12", 7, [](SuiteContext&, int m) { return suite_projection_identities(m); }},
      {"stable-classification", "thm2.14", 6, [](SuiteContext& c, int m) { return suite_stable_classification(c, m); }},
      {"hereditary", "thm2.16", 5, [](SuiteContext& c, int m) { return suite_hereditary(c, m); }},
      {"permutation-stability", "thm2.19", 6, [](SuiteContext&, int m) { return suite_permutation_stability(m); }},
      {"unique-lifts", "thm2.22", 5, [](SuiteContext& c, int m) { return suite_unique_lifts(c, m); }},
      {"d-identities", "lem2.17", 8, [](SuiteContext&, int m) { return suite_d_identities(m); }},
      {"nonunique-lift-sets", "lem2.23", 6, [](SuiteContext& c, int m) { return suite_nonunique_lift_sets(c, m); }},
      {"families", "families", 7, [](SuiteContext& c, int m) { return suite_families(c, m); }},
      {"properties", "properties", 5, [](SuiteContext& c, int) { return suite_properties(c); }},
  };
  return reg;
}

inline const SuiteInfo& find_suite(const std::string& name) {
  for (const auto& s : suite_registry())
    if (s.name == name || s.alias == name) return s;
  throw UsageError("unknown suite '" + name + "'");
}

/// Runs one suite; max_m = 0 selects its default.
inline SuiteResult run_suite(const SuiteInfo& info, SuiteContext& ctx, int max_m = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r = info.run(ctx, max_m > 0 ? max_m : info.default_max_m);
  r.suite = info.name;
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace stablepat
