#pragma once

// The eighteen standard pattern families m ↦ 𝒫_m and their coherence checks.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "stablepat/errors.hpp"
#include "stablepat/ground.hpp"
#include "stablepat/pattern.hpp"
#include "stablepat/stability.hpp"
#include "stablepat/standard.hpp"

namespace stablepat {

inline constexpr int kFamilyCount = 18;

/// Family id with its parameters; unused parameters are 0.
struct FamilySpec {
  int id = 1;
  int q = 0;
  int l = 0;
  int j = 0;
  int jp = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;

  std::string str() const {
    std::string s = "family " + std::to_string(id);
    std::string ps;
    auto add = [&](const char* name, int v) {
      if (v) ps += std::string(ps.empty() ? "" : ",") + name + "=" + std::to_string(v);
    };
    add("q", q);
    add("l", l);
    add("j", j);
    add("jp", jp);
    return ps.empty() ? s : s + " (" + ps + ")";
  }
};

/// Which parameters a family takes, in the order q, l, j, jp.
inline std::vector<std::string> family_parameters(int id) {
  switch (id) {
    case 1: case 2: case 16: case 17: return {};
    case 3: case 4: case 5: case 6: case 11: case 12: case 18: return {"j"};
    case 7: return {"q"};
    case 8: return {"q", "l"};
    case 9: return {"q", "j"};
    case 10: return {"q", "l", "j"};
    case 13: case 14: case 15: return {"j", "jp"};
    default: throw UsageError("family id must lie in 1.." + std::to_string(kFamilyCount) + ", got " + std::to_string(id));
  }
}

inline void validate(const FamilySpec& f) {
  const auto names = family_parameters(f.id);
  auto uses = [&](const char* n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  auto fail = [&](const std::string& cond) { throw UsageError(f.str() + ": requires " + cond); };
  if (!uses("q") && f.q) fail("no q parameter");
  if (!uses("l") && f.l) fail("no l parameter");
  if (!uses("j") && f.j) fail("no j parameter");
  if (!uses("jp") && f.jp) fail("no jp parameter");
  if (uses("q") && f.q < 1) fail("q >= 1");
  if (uses("l") && f.l <= f.q) fail("l > q");
  if (uses("j") && f.j < 1) fail("j >= 1");
  if (f.id == 10 && f.j >= f.l) fail("j < l");
  if (uses("jp") && (f.j < 2 || f.jp < 1 || f.jp >= f.j)) fail("j >= 2 and 1 <= jp < j");
}

/// Level m of the family. Cardinality bounds above m saturate at m.
inline Pattern family_pattern(const FamilySpec& f, int m) {
  validate(f);
  detail::check_ground(m, "family_pattern");
  auto A = [&](int j) { return a(std::min(j, m), m); };
  auto A1 = [&](int j) { return a1(std::min(j, m), m); };
  auto dq = [&](int threshold, int r) { return m <= threshold ? a1(m, m) : d(r, m - f.q, m); };
  switch (f.id) {
    case 1: return full(m);
    case 2: return phi(m);
    case 3: return A(f.j);
    case 4: return A(f.j) | full(m);
    case 5: return A(f.j) | phi(m);
    case 6: return A1(f.j);
    case 7: return dq(f.q + 2, m - f.q - 3);
    case 8: return dq(f.l, m - f.l - 1);
    case 9: return A(f.j) | dq(f.q + 2, m - f.q - 3);
    case 10: return A(f.j) | dq(f.l, m - f.l - 1);
    case 11: return A1(f.j) | full(m);
    case 12: return A1(f.j) | phi(m);
    case 13: return A1(f.j) | A(f.jp);
    case 14: return A1(f.j) | A(f.jp) | full(m);
    case 15: return A1(f.j) | A(f.jp) | phi(m);
    case 16: return a(m, m);
    case 17: return a1(m, m);
    case 18: return a1(m, m) | A(f.j);
  }
  throw UsageError("unknown family");
}

/// Every valid parameterization with parameters drawn from `values`.
inline std::vector<FamilySpec> family_grid(const std::vector<int>& values = {1, 2, 3}) {
  std::vector<FamilySpec> out;
  for (int id = 1; id <= kFamilyCount; ++id) {
    const auto names = family_parameters(id);
    auto pick = [&](const char* n) {
      return std::find(names.begin(), names.end(), n) != names.end() ? values : std::vector<int>{0};
    };
    for (int q : pick("q"))
      for (int l : pick("l"))
        for (int j : pick("j"))
          for (int jp : pick("jp")) {
            FamilySpec f{id, q, l, j, jp};
            try {
              validate(f);
            } catch (const UsageError&) {
              continue;
            }
            out.push_back(f);
          }
  }
  return out;
}

struct CoherenceReport {
  FamilySpec family;
  int max_level = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exact projection coherence for 3 ≤ m < m′ ≤ M, hereditary-catalog membership,
/// and, for m ≤ lift_max_m, a lift chain of `lift_depth` further levels.
inline CoherenceReport check_coherence(const FamilySpec& f, int max_level, int lift_depth = 2, int lift_max_m = 5,
                                       LiftCache* cache = nullptr) {
  validate(f);
  if (max_level < 3 || max_level > 12) throw UsageError("check_coherence: max level must lie in 3..12");
  CoherenceReport rep{f, max_level, 0, {}};
  std::vector<Pattern> levels;
  for (int m = 0; m <= max_level; ++m) levels.push_back(m == 0 ? Pattern{} : family_pattern(f, m));
  for (int m = 3; m <= max_level; ++m) {
    const auto hc = patterns_of(hereditary_catalog(m));
    ++rep.checks;
    if (!std::binary_search(hc.begin(), hc.end(), levels[static_cast<std::size_t>(m)]))
      rep.failures.push_back(f.str() + ": level " + std::to_string(m) + " pattern " +
                             levels[static_cast<std::size_t>(m)].str() + " is not in the hereditary catalog");
    if (m <= lift_max_m && lift_depth > 0) {
      ++rep.checks;
      if (!hereditary_up_to(levels[static_cast<std::size_t>(m)], m + lift_depth, cache).verdict)
        rep.failures.push_back(f.str() + ": level " + std::to_string(m) + " has no lift chain of length " +
                               std::to_string(lift_depth));
    }
    for (int mp = m + 1; mp <= max_level; ++mp) {
      const auto& mt = detail::tables_for(mp, m);
      for (std::size_t g = 0; g < mt.parts.size(); ++g) {
        ++rep.checks;
        if (detail::induce_with(levels[static_cast<std::size_t>(mp)], m, mt.tables[g]) != levels[static_cast<std::size_t>(m)]) {
          rep.failures.push_back(f.str() + ": level " + std::to_string(mp) + " projected by " + mt.parts[g]->str() +
                                 " differs from level " + std::to_string(m));
          break;
        }
      }
    }
  }
  return rep;
}

struct FamilyMatch {
  FamilySpec family;
  /// Other grid members producing the same trace.
  std::vector<FamilySpec> aliases;
};

/// Matches a trace of consecutive m_1-patterns against the grid. The lowest
/// matching (id, parameters) is reported; the others are listed as aliases.
inline std::optional<FamilyMatch> identify_family(const std::vector<Pattern>& trace,
                                                  const std::vector<int>& values = {1, 2, 3}) {
  if (trace.empty()) throw UsageError("identify_family: empty trace");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].dimension() != 1) throw UsageError("identify_family: trace entries must be m_1-patterns");
    if (i && trace[i].ground() != trace[i - 1].ground() + 1)
      throw UsageError("identify_family: trace levels must be consecutive");
  }
  std::optional<FamilyMatch> out;
  for (const auto& f : family_grid(values)) {
    bool match = true;
    for (const auto& p : trace)
      if (family_pattern(f, p.ground()) != p) {
        match = false;
        break;
      }
    if (!match) continue;
    if (!out) out = FamilyMatch{f, {}};
    else out->aliases.push_back(f);
  }
  return out;
}

}  // namespace stablepat
