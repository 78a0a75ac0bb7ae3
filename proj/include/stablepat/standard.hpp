#pragma once

// Standard pattern constructors, the standard/hereditary/usl catalogs, and a
// classifier that inverts the standard catalog.

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stablepat/errors.hpp"
#include "stablepat/ground.hpp"
#include "stablepat/pattern.hpp"

namespace stablepat {

/// The seventeen standard items, numbered as listed.
enum class Item {
  FullSet = 1,
  Phi,
  A,
  APlusFull,
  APlusPhi,
  A1,
  A1NFull,
  ANLarge,
  ANFull,
  D,
  DPlusA,
  A1Full,
  A1Phi,
  A1A,
  A1AFull,
  A1APhi,
  AA1NFull,
};

inline constexpr std::array<std::string_view, 17> kItemNames = {
    "FullSet", "Phi", "A",      "APlusFull", "APlusPhi", "A1",      "A1NFull", "ANLarge", "ANFull",
    "D",       "DPlusA", "A1Full", "A1Phi",  "A1A",      "A1AFull", "A1APhi",  "AA1NFull"};

inline std::string_view item_name(Item it) { return kItemNames.at(static_cast<std::size_t>(it) - 1); }

inline Item item_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kItemNames.size(); ++i)
    if (kItemNames[i] == name) return static_cast<Item>(i + 1);
  throw UsageError("unknown pattern family '" + std::string(name) + "'");
}

/// A standard label. Absent parameters are 0; nu holds 𝒩 for the 𝒩 items.
struct PatternClass {
  Item family = Item::FullSet;
  int m = 0;
  int j = 0;
  int jp = 0;
  int r = 0;
  int s = 0;
  std::optional<std::vector<Mask>> nu;

  friend bool operator==(const PatternClass&, const PatternClass&) = default;

  std::string str() const {
    std::string out;
    auto add = [&](const std::string& part) { out += (out.empty() ? "" : ",") + part; };
    if (j) add("j=" + std::to_string(j));
    if (jp) add("j'=" + std::to_string(jp));
    if (r) add("r=" + std::to_string(r));
    if (s) add("s=" + std::to_string(s));
    add("m=" + std::to_string(m));
    if (nu) {
      std::string ns;
      for (std::size_t i = 0; i < nu->size(); ++i)
        ns += (i ? "," : "") + GroundSubset::from_mask(m, (*nu)[i]).str();
      add("N={" + ns + "}");
    }
    return std::string(item_name(family)) + "(" + out + ")";
  }
};

namespace detail {

// Sorted, deduplicated mask collections; may be empty.
using MaskSet = std::vector<Mask>;

inline MaskSet unite(MaskSet a, const MaskSet& b) {
  MaskSet out;
  std::sort(a.begin(), a.end());
  MaskSet bb = b;
  std::sort(bb.begin(), bb.end());
  std::set_union(a.begin(), a.end(), bb.begin(), bb.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class... Rest>
MaskSet unite(MaskSet a, const MaskSet& b, const Rest&... rest) {
  return unite(unite(std::move(a), b), rest...);
}

template <class Pred>
MaskSet collect(int m, Pred pred) {
  MaskSet out;
  for (Mask a = 1; a <= full_mask(m); ++a)
    if (pred(a)) out.push_back(a);
  return out;
}

inline MaskSet full_set(int m) { return {full_mask(m)}; }

inline MaskSet phi_set(int m) {
  MaskSet out;
  for (int l = 1; l <= m; ++l) out.push_back(full_mask(l));
  return out;
}

inline MaskSet a_set(int j, int m) {
  return collect(m, [&](Mask a) { return popcount(a) <= j; });
}

inline MaskSet a1_set(int j, int m) {
  return collect(m, [&](Mask a) { return (a & 1U) && popcount(a) <= j; });
}

inline int hole_count(Mask a, int m) { return m - popcount(a); }

inline MaskSet h_set(int h, int l, int m) {
  if (h == 0) return full_set(m);
  return collect(m, [&](Mask a) { return hole_count(a, m) == h && first_hole_of_mask(a, m) >= l; });
}

inline MaskSet eh_set(int h, int l, int m) {
  if (h == 0) return full_set(m);
  return collect(m, [&](Mask a) { return hole_count(a, m) == h && first_hole_of_mask(a, m) == l; });
}

inline MaskSet d_set(int r, int s, int m) {
  MaskSet out = unite(a1_set(m - r - 1, m), full_set(m));
  for (int h = 1; h <= r; ++h) out = unite(std::move(out), h_set(h, s - h + 1, m));
  return out;
}

inline Pattern to_pattern(int m, MaskSet s) { return Pattern::of_masks(m, std::move(s)); }

inline void require(bool ok, const std::string& who, const std::string& condition) {
  if (!ok) throw UsageError(who + ": requires " + condition);
}

/// Every subset of `base`, as sorted mask sets, in increasing order of the selector word.
inline std::vector<MaskSet> all_subcollections(const MaskSet& base) {
  std::vector<MaskSet> out;
  const std::size_t n = base.size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    MaskSet s;
    for (std::size_t i = 0; i < n; ++i)
      if ((x >> i) & 1U) s.push_back(base[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

inline Pattern full(int m) {
  detail::check_ground(m, "full");
  return detail::to_pattern(m, detail::full_set(m));
}

inline Pattern phi(int m) {
  detail::check_ground(m, "phi");
  return detail::to_pattern(m, detail::phi_set(m));
}

/// 𝒜_{j,m}: every nonempty subset of cardinality ≤ j.
inline Pattern a(int j, int m) {
  detail::check_ground(m, "a");
  detail::require(1 <= j && j <= m, "a", "1 <= j <= m");
  return detail::to_pattern(m, detail::a_set(j, m));
}

/// 𝒜¹_{j,m}: subsets of cardinality ≤ j containing 1.
inline Pattern a1(int j, int m) {
  detail::check_ground(m, "a1");
  detail::require(1 <= j && j <= m, "a1", "1 <= j <= m");
  return detail::to_pattern(m, detail::a1_set(j, m));
}

inline void check_hole_indices(int hh, int l, int m, const char* who) {
  detail::check_ground(m, who);
  detail::require(0 <= hh && 1 <= l && hh + l <= m + 1, who, "0 <= h, 1 <= l, h + l <= m + 1");
  if (hh == m) throw DomainError(std::string(who) + ": h = m yields only the empty set");
}

/// H^m_{h,l}: exactly h holes, first hole ≥ l. h = 0 gives {m⃗}.
inline Pattern h(int hh, int l, int m) {
  check_hole_indices(hh, l, m, "h");
  return detail::to_pattern(m, detail::h_set(hh, l, m));
}

/// EH^m_{h,l}: exactly h holes, first hole exactly l. h = 0 gives {m⃗}.
inline Pattern eh(int hh, int l, int m) {
  check_hole_indices(hh, l, m, "eh");
  auto s = detail::eh_set(hh, l, m);
  if (s.empty()) throw DomainError("eh: no subset has " + std::to_string(hh) + " holes starting at " + std::to_string(l));
  return detail::to_pattern(m, std::move(s));
}

/// 𝒟^m_{r,s} = 𝒜¹_{m−r−1,m} ∪ ⋃_{h=1..r} H^m_{h,s−h+1} ∪ {m⃗}, accepted for 0 ≤ r < s ≤ m.
inline Pattern d(int r, int s, int m) {
  detail::check_ground(m, "d");
  detail::require(0 <= r && r < s && s <= m, "d", "0 <= r < s <= m");
  return detail::to_pattern(m, detail::d_set(r, s, m));
}

/// Initial segments padded by at most m−s arbitrary elements, together with 𝒜¹_{m−r−1,m}.
inline Pattern d_alternative(int r, int s, int m) {
  detail::check_ground(m, "d_alternative");
  detail::require(2 <= r && r + 1 < s && s < m, "d_alternative", "2 <= r < r + 1 < s < m");
  detail::MaskSet out = detail::a1_set(m - r - 1, m);
  for (int l = 1; l <= m; ++l)
    for (Mask extra = 0; extra <= full_mask(m); ++extra)
      if (popcount(extra) <= m - s) out.push_back(full_mask(l) | extra);
  return detail::to_pattern(m, std::move(out));
}

/// Realizes a label as a pattern. Parameters are checked against the
/// constructors' ranges only; catalogs decide which labels they emit.
inline Pattern realize(const PatternClass& c) {
  using namespace detail;
  const int m = c.m;
  check_ground(m, "realize");
  auto nu = [&]() -> MaskSet {
    if (!c.nu) throw UsageError("realize: family " + std::string(item_name(c.family)) + " needs nu");
    MaskSet v = *c.nu;
    std::sort(v.begin(), v.end());
    for (Mask x : v)
      if (x == 0 || (x & ~full_mask(m)) != 0) throw UsageError("realize: nu member outside the ground set");
    return v;
  };
  auto jrange = [&](int lo, int hi, int val, const char* name) {
    require(lo <= val && val <= hi, "realize " + std::string(item_name(c.family)),
            std::to_string(lo) + " <= " + name + " <= " + std::to_string(hi));
  };
  auto a_low = [&](int j) { return j <= 0 ? MaskSet{} : a_set(j, m); };
  switch (c.family) {
    case Item::FullSet: return full(m);
    case Item::Phi: return phi(m);
    case Item::A: jrange(1, m, c.j, "j"); return a(c.j, m);
    case Item::APlusFull: jrange(1, m, c.j, "j"); return to_pattern(m, unite(a_set(c.j, m), full_set(m)));
    case Item::APlusPhi: jrange(1, m, c.j, "j"); return to_pattern(m, unite(a_set(c.j, m), phi_set(m)));
    case Item::A1: jrange(1, m, c.j, "j"); return a1(c.j, m);
    case Item::A1NFull: return to_pattern(m, unite(a1_set(m - 2, m), nu(), full_set(m)));
    case Item::ANLarge: return to_pattern(m, unite(a_low(m - 2), nu()));
    case Item::ANFull: return to_pattern(m, unite(a_low(m - 2), nu(), full_set(m)));
    case Item::D: return d(c.r, c.s, m);
    case Item::DPlusA:
      jrange(1, m, c.j, "j");
      return d(c.r, c.s, m) | a(c.j, m);
    case Item::A1Full: jrange(1, m, c.j, "j"); return to_pattern(m, unite(a1_set(c.j, m), full_set(m)));
    case Item::A1Phi: jrange(1, m, c.j, "j"); return to_pattern(m, unite(a1_set(c.j, m), phi_set(m)));
    case Item::A1A:
      jrange(1, m, c.j, "j");
      jrange(1, m, c.jp, "j'");
      return to_pattern(m, unite(a1_set(c.j, m), a_set(c.jp, m)));
    case Item::A1AFull:
      jrange(1, m, c.j, "j");
      jrange(1, m, c.jp, "j'");
      return to_pattern(m, unite(a1_set(c.j, m), a_set(c.jp, m), full_set(m)));
    case Item::A1APhi:
      jrange(1, m, c.j, "j");
      jrange(1, m, c.jp, "j'");
      return to_pattern(m, unite(a1_set(c.j, m), a_set(c.jp, m), phi_set(m)));
    case Item::AA1NFull:
      jrange(1, m, c.j, "j");
      return to_pattern(m, unite(a_set(c.j, m), a1_set(m - 2, m), nu(), full_set(m)));
  }
  throw UsageError("realize: unknown family");
}

struct CatalogEntry {
  Pattern pattern;
  PatternClass label;
};

using Catalog = std::vector<CatalogEntry>;

namespace detail {

class CatalogBuilder {
 public:
  explicit CatalogBuilder(int m) : m_(m) {}

  void add(PatternClass c) {
    c.m = m_;
    if (c.nu) std::sort(c.nu->begin(), c.nu->end());
    Pattern p = realize(c);
    if (seen_.emplace(p, true).second) out_.push_back({std::move(p), std::move(c)});
  }

  void add(Item it, int j = 0, int jp = 0, int r = 0, int s = 0) { add(PatternClass{it, m_, j, jp, r, s, std::nullopt}); }

  void add_nu(Item it, const MaskSet& nu, int j = 0) { add(PatternClass{it, m_, j, 0, 0, 0, nu}); }

  Catalog take() { return std::move(out_); }

 private:
  int m_;
  std::unordered_map<Pattern, bool, PatternHash> seen_;
  Catalog out_;
};

}  // namespace detail

/// Every standard m_1-pattern with its first-listed label, in item order.
inline Catalog standard_catalog(int m) {
  using namespace detail;
  if (m < 2 || m > 12) throw UsageError("standard_catalog: m must lie in 2..12");
  CatalogBuilder b(m);
  const MaskSet h12 = h_set(1, 2, m);
  const MaskSet h11 = h_set(1, 1, m);
  b.add(Item::FullSet);
  b.add(Item::Phi);
  for (int j = 1; j <= m; ++j) b.add(Item::A, j);
  for (int j = 1; j <= m - 2; ++j) b.add(Item::APlusFull, j);
  for (int j = 1; j <= m - 2; ++j) b.add(Item::APlusPhi, j);
  for (int j = 1; j <= m; ++j) b.add(Item::A1, j);
  for (const auto& n : all_subcollections(h12))
    if (!n.empty() && n != h12) b.add_nu(Item::A1NFull, n);
  for (const auto& n : all_subcollections(h11))
    if (static_cast<int>(n.size()) == m - 1 && n != h12) b.add_nu(Item::ANLarge, n);
  for (const auto& n : all_subcollections(h11))
    if (!n.empty() && n != h11 && n != h12) b.add_nu(Item::ANFull, n);
  for (int r = 2; r < m; ++r)
    for (int s = r + 2; s < m; ++s) b.add(Item::D, 0, 0, r, s);
  for (int r = 2; r < m; ++r)
    for (int s = r + 2; s < m; ++s)
      for (int j = 1; j <= m - r - 1; ++j) b.add(Item::DPlusA, j, 0, r, s);
  for (int j = 1; j <= m - 2; ++j) b.add(Item::A1Full, j);
  for (int j = 1; j <= m - 2; ++j) b.add(Item::A1Phi, j);
  for (int j = 2; j <= m; ++j)
    for (int jp = 1; jp < j; ++jp) b.add(Item::A1A, j, jp);
  for (int j = 2; j <= m - 2; ++j)
    for (int jp = 1; jp < j; ++jp) b.add(Item::A1AFull, j, jp);
  for (int j = 2; j <= m - 2; ++j)
    for (int jp = 1; jp < j; ++jp) b.add(Item::A1APhi, j, jp);
  for (int j = 1; j < m - 2; ++j)
    for (const auto& n : all_subcollections(h12))
      if (!n.empty() && n != h12) b.add_nu(Item::AA1NFull, n, j);
  return b.take();
}

namespace detail {

// jmax_a caps items A, A1 and A1A: m for the hereditary list, m − 1 for usl.
inline Catalog hereditary_like(int m, int jmax, const char* who) {
  if (m < 3 || m > 12) throw UsageError(std::string(who) + ": m must lie in 3..12");
  CatalogBuilder b(m);
  b.add(Item::FullSet);
  b.add(Item::Phi);
  for (int j = 1; j <= jmax; ++j) b.add(Item::A, j);
  for (int j = 1; j <= m - 2; ++j) b.add(Item::APlusFull, j);
  for (int j = 1; j <= m - 2; ++j) b.add(Item::APlusPhi, j);
  for (int j = 1; j <= jmax; ++j) b.add(Item::A1, j);
  for (int r = 1; r < m; ++r)
    for (int s = r + 2; s < m; ++s) b.add(Item::D, 0, 0, r, s);
  for (int r = 1; r < m; ++r)
    for (int s = r + 2; s < m; ++s)
      for (int j = 1; j <= m - r - 1; ++j) b.add(Item::DPlusA, j, 0, r, s);
  for (int j = 1; j <= m - 2; ++j) b.add(Item::A1Full, j);
  for (int j = 1; j <= m - 2; ++j) b.add(Item::A1Phi, j);
  for (int j = 2; j <= jmax; ++j)
    for (int jp = 1; jp < j; ++jp) b.add(Item::A1A, j, jp);
  for (int j = 2; j <= m - 2; ++j)
    for (int jp = 1; jp < j; ++jp) b.add(Item::A1AFull, j, jp);
  for (int j = 2; j <= m - 2; ++j)
    for (int jp = 1; jp < j; ++jp) b.add(Item::A1APhi, j, jp);
  return b.take();
}

}  // namespace detail

/// The hereditary m-stable m_1-patterns.
inline Catalog hereditary_catalog(int m) { return detail::hereditary_like(m, m, "hereditary_catalog"); }

/// The m_1-patterns with unique stable lifts.
inline Catalog usl_catalog(int m) { return detail::hereditary_like(m, m - 1, "usl_catalog"); }

inline std::vector<Pattern> patterns_of(const Catalog& c) {
  std::vector<Pattern> out;
  for (const auto& e : c) out.push_back(e.pattern);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

using CatalogIndex = std::unordered_map<Pattern, PatternClass, PatternHash>;

inline const CatalogIndex& standard_index(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const CatalogIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) {
    auto idx = std::make_unique<CatalogIndex>();
    for (auto& e : standard_catalog(m)) idx->emplace(e.pattern, e.label);
    slot = std::move(idx);
  }
  return *slot;
}

}  // namespace detail

/// The canonical label of a standard m_1-pattern, or nullopt when nonstandard.
inline std::optional<PatternClass> classify(const Pattern& p) {
  if (p.dimension() != 1) throw UsageError("classify: only n = 1 is supported");
  const int m = p.ground();
  if (m == 1) return PatternClass{Item::FullSet, 1, 0, 0, 0, 0, std::nullopt};
  if (m > 12) throw UsageError("classify: m must lie in 1..12");
  const auto& idx = detail::standard_index(m);
  auto it = idx.find(p);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

}  // namespace stablepat
