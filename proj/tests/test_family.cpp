#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace stablepat;

namespace {

std::map<std::vector<Pattern>, std::vector<FamilySpec>> traces(int lo, int hi) {
  std::map<std::vector<Pattern>, std::vector<FamilySpec>> out;
  for (const auto& f : family_grid()) {
    std::vector<Pattern> t;
    for (int m = lo; m <= hi; ++m) t.push_back(family_pattern(f, m));
    out[t].push_back(f);
  }
  return out;
}

std::set<std::set<FamilySpec>> collisions(int lo, int hi) {
  std::set<std::set<FamilySpec>> out;
  for (const auto& [t, fs] : traces(lo, hi))
    if (fs.size() > 1) out.insert(std::set<FamilySpec>(fs.begin(), fs.end()));
  return out;
}

}  // namespace

TEST_CASE("family_pattern examples") {
  CHECK(family_pattern({2}, 4) == phi(4));
  CHECK(family_pattern({16}, 3) == a(3, 3));
  const Pattern f7 = family_pattern({7, 1}, 6);
  CHECK(f7 == d(2, 5, 6));
  const auto hc = patterns_of(hereditary_catalog(6));
  CHECK(std::binary_search(hc.begin(), hc.end(), f7));
  CHECK(oracle::from_pattern(f7) == oracle::d(2, 5, 6));
}

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(family_pattern({8, 2, 2}, 5), UsageError);
  CHECK_THROWS_AS(family_pattern({10, 1, 2, 2}, 5), UsageError);
  CHECK_THROWS_AS(family_pattern({13, 0, 0, 2, 2}, 5), UsageError);
  CHECK_THROWS_AS(family_pattern({3}, 5), UsageError);
  CHECK_THROWS_AS(family_pattern({19}, 5), UsageError);
  CHECK_THROWS_AS(family_pattern({1, 1}, 5), UsageError);
}

TEST_CASE("the default grid") {
  const auto g = family_grid();
  CHECK(g.size() == 54);
  std::set<int> ids;
  for (const auto& f : g) ids.insert(f.id);
  CHECK(ids.size() == 18);
}

TEST_CASE("coherence of individual families") {
  CHECK(check_coherence({2}, 7).ok());
  CHECK(check_coherence({1}, 7).ok());
}

TEST_CASE("every grid family is coherent and hereditary up to level 6") {
  LiftCache cache;
  for (const auto& f : family_grid()) {
    const auto r = check_coherence(f, 6, 2, 4, &cache);
    INFO(f.str());
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("families cite the hereditary catalog items") {
  for (int m = 3; m <= 6; ++m) {
    CHECK(family_pattern({3, 0, 0, 2}, m) == a(std::min(2, m), m));
    CHECK(family_pattern({6, 0, 0, 3}, m) == a1(3, m));
    CHECK(family_pattern({11, 0, 0, 1}, m) == (a1(1, m) | full(m)));
    CHECK(family_pattern({13, 0, 0, 3, 1}, m) == (a1(3, m) | a(1, m)));
    CHECK(family_pattern({17}, m) == a1(m, m));
    CHECK(family_pattern({18, 0, 0, 1}, m) == (a1(m, m) | a(1, m)));
  }
}

TEST_CASE("trace collisions on the grid") {
  using F = FamilySpec;
  const std::set<std::set<F>> stable{{F{2}, F{12, 0, 0, 1}},
                                     {F{7, 1}, F{8, 1, 3}},
                                     {F{9, 1, 0, 1}, F{10, 1, 3, 1}},
                                     {F{9, 1, 0, 2}, F{10, 1, 3, 2}}};
  CHECK(collisions(3, 7) == stable);
  CHECK(collisions(3, 10) == stable);
  auto window = stable;
  window.insert({F{7, 3}, F{17}});
  window.insert({F{9, 3, 0, 1}, F{18, 0, 0, 1}});
  window.insert({F{9, 3, 0, 2}, F{18, 0, 0, 2}});
  window.insert({F{9, 3, 0, 3}, F{18, 0, 0, 3}});
  CHECK(collisions(3, 6) == window);
}

TEST_CASE("identify_family") {
  const auto r = identify_family({phi(3), phi(4), phi(5)});
  REQUIRE(r.has_value());
  CHECK(r->family == FamilySpec{2});
  CHECK(r->aliases == std::vector{FamilySpec{12, 0, 0, 1}});
  const auto f1 = identify_family({full(3), full(4), full(5)});
  REQUIRE(f1.has_value());
  CHECK(f1->family == FamilySpec{1});
  CHECK(f1->aliases.empty());
  const Pattern bad = a(1, 3) | Pattern::of_subsets(3, {{2, 3}, {1, 2}});
  CHECK_FALSE(identify_family({bad}).has_value());
  CHECK_THROWS_AS(identify_family({}), UsageError);
  CHECK_THROWS_AS(identify_family({phi(3), phi(5)}), UsageError);
}
