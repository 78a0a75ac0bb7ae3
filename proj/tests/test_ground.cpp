#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace stablepat;

namespace {

OrderedPartition P(int s, std::vector<std::vector<int>> blocks) { return OrderedPartition::from_blocks(s, blocks); }
GroundSubset S(int m, std::initializer_list<int> xs) { return GroundSubset(m, xs); }

}  // namespace

TEST_CASE("enumerate_partitions small cases") {
  CHECK(enumerate_partitions(2, 2) == std::vector{P(2, {{1}, {2}})});
  CHECK(enumerate_partitions(3, 2) == std::vector{P(3, {{1}, {2, 3}}), P(3, {{1, 2}, {3}}), P(3, {{1, 3}, {2}})});
  CHECK(enumerate_partitions(4, 2).size() == 7);
}

TEST_CASE("enumerate_partitions agrees with naive set partitions") {
  for (int s = 1; s <= 7; ++s)
    for (int k = 1; k <= s; ++k) {
      const auto got = enumerate_partitions(s, k);
      std::set<oracle::Blocks> have, want;
      for (const auto& g : got) {
        CHECK(g.is_naturally_ordered());
        have.insert(oracle::from_partition(g));
      }
      for (const auto& b : oracle::partitions(s, k)) want.insert(b);
      CHECK(have.size() == got.size());
      CHECK(have == want);
      CHECK(BigInt(got.size()) == stirling2(s, k));
    }
}

TEST_CASE("enumeration order is deterministic and strict") {
  const auto ps = enumerate_partitions(6, 3);
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(partition_order_less(ps[i - 1].word(), ps[i].word()));
  CHECK(ps == enumerate_partitions(6, 3));
}

TEST_CASE("enumerate_partitions rejects bad ranges") {
  CHECK_THROWS_AS(enumerate_partitions(3, 4), UsageError);
  CHECK_THROWS_AS(enumerate_partitions(3, 0), UsageError);
  CHECK_THROWS_AS(enumerate_partitions(0, 0), UsageError);
}

TEST_CASE("partition construction validates") {
  CHECK_THROWS_AS(P(3, {{2}, {1, 3}}), UsageError);
  CHECK_THROWS_AS(P(3, {{1}, {2}}), UsageError);
  CHECK_THROWS_AS(P(3, {{1, 2}, {2, 3}}), UsageError);
  CHECK(P(4, {{1, 3}, {2}, {4}}).str() == "({1,3},{2},{4})");
}

TEST_CASE("amalgamate") {
  CHECK(amalgamate(P(3, {{1}, {2}, {3}}), P(3, {{1, 2}, {3}})) == P(3, {{1, 2}, {3}}));
  CHECK(amalgamate(P(4, {{1, 3}, {2}, {4}}), P(3, {{1}, {2, 3}})) == P(4, {{1, 3}, {2, 4}}));
  CHECK(amalgamate(P(3, {{1}, {2, 3}}), P(2, {{1, 2}})) == P(3, {{1, 2, 3}}));
  CHECK_THROWS_AS(amalgamate(P(3, {{1}, {2, 3}}), P(3, {{1}, {2}, {3}})), UsageError);
}

TEST_CASE("amalgamate matches the block-union formula") {
  for (int s = 1; s <= 5; ++s)
    for (int k = 1; k <= s; ++k)
      for (const auto& g : cached_partitions(s, k))
        for (int j = 1; j <= k; ++j)
          for (const auto& b : cached_partitions(k, j)) {
            const auto gb = oracle::from_partition(amalgamate(g, b));
            const auto gs = oracle::from_partition(g);
            oracle::Blocks want;
            for (const auto& bj : oracle::from_partition(b)) {
              oracle::Set u;
              for (int i : bj) u.insert(gs[static_cast<std::size_t>(i - 1)].begin(), gs[static_cast<std::size_t>(i - 1)].end());
              want.push_back(u);
            }
            CHECK(gb == want);
          }
}

TEST_CASE("merge_pair") {
  CHECK(merge_pair(3, 1, 3) == P(3, {{1, 3}, {2}}));
  CHECK(merge_pair(4, 3, 4) == P(4, {{1}, {2}, {3, 4}}));
  CHECK(merge_pair(4, 1, 2) == P(4, {{1, 2}, {3}, {4}}));
  CHECK_THROWS_AS(merge_pair(4, 2, 2), UsageError);
  CHECK_THROWS_AS(merge_pair(4, 3, 5), UsageError);
}

TEST_CASE("shift operators") {
  CHECK(shift_up(S(3, {1, 3})) == S(4, {2, 4}));
  CHECK(shift_up(GroundSubset::empty_set(3)).empty());
  CHECK(shift_up(S(3, {1})) == S(4, {2}));
  CHECK(shift_down(S(4, {2, 4})) == S(3, {1, 3}));
  CHECK(shift_down(S(4, {2})) == S(3, {1}));
  CHECK_THROWS_AS(shift_down(S(4, {1, 2})), DomainError);
}

TEST_CASE("insert_gap") {
  CHECK(insert_gap(2, S(3, {1, 2, 3})) == S(4, {1, 3, 4}));
  CHECK(insert_gap(1, S(3, {1, 2})) == S(4, {2, 3}));
  CHECK(insert_gap(4, S(3, {1, 3})) == S(4, {1, 3}));
  CHECK_THROWS_AS(insert_gap(5, S(3, {1})), UsageError);
  CHECK_THROWS_AS(insert_gap(0, S(3, {1})), UsageError);
}

TEST_CASE("project_subset") {
  CHECK(project_subset(P(3, {{1, 3}, {2}}), S(3, {2})) == S(2, {2}));
  CHECK(project_subset(P(4, {{1}, {2}, {3, 4}}), S(4, {1, 3})) == S(3, {1, 3}));
  CHECK(project_subset(P(3, {{1, 2, 3}}), S(3, {2})) == S(1, {1}));
  CHECK_THROWS_AS(project_subset(P(3, {{1, 2, 3}}), GroundSubset::empty_set(3)), DomainError);
  CHECK_THROWS_AS(project_subset(P(3, {{1, 2, 3}}), S(4, {1})), UsageError);
}

TEST_CASE("preimage_subsets") {
  CHECK(preimage_subsets(merge_pair(4, 3, 4), S(3, {1, 3})) ==
        std::vector{S(4, {1, 3}), S(4, {1, 4}), S(4, {1, 3, 4})});
  CHECK(preimage_subsets(merge_pair(3, 1, 3), S(2, {2})) == std::vector{S(3, {2})});
  CHECK(preimage_subsets(merge_pair(3, 1, 2), S(2, {2})) == std::vector{S(3, {3})});
  CHECK(preimage_subsets(merge_pair(3, 1, 2), S(2, {2})) == std::vector{insert_gap(2, S(2, {2}))});
  CHECK_THROWS_AS(preimage_subsets(merge_pair(3, 1, 2), GroundSubset::empty_set(2)), DomainError);
}

TEST_CASE("projection and preimage agree with the naive oracle") {
  for (int s = 1; s <= 5; ++s)
    for (int k = 1; k <= s; ++k)
      for (const auto& g : cached_partitions(s, k)) {
        const auto gb = oracle::from_partition(g);
        for (const auto& a : oracle::nonempty_subsets(s)) {
          std::vector<int> xs(a.begin(), a.end());
          CHECK(oracle::from_subset(project_subset(g, GroundSubset(s, std::span<const int>(xs)))) == oracle::project(gb, a));
        }
        for (const auto& q : oracle::nonempty_subsets(k)) {
          std::vector<int> xs(q.begin(), q.end());
          std::vector<oracle::Set> got;
          for (const auto& b : preimage_subsets(g, GroundSubset(k, std::span<const int>(xs)))) got.push_back(oracle::from_subset(b));
          auto want = oracle::preimage(gb, s, q);
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          CHECK(got == want);
        }
      }
}

TEST_CASE("holes and first_hole") {
  CHECK(holes(S(4, {1, 3})) == std::vector{2, 4});
  CHECK(first_hole(S(4, {1, 3})) == 2);
  CHECK(holes(S(3, {1, 2, 3})).empty());
  CHECK_THROWS_AS(first_hole(S(3, {1, 2, 3})), DomainError);
  CHECK(holes(S(3, {2, 3})) == std::vector{1});
  CHECK(first_hole(S(3, {2, 3})) == 1);
}

TEST_CASE("subsets validate their ground") {
  CHECK_THROWS_AS(S(3, {4}), UsageError);
  CHECK_THROWS_AS(S(3, {0}), UsageError);
  CHECK(S(3, {3, 1}).members() == std::vector{1, 3});
  CHECK_THROWS_AS(GroundSubset::full(31), UsageError);
}
