#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/oracles.hpp"

using namespace stablepat;

namespace {

OrderedPartition P(int s, std::vector<std::vector<int>> blocks) { return OrderedPartition::from_blocks(s, blocks); }

DrOracle stub() {
  return DrOracle::from_function([](const BigInt& k, const BigInt& x, const BigInt&) { return x + k; });
}

Pattern random_pattern(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<Mask> pick(1, full_mask(m));
  std::vector<Mask> cells;
  const int size = 1 + static_cast<int>(rng() % 8);
  for (int i = 0; i < size; ++i) cells.push_back(pick(rng));
  return Pattern::of_masks(m, cells);
}

}  // namespace

TEST_CASE("find_stabilizing_partition examples") {
  const auto r = find_stabilizing_partition(phi(5), 3);
  REQUIRE(r.partition.has_value());
  CHECK(*r.partition == P(5, {{1}, {2}, {3, 4, 5}}));
  CHECK(*r.induced == phi(3));
  CHECK(r.candidates_tested == 1);
  const auto s = find_stabilizing_partition(Pattern::of_subsets(4, {{1}}), 3);
  REQUIRE(s.partition.has_value());
  CHECK(*s.induced == a1(1, 3));
  CHECK_THROWS_AS(find_stabilizing_partition(phi(5), 6), UsageError);
  CHECK_THROWS_AS(find_stabilizing_partition(phi(5), 1), UsageError);
  CHECK_THROWS_AS(find_stabilizing_partition(phi(12), 6, 1000), BudgetError);
}

TEST_CASE("stabilizer results survive an independent recheck") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Pattern p = random_pattern(rng, 6);
    const auto r = find_stabilizing_partition(p, 3);
    const auto parts = oracle::partitions(6, 3);
    CHECK(parts.size() == 90);
    std::optional<std::size_t> first;
    const auto c = oracle::from_pattern(p);
    const auto ordered = enumerate_partitions(6, 3);
    for (std::size_t i = 0; i < ordered.size() && !first; ++i)
      if (oracle::is_k_stable(oracle::induce(c, oracle::from_partition(ordered[i])), 3, 3)) first = i;
    if (r.partition) {
      REQUIRE(first.has_value());
      CHECK(*r.partition == ordered[*first]);
      CHECK(r.candidates_tested == *first + 1);
      CHECK(oracle::from_pattern(*r.induced) == oracle::induce(c, oracle::from_partition(*r.partition)));
    } else {
      CHECK(r.exhausted);
      CHECK_FALSE(first.has_value());
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  std::mt19937_64 rng(11);
  const Pattern p = random_pattern(rng, 7);
  const auto r1 = find_stabilizing_partition(p, 3);
  setenv("STABLEPAT_THREADS", "1", 1);
  const auto r2 = find_stabilizing_partition(p, 3);
  setenv("STABLEPAT_THREADS", "3", 1);
  const auto r3 = find_stabilizing_partition(p, 3);
  unsetenv("STABLEPAT_THREADS");
  CHECK(r1.partition == r2.partition);
  CHECK(r1.partition == r3.partition);
  CHECK(r1.candidates_tested == r3.candidates_tested);
}

TEST_CASE("find_monochromatic_partition") {
  const auto constant = [](const OrderedPartition&) { return 0; };
  CHECK(find_monochromatic_partition(constant, 5, 2, 3) == enumerate_partitions(5, 3).front());
  const auto size_of_first = [](const OrderedPartition& g) { return g.block(1).size(); };
  const auto r = find_monochromatic_partition(size_of_first, 3, 2, 3);
  CHECK_FALSE(r.has_value());
  CHECK_THROWS_AS(find_monochromatic_partition(constant, 3, 3, 4), UsageError);
}

TEST_CASE("monochromatic search agrees with stabilizer search at k = 2") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Pattern p = random_pattern(rng, 5);
    const auto color = [&](const OrderedPartition& g) { return induce(p, g); };
    const auto mono = find_monochromatic_partition(color, 5, 2, 3);
    const auto stab = find_stabilizing_partition(p, 3);
    CHECK(mono == stab.partition);
    if (mono)
      for (const auto& b : cached_partitions(3, 2)) CHECK(color(amalgamate(*mono, b)) == color(amalgamate(*mono, cached_partitions(3, 2)[0])));
  }
}

TEST_CASE("joint monochromatic partitions stabilize") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Pattern p = random_pattern(rng, 6);
    const auto color = [&](const OrderedPartition& g) { return induce(p, g); };
    const int m = 4;
    for (const auto& alpha : enumerate_partitions(6, m)) {
      bool all = true;
      for (int k = 2; k < m && all; ++k) {
        const auto& bs = cached_partitions(m, k);
        for (const auto& b : bs) all = all && color(amalgamate(alpha, b)) == color(amalgamate(alpha, bs[0]));
      }
      if (all) CHECK(is_k_stable(induce(p, alpha), m).verdict);
    }
  }
}

TEST_CASE("sdr recursion") {
  const auto r = sdr(4, {5, 5}, stub());
  CHECK(r.value == 9);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].k == 2);
  CHECK(r.trace[0].m == 4);
  CHECK(r.trace[0].n == 6);
  CHECK(r.trace[1].m == 6);
  CHECK(sdr(3, {11}, stub()).value == 5);
  const auto t = sdr(5, {7, 127, 32767}, stub());
  REQUIRE(t.trace.size() == 3);
  CHECK(t.trace[0].k == 2);
  CHECK(t.trace[1].k == 3);
  CHECK(t.trace[2].k == 4);
  CHECK(t.trace[2].r == 32767);
  CHECK_THROWS_AS(sdr(4, {5}, stub()), UsageError);
  CHECK_THROWS_AS(sdr(2, {}, stub()), UsageError);
}

TEST_CASE("oracle table lookups") {
  const auto o = DrOracle::from_table({{{2, 4, 7}, 6}});
  CHECK(o(2, 4, 7) == 6);
  try {
    o(3, 6, 5);
    FAIL("expected a missing-key error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("DR(k=3, m=6, r=5)") != std::string::npos);
  }
  CHECK_THROWS_AS(DrOracle::from_table({{{2, 4, 7}, 0}}), UsageError);
}

TEST_CASE("pattern_color_count") {
  CHECK(pattern_color_count(2, 1) == 7);
  CHECK(pattern_color_count(3, 1) == 127);
  CHECK(pattern_color_count(2, 2) == 511);
  for (int k = 1; k <= 6; ++k) CHECK(pattern_color_count(k, 1) == count_patterns(k, 1));
}
