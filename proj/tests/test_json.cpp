#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace stablepat;

namespace {

std::string where_of(const std::string& text) {
  try {
    parse_pattern(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("pattern JSON shape") {
  CHECK(to_json(phi(3)).dump() == R"({"m":3,"n":1,"vectors":[[[1]],[[1,2]],[[1,2,3]]]})");
  CHECK(parse_pattern(R"({"m":3,"n":1,"vectors":[[[1,2,3]],[[1]],[[1,2]]]})") == phi(3));
}

TEST_CASE("patterns round-trip") {
  for (const auto& p : enumerate_patterns(3, 1)) CHECK(pattern_from_json(to_json(p)) == p);
  for (const auto& p : enumerate_patterns(2, 2)) CHECK(parse_pattern(to_json(p).dump()) == p);
}

TEST_CASE("partitions and subsets round-trip") {
  for (int s = 1; s <= 5; ++s)
    for (int k = 1; k <= s; ++k)
      for (const auto& g : cached_partitions(s, k)) CHECK(partition_from_json(to_json(g)) == g);
  CHECK(to_json(OrderedPartition::from_blocks(3, {{1, 3}, {2}})).dump() == "[[1,3],[2]]");
  CHECK(to_json(GroundSubset(4, {1, 3})).dump() == "[1,3]");
  CHECK(subset_from_json(Json::parse("[1,3]"), 4) == GroundSubset(4, {1, 3}));
}

TEST_CASE("reports round-trip") {
  for (const auto& p : enumerate_patterns(3, 1)) {
    const auto r = is_k_stable(p, 3);
    CHECK(stability_report_from_json(to_json(r)) == r);
  }
  for (const auto& p : {phi(3), a(3, 3), a1(2, 3)}) {
    const auto h = hereditary_up_to(p, 5);
    CHECK(stability_report_from_json(to_json(h)) == h);
    const auto u = usl_up_to(p, 5);
    CHECK(stability_report_from_json(to_json(u)) == u);
  }
  const auto z = find_stabilizing_partition(phi(5), 3);
  CHECK(stabilizer_result_from_json(to_json(z)) == z);
  const StabilizerResult none{std::nullopt, std::nullopt, true, 90};
  CHECK(stabilizer_result_from_json(to_json(none)) == none);
}

TEST_CASE("stability report JSON shape") {
  const Json j = to_json(is_k_stable(phi(3), 3));
  CHECK(j["verdict"] == true);
  CHECK(j["k"] == 3);
  CHECK(j["witness"].is_null());
  CHECK(j["induced"]["2"] == to_json(phi(2)));
}

TEST_CASE("pattern classes and families round-trip") {
  for (int m = 2; m <= 5; ++m)
    for (const auto& e : standard_catalog(m)) CHECK(pattern_class_from_json(to_json(e.label)) == e.label);
  for (const auto& f : family_grid()) CHECK(family_from_json(to_json(f)) == f);
  CHECK(to_json(FamilySpec{7, 1}).dump() == R"({"id":7,"params":{"q":1}})");
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"id":8,"params":{"q":2,"l":1}})")), ParseError);
}

TEST_CASE("D class JSON shape") {
  const auto c = classify(d(2, 4, 6));
  REQUIRE(c.has_value());
  CHECK(to_json(*c).dump() == R"({"family":"D","params":{"r":2,"s":4},"m":6})");
}

TEST_CASE("oracle tables") {
  const auto o = oracle_from_json(Json::parse(R"([{"k":2,"m":4,"r":7,"n":6},{"k":3,"m":6,"r":5,"n":"123456789012345678901234567890"}])"));
  CHECK(o(2, 4, 7) == 6);
  CHECK(o(3, 6, 5) == BigInt("123456789012345678901234567890"));
  CHECK(oracle_from_json(to_json(o)).table() == o.table());
  CHECK_THROWS_AS(oracle_from_json(Json::parse(R"([{"k":2,"m":4,"r":7,"n":0}])")), ParseError);
  CHECK_THROWS_AS(oracle_from_json(Json::parse(R"([{"k":2,"m":4,"r":7,"n":1},{"k":2,"m":4,"r":7,"n":2}])")), ParseError);
}

TEST_CASE("sdr results serialize big values as strings") {
  const auto o = DrOracle::from_function([](const BigInt&, const BigInt& x, const BigInt&) { return x * x * x * x * x; });
  const auto r = sdr(5, {1, 1, 1}, o);
  const Json j = to_json(r);
  CHECK(j["value"].is_string());
  CHECK(BigInt(j["value"].get<std::string>()) == r.value);
  CHECK(j["trace"].size() == 3);
}

TEST_CASE("malformed pattern documents report positions") {
  CHECK(where_of(R"({"m":3,"n":1,"vectors":[[[1]],[[4]]]})") == "/vectors/1/0/0");
  CHECK(where_of(R"({"m":3,"n":1,"vectors":[[[2,1]]]})") == "/vectors/0/0/1");
  CHECK(where_of(R"({"m":3,"n":1,"vectors":[[[]]]})") == "/vectors/0/0");
  CHECK(where_of(R"({"m":3,"n":1,"vectors":[]})") == "/vectors");
  CHECK(where_of(R"({"m":3,"n":2,"vectors":[[[1]]]})") == "/vectors/0");
  CHECK(where_of(R"({"n":1,"vectors":[[[1]]]})") == "/m");
  CHECK(where_of(R"({"m":0,"n":1,"vectors":[[[1]]]})") == "/m");
  CHECK(where_of(R"({"m":3,"n":1,"vectors":[[[1]]])").rfind("byte ", 0) == 0);
  CHECK(where_of("[1,2]") == "/");
}
