#pragma once

// JSON encodings for subsets, partitions, patterns, labels, reports and
// oracle tables. Parsers report a JSON pointer for schema errors and a byte
// offset for syntax errors.

#include <limits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "stablepat/errors.hpp"
#include "stablepat/family.hpp"
#include "stablepat/ground.hpp"
#include "stablepat/pattern.hpp"
#include "stablepat/ramsey.hpp"
#include "stablepat/stability.hpp"
#include "stablepat/standard.hpp"

namespace stablepat {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
inline std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object", where.empty() ? "/" : where);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'", child(where, key));
  return *it;
}

inline long long get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", where);
  return j.get<long long>();
}

inline int get_small(const Json& j, const std::string& where, long long lo, long long hi) {
  const long long v = get_int(j, where);
  if (v < lo || v > hi) throw ParseError("integer " + std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi), where);
  return static_cast<int>(v);
}

inline BigInt get_big(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a decimal integer string", where);
    return BigInt(s);
  }
  throw ParseError("expected an integer", where);
}

}  // namespace detail

/// Parses text, reporting syntax errors with their byte offset.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
}

/// Big integers are written as numbers when they fit in 64 bits, else as strings.
inline Json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(v));
  return Json(to_string(v));
}

inline Json to_json(const GroundSubset& a) { return Json(a.members()); }

inline Json mask_json(int m, Mask a) { return to_json(GroundSubset::from_mask(m, a)); }

inline GroundSubset subset_from_json(const Json& j, int m, const std::string& where = "") {
  if (!j.is_array()) throw ParseError("expected an array of integers", where);
  std::vector<int> members;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int e = detail::get_small(j[i], detail::child(where, i), 1, m);
    if (!members.empty() && e <= members.back())
      throw ParseError("subset members must be strictly increasing", detail::child(where, i));
    members.push_back(e);
  }
  return GroundSubset(m, std::span<const int>(members));
}

inline Json to_json(const OrderedPartition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) out.push_back(b);
  return out;
}

inline OrderedPartition partition_from_json(const Json& j, const std::string& where = "") {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of blocks", where);
  std::vector<std::vector<int>> blocks;
  int s = 0;
  for (std::size_t b = 0; b < j.size(); ++b) {
    if (!j[b].is_array()) throw ParseError("expected a block array", detail::child(where, b));
    std::vector<int> block;
    for (std::size_t i = 0; i < j[b].size(); ++i) {
      block.push_back(detail::get_small(j[b][i], detail::child(detail::child(where, b), i), 1, kMaxGround));
      s = std::max(s, block.back());
    }
    blocks.push_back(std::move(block));
  }
  try {
    return OrderedPartition::from_blocks(s, blocks);
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& e) {
    throw ParseError(e.what(), where.empty() ? "/" : where);
  }
}

inline Json to_json(const Pattern& p) {
  Json vs = Json::array();
  for (const auto& v : p.vectors()) {
    Json vec = Json::array();
    for (const auto& a : v) vec.push_back(to_json(a));
    vs.push_back(std::move(vec));
  }
  return Json{{"m", p.ground()}, {"n", p.dimension()}, {"vectors", std::move(vs)}};
}

inline Pattern pattern_from_json(const Json& j, const std::string& where = "") {
  const int m = detail::get_small(detail::field(j, "m", where), detail::child(where, "m"), 1, kMaxGround);
  const int n = detail::get_small(detail::field(j, "n", where), detail::child(where, "n"), 1, 64);
  if (n * m > 64) throw ParseError("n*m must not exceed 64", detail::child(where, "n"));
  const std::string vw = detail::child(where, "vectors");
  const Json& vs = detail::field(j, "vectors", where);
  if (!vs.is_array() || vs.empty()) throw ParseError("expected a nonempty array of vectors", vw);
  std::vector<std::vector<GroundSubset>> vectors;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string iw = detail::child(vw, i);
    if (!vs[i].is_array() || static_cast<int>(vs[i].size()) != n)
      throw ParseError("expected a vector of " + std::to_string(n) + " subsets", iw);
    std::vector<GroundSubset> v;
    for (std::size_t c = 0; c < vs[i].size(); ++c) {
      auto a = subset_from_json(vs[i][c], m, detail::child(iw, c));
      if (a.empty()) throw ParseError("pattern components must be nonempty", detail::child(iw, c));
      v.push_back(a);
    }
    vectors.push_back(std::move(v));
  }
  return Pattern::of_vectors(m, n, vectors);
}

inline Pattern parse_pattern(const std::string& text) { return pattern_from_json(parse_json_text(text)); }

inline Json to_json(const PatternClass& c) {
  Json params = Json::object();
  if (c.j) params["j"] = c.j;
  if (c.jp) params["jp"] = c.jp;
  if (c.r) params["r"] = c.r;
  if (c.s) params["s"] = c.s;
  Json out{{"family", std::string(item_name(c.family))}, {"params", std::move(params)}, {"m", c.m}};
  if (c.nu) {
    Json nu = Json::array();
    for (Mask x : *c.nu) nu.push_back(mask_json(c.m, x));
    out["nu"] = std::move(nu);
  }
  return out;
}

inline PatternClass pattern_class_from_json(const Json& j, const std::string& where = "") {
  PatternClass c;
  const Json& fam = detail::field(j, "family", where);
  if (!fam.is_string()) throw ParseError("expected a family name", detail::child(where, "family"));
  try {
    c.family = item_from_name(fam.get<std::string>());
  } catch (const UsageError& e) {
    throw ParseError(e.what(), detail::child(where, "family"));
  }
  c.m = detail::get_small(detail::field(j, "m", where), detail::child(where, "m"), 1, kMaxGround);
  const Json& params = detail::field(j, "params", where);
  if (!params.is_object()) throw ParseError("expected an object", detail::child(where, "params"));
  for (const auto& [key, val] : params.items()) {
    const std::string pw = detail::child(detail::child(where, "params"), key);
    const int v = detail::get_small(val, pw, 0, kMaxGround);
    if (key == "j") c.j = v;
    else if (key == "jp") c.jp = v;
    else if (key == "r") c.r = v;
    else if (key == "s") c.s = v;
    else throw ParseError("unknown parameter '" + key + "'", pw);
  }
  if (j.contains("nu")) {
    const Json& nu = j["nu"];
    if (!nu.is_array()) throw ParseError("expected an array of subsets", detail::child(where, "nu"));
    std::vector<Mask> v;
    for (std::size_t i = 0; i < nu.size(); ++i)
      v.push_back(subset_from_json(nu[i], c.m, detail::child(detail::child(where, "nu"), i)).mask());
    std::sort(v.begin(), v.end());
    c.nu = std::move(v);
  }
  return c;
}

inline Json to_json(const StabilityReport& r) {
  Json out{{"verdict", r.verdict}, {"k", r.k_checked}};
  if (r.witness) out["witness"] = Json::array({to_json(r.witness->first), to_json(r.witness->second)});
  else out["witness"] = nullptr;
  Json induced = Json::object();
  for (const auto& [k, p] : r.induced) induced[std::to_string(k)] = to_json(p);
  out["induced"] = std::move(induced);
  if (r.kind != "stability") {
    out["kind"] = r.kind;
    Json chain = Json::array();
    for (const auto& p : r.chain) chain.push_back(to_json(p));
    out["chain"] = std::move(chain);
    out["lift_counts"] = r.lift_counts;
    if (r.failed_level) out["failed_level"] = *r.failed_level;
    else out["failed_level"] = nullptr;
  }
  return out;
}

inline StabilityReport stability_report_from_json(const Json& j, const std::string& where = "") {
  StabilityReport r;
  const Json& v = detail::field(j, "verdict", where);
  if (!v.is_boolean()) throw ParseError("expected a boolean", detail::child(where, "verdict"));
  r.verdict = v.get<bool>();
  r.k_checked = detail::get_small(detail::field(j, "k", where), detail::child(where, "k"), 0, 1 << 20);
  const Json& w = detail::field(j, "witness", where);
  if (!w.is_null()) {
    const std::string ww = detail::child(where, "witness");
    if (!w.is_array() || w.size() != 2) throw ParseError("expected a pair of partitions", ww);
    r.witness.emplace(partition_from_json(w[0], detail::child(ww, 0)), partition_from_json(w[1], detail::child(ww, 1)));
  }
  const Json& ind = detail::field(j, "induced", where);
  if (!ind.is_object()) throw ParseError("expected an object", detail::child(where, "induced"));
  for (const auto& [key, val] : ind.items()) {
    const std::string kw = detail::child(detail::child(where, "induced"), key);
    int k = 0;
    try {
      k = std::stoi(key);
    } catch (const std::exception&) {
      throw ParseError("induced keys must be block counts", kw);
    }
    r.induced.emplace(k, pattern_from_json(val, kw));
  }
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError("expected a string", detail::child(where, "kind"));
    r.kind = j["kind"].get<std::string>();
    const Json& chain = detail::field(j, "chain", where);
    if (!chain.is_array()) throw ParseError("expected an array", detail::child(where, "chain"));
    for (std::size_t i = 0; i < chain.size(); ++i)
      r.chain.push_back(pattern_from_json(chain[i], detail::child(detail::child(where, "chain"), i)));
    const Json& lc = detail::field(j, "lift_counts", where);
    if (!lc.is_array()) throw ParseError("expected an array", detail::child(where, "lift_counts"));
    for (std::size_t i = 0; i < lc.size(); ++i)
      r.lift_counts.push_back(static_cast<std::size_t>(detail::get_int(lc[i], detail::child(detail::child(where, "lift_counts"), i))));
    const Json& fl = detail::field(j, "failed_level", where);
    if (!fl.is_null()) r.failed_level = detail::get_small(fl, detail::child(where, "failed_level"), 0, 1 << 20);
  }
  return r;
}

inline Json to_json(const FamilySpec& f) {
  Json params = Json::object();
  if (f.q) params["q"] = f.q;
  if (f.l) params["l"] = f.l;
  if (f.j) params["j"] = f.j;
  if (f.jp) params["jp"] = f.jp;
  return Json{{"id", f.id}, {"params", std::move(params)}};
}

inline FamilySpec family_from_json(const Json& j, const std::string& where = "") {
  FamilySpec f;
  f.id = detail::get_small(detail::field(j, "id", where), detail::child(where, "id"), 1, kFamilyCount);
  if (j.contains("params")) {
    const Json& params = j["params"];
    if (!params.is_object()) throw ParseError("expected an object", detail::child(where, "params"));
    for (const auto& [key, val] : params.items()) {
      const std::string pw = detail::child(detail::child(where, "params"), key);
      const int v = detail::get_small(val, pw, 1, kMaxGround);
      if (key == "q") f.q = v;
      else if (key == "l") f.l = v;
      else if (key == "j") f.j = v;
      else if (key == "jp") f.jp = v;
      else throw ParseError("unknown parameter '" + key + "'", pw);
    }
  }
  try {
    validate(f);
  } catch (const UsageError& e) {
    throw ParseError(e.what(), where.empty() ? "/" : where);
  }
  return f;
}

inline Json to_json(const StabilizerResult& r) {
  Json out{{"partition", r.partition ? to_json(*r.partition) : Json(nullptr)},
           {"induced", r.induced ? to_json(*r.induced) : Json(nullptr)},
           {"exhausted", r.exhausted},
           {"candidates_tested", r.candidates_tested}};
  return out;
}

inline StabilizerResult stabilizer_result_from_json(const Json& j, const std::string& where = "") {
  StabilizerResult r;
  const Json& part = detail::field(j, "partition", where);
  if (!part.is_null()) r.partition = partition_from_json(part, detail::child(where, "partition"));
  const Json& ind = detail::field(j, "induced", where);
  if (!ind.is_null()) r.induced = pattern_from_json(ind, detail::child(where, "induced"));
  const Json& ex = detail::field(j, "exhausted", where);
  if (!ex.is_boolean()) throw ParseError("expected a boolean", detail::child(where, "exhausted"));
  r.exhausted = ex.get<bool>();
  const long long n = detail::get_int(detail::field(j, "candidates_tested", where), detail::child(where, "candidates_tested"));
  if (n < 0) throw ParseError("expected a count", detail::child(where, "candidates_tested"));
  r.candidates_tested = static_cast<std::uint64_t>(n);
  return r;
}

inline Json to_json(const SdrResult& r) {
  Json trace = Json::array();
  for (const auto& q : r.trace)
    trace.push_back(Json{{"k", to_json(q.k)}, {"m", to_json(q.m)}, {"r", to_json(q.r)}, {"n", to_json(q.n)}});
  return Json{{"value", to_json(r.value)}, {"trace", std::move(trace)}};
}

inline DrOracle oracle_from_json(const Json& j, const std::string& where = "") {
  if (!j.is_array()) throw ParseError("expected an array of {k,m,r,n} entries", where.empty() ? "/" : where);
  std::map<DrOracle::Key, BigInt> table;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string iw = detail::child(where, i);
    auto get = [&](const char* key) { return detail::get_big(detail::field(j[i], key, iw), detail::child(iw, key)); };
    const BigInt k = get("k"), m = get("m"), r = get("r"), n = get("n");
    if (n <= 0) throw ParseError("oracle values must be positive", detail::child(iw, "n"));
    if (!table.emplace(DrOracle::Key{k, m, r}, n).second) throw ParseError("duplicate oracle key", iw);
  }
  return DrOracle::from_table(std::move(table));
}

inline Json to_json(const DrOracle& o) {
  Json out = Json::array();
  for (const auto& [key, n] : o.table())
    out.push_back(Json{{"k", to_json(std::get<0>(key))}, {"m", to_json(std::get<1>(key))}, {"r", to_json(std::get<2>(key))}, {"n", to_json(n)}});
  return out;
}

}  // namespace stablepat
