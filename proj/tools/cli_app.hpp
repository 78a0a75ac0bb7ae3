#pragma once

// The stablepat command-line frontend. `run` takes the arguments after the
// program name and returns the process exit code.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stablepat/stablepat.hpp"

namespace stablepat::cli {

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2 };

struct Outcome {
  Json result;
  Json failures = Json::array();
  std::string text;
  int code = kOk;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

[[noreturn]] inline void rethrow_in(const std::string& path, const ParseError& e) {
  std::string msg = e.what();
  const std::string suffix = " (at " + e.where() + ")";
  if (msg.size() >= suffix.size() && msg.compare(msg.size() - suffix.size(), suffix.size(), suffix) == 0)
    msg.resize(msg.size() - suffix.size());
  throw ParseError(path + ": " + msg, e.where());
}

inline Json load_json(const std::string& path) {
  try {
    return parse_json_text(read_file(path));
  } catch (const ParseError& e) {
    rethrow_in(path, e);
  }
}

inline Pattern load_pattern(const std::string& path) {
  const Json j = load_json(path);
  try {
    return pattern_from_json(j);
  } catch (const ParseError& e) {
    rethrow_in(path, e);
  }
}

inline std::string lines(const std::vector<Pattern>& ps) {
  std::string s;
  for (const auto& p : ps) s += p.str() + "\n";
  return s;
}

inline Json patterns_json(const std::vector<Pattern>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

inline Json failure(const std::string& statement, Json counterexample) {
  return Json{{"statement", statement}, {"counterexample", std::move(counterexample)}};
}

inline std::vector<BigInt> parse_colors(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(tok);
      out.emplace_back(tok);
    } catch (const std::exception&) {
      throw UsageError("--colors: '" + tok + "' is not a positive integer");
    }
    if (out.back() <= 0) throw UsageError("--colors: values must be positive");
  }
  return out;
}

inline FamilySpec parse_family(int id, const std::string& params) {
  FamilySpec f{id, 0, 0, 0, 0};
  std::stringstream ss(params);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw UsageError("--params: expected name=value, got '" + tok + "'");
    const std::string name = tok.substr(0, eq);
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok.substr(eq + 1), &used);
      if (used != tok.size() - eq - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--params: bad value in '" + tok + "'");
    }
    if (name == "q") f.q = v;
    else if (name == "l") f.l = v;
    else if (name == "j") f.j = v;
    else if (name == "jp" || name == "j'") f.jp = v;
    else throw UsageError("--params: unknown parameter '" + name + "'");
  }
  validate(f);
  return f;
}

inline std::string report_text(const StabilityReport& r) {
  std::string s = std::string(r.verdict ? "true" : "false");
  if (r.kind == "stability") {
    s += " (k=" + std::to_string(r.k_checked) + ")\n";
    if (r.witness) s += "witness: " + r.witness->first.str() + " vs " + r.witness->second.str() + "\n";
    for (const auto& [k, p] : r.induced) s += "induced k=" + std::to_string(k) + ": " + p.str() + "\n";
    return s;
  }
  s += " (" + r.kind + " up to " + std::to_string(r.k_checked) + ")\n";
  if (r.failed_level) s += "fails at level " + std::to_string(*r.failed_level) + "\n";
  std::string counts;
  for (auto c : r.lift_counts) counts += (counts.empty() ? "" : ",") + std::to_string(c);
  s += "lift counts: " + counts + "\n";
  for (const auto& p : r.chain) s += "  " + p.str() + "\n";
  return s;
}

inline Outcome verdict_outcome(const StabilityReport& r, const std::string& negative) {
  Outcome o;
  o.result = to_json(r);
  o.text = report_text(r);
  if (!r.verdict) {
    o.code = kNegative;
    Json cx = r.witness ? Json{to_json(r.witness->first), to_json(r.witness->second)} : Json(to_json(r));
    o.failures.push_back(failure(negative, std::move(cx)));
  }
  return o;
}

inline std::string suite_text(const SuiteResult& r) {
  std::ostringstream s;
  s << (r.ok() ? "PASS " : "FAIL ") << r.suite << ": " << r.checks_run << " checks, " << r.failures.size()
    << " failures, " << r.elapsed_seconds << " s\n";
  for (auto it = r.details.begin(); it != r.details.end(); ++it) s << "  " << it.key() << ": " << it.value().dump() << "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i)
    s << "  " << r.failures[i].statement << ": " << r.failures[i].counterexample.dump() << "\n";
  return s.str();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable m_n-patterns: enumeration, classification and verification."};
  app.name("stablepat");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  int m = 0, n = 1, k = 0, depth = 0, target = 0, id = 0, level = 0, max_level = 0, max_m = 0;
  std::uint64_t budget = 0;
  std::string in, out_file, method = "lift", colors, oracle, params, suite = "all", trace;
  bool count_only = false, coherence = false;

  auto* c_count = app.add_subcommand("count", "Number of m_n-patterns");
  c_count->add_option("--m", m)->required();
  c_count->add_option("--n", n)->required();

  auto* c_enum = app.add_subcommand("enumerate-stable", "All m-stable m_n-patterns");
  c_enum->add_option("--m", m)->required();
  c_enum->add_option("--n", n);
  c_enum->add_option("--method", method)->check(CLI::IsMember({"brute", "lift"}));
  c_enum->add_option("--out", out_file);
  c_enum->add_option("--budget", budget);

  auto* c_check = app.add_subcommand("check", "k-stability of a pattern");
  c_check->add_option("--k", k)->required();
  c_check->add_option("--in", in)->required();

  auto* c_classify = app.add_subcommand("classify", "Standard-catalog label of an m_1-pattern");
  c_classify->add_option("--in", in)->required();

  auto* c_lifts = app.add_subcommand("lifts", "Stable lifts of an m-stable pattern");
  c_lifts->add_option("--in", in)->required();
  c_lifts->add_flag("--count-only", count_only);

  auto* c_her = app.add_subcommand("hereditary", "Lift-chain test up to a given level");
  c_her->add_option("--in", in)->required();
  c_her->add_option("--depth", depth)->required();

  auto* c_usl = app.add_subcommand("usl", "Unique-lift test up to a given level");
  c_usl->add_option("--in", in)->required();
  c_usl->add_option("--depth", depth)->required();

  auto* c_stab = app.add_subcommand("stabilizer", "First partition inducing a target-stable pattern");
  c_stab->add_option("--in", in)->required();
  c_stab->add_option("--target-m", target)->required();
  c_stab->add_option("--budget", budget);

  auto* c_sdr = app.add_subcommand("sdr", "Strong dual Ramsey recursion over a DR table");
  c_sdr->add_option("--m", m)->required();
  c_sdr->add_option("--colors", colors)->required();
  c_sdr->add_option("--oracle", oracle)->required();

  auto* c_fam = app.add_subcommand("family", "Pattern families");
  c_fam->add_option("--id", id);
  c_fam->add_option("--params", params);
  auto* o_level = c_fam->add_option("--level", level);
  auto* o_coh = c_fam->add_flag("--coherence", coherence);
  c_fam->add_option("--max-level", max_level);
  auto* o_identify = c_fam->add_option("--identify", trace, "Trace file: array of consecutive m_1-patterns");
  o_level->excludes(o_coh)->excludes(o_identify);
  o_coh->excludes(o_identify);

  auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suite_names{"all"};
  for (const auto& s : suite_registry()) {
    suite_names.push_back(s.name);
    if (s.alias != s.name) suite_names.push_back(s.alias);
  }
  c_verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names));
  c_verify->add_option("--max-m", max_m, "Largest ground size; each suite has its own default");

  auto* c_explore = app.add_subcommand("explore", "Bounded search for stable m_n-patterns");
  c_explore->add_option("--m", m)->required();
  c_explore->add_option("--n", n)->required();
  c_explore->add_option("--budget", budget);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Outcome o;
  try {
    if (sub == c_count) {
      const BigInt c = count_patterns(m, n);
      o.result = Json{{"m", m}, {"n", n}, {"count", to_json(c)}};
      o.text = to_string(c) + "\n";
    } else if (sub == c_enum) {
      const auto ps = enumerate_stable(m, n, method == "brute" ? Method::Brute : Method::Lift,
                                       budget ? budget : kDefaultPatternBudget);
      o.result = Json{{"m", m}, {"n", n}, {"method", method}, {"count", ps.size()}, {"patterns", patterns_json(ps)}};
      if (!out_file.empty()) write_file(out_file, patterns_json(ps).dump(1) + "\n");
      o.text = std::to_string(ps.size()) + " stable patterns\n" + (out_file.empty() ? lines(ps) : "");
    } else if (sub == c_check) {
      const Pattern p = load_pattern(in);
      o = verdict_outcome(is_k_stable(p, k), "pattern is not " + std::to_string(k) + "-stable");
    } else if (sub == c_classify) {
      const Pattern p = load_pattern(in);
      const auto c = classify(p);
      if (c) {
        o.result = to_json(*c);
        o.text = c->str() + "\n";
      } else {
        o.result = Json{{"family", "Nonstandard"}, {"m", p.ground()}};
        o.text = "Nonstandard\n";
        o.code = kNegative;
        o.failures.push_back(failure("pattern is not standard", to_json(p)));
      }
    } else if (sub == c_lifts) {
      const Pattern p = load_pattern(in);
      const auto ls = stable_lifts(p, true);
      o.result = count_only ? Json{{"count", ls.size()}} : Json{{"count", ls.size()}, {"lifts", patterns_json(ls)}};
      o.text = std::to_string(ls.size()) + "\n" + (count_only ? "" : lines(ls));
    } else if (sub == c_her) {
      o = verdict_outcome(hereditary_up_to(load_pattern(in), depth), "no lift chain reaches the requested level");
    } else if (sub == c_usl) {
      o = verdict_outcome(usl_up_to(load_pattern(in), depth), "lifts are not unique up to the requested level");
    } else if (sub == c_stab) {
      const Pattern p = load_pattern(in);
      const auto r = find_stabilizing_partition(p, target, budget ? budget : kDefaultPartitionBudget);
      o.result = to_json(r);
      if (r.partition) {
        o.text = "partition " + r.partition->str() + "\ninduced " + r.induced->str() + "\ntested " +
                 std::to_string(r.candidates_tested) + "\n";
      } else {
        o.text = "exhausted after " + std::to_string(r.candidates_tested) + " partitions\n";
        o.code = kNegative;
        o.failures.push_back(failure("no partition stabilizes the pattern", to_json(p)));
      }
    } else if (sub == c_sdr) {
      const DrOracle dr = oracle_from_json(load_json(oracle));
      const auto r = sdr(m, parse_colors(colors), dr);
      o.result = to_json(r);
      o.text = to_string(r.value) + "\n";
      for (const auto& q : r.trace)
        o.text += "  " + DrOracle::key_str(q.k, q.m, q.r) + " = " + to_string(q.n) + "\n";
    } else if (sub == c_fam) {
      if (!trace.empty()) {
        const Json j = load_json(trace);
        if (!j.is_array()) throw ParseError("trace must be an array of patterns", "/");
        std::vector<Pattern> ps;
        for (std::size_t i = 0; i < j.size(); ++i) ps.push_back(pattern_from_json(j[i], "/" + std::to_string(i)));
        const auto match = identify_family(ps);
        if (match) {
          Json aliases = Json::array();
          for (const auto& f : match->aliases) aliases.push_back(to_json(f));
          o.result = Json{{"family", to_json(match->family)}, {"aliases", aliases}};
          o.text = match->family.str() + "\n";
          for (const auto& f : match->aliases) o.text += "  also " + f.str() + "\n";
        } else {
          o.result = nullptr;
          o.text = "no family matches\n";
          o.code = kNegative;
          o.failures.push_back(failure("trace matches no family in the grid", j));
        }
      } else if (coherence) {
        if (max_level == 0) throw UsageError("family --coherence requires --max-level");
        std::vector<FamilySpec> fams;
        if (id) fams.push_back(parse_family(id, params));
        else fams = family_grid();
        LiftCache cache;
        auto reps = parallel_map(fams.size(), [&](std::size_t i) { return check_coherence(fams[i], max_level, 2, 5, &cache); });
        Json arr = Json::array();
        for (const auto& r : reps) {
          arr.push_back(Json{{"family", to_json(r.family)}, {"checks", r.checks}, {"ok", r.ok()}});
          o.text += (r.ok() ? "coherent   " : "INCOHERENT ") + r.family.str() + "\n";
          for (const auto& f : r.failures) o.failures.push_back(failure(f, to_json(r.family)));
        }
        o.result = Json{{"max_level", max_level}, {"families", arr}};
        if (!o.failures.empty()) o.code = kNegative;
      } else {
        if (!id) throw UsageError("family requires --id with --level, or --coherence, or --identify");
        if (!level) throw UsageError("family --id requires --level");
        const FamilySpec f = parse_family(id, params);
        const Pattern p = family_pattern(f, level);
        o.result = Json{{"family", to_json(f)}, {"level", level}, {"pattern", to_json(p)}};
        o.text = p.str() + "\n";
      }
    } else if (sub == c_verify) {
      std::vector<const SuiteInfo*> chosen;
      if (suite == "all") {
        for (const auto& s : suite_registry()) chosen.push_back(&s);
      } else {
        chosen.push_back(&find_suite(suite));
      }
      if (max_m != 0 && max_m < 3) throw UsageError("--max-m must be at least 3");
      SuiteContext ctx;
      Json arr = Json::array();
      for (const auto* info : chosen) {
        const auto r = run_suite(*info, ctx, max_m);
        arr.push_back(to_json(r));
        o.text += suite_text(r);
        for (const auto& f : r.failures)
          o.failures.push_back(failure(r.suite + ": " + f.statement, f.counterexample));
      }
      o.result = Json{{"suites", arr}};
      if (!o.failures.empty()) o.code = kNegative;
    } else if (sub == c_explore) {
      const auto r = explore_stable(m, n, budget ? budget : kDefaultPatternBudget);
      o.result = Json{{"m", m},
                      {"n", n},
                      {"complete", r.complete},
                      {"nodes", r.nodes},
                      {"count", r.patterns.size()},
                      {"patterns", patterns_json(r.patterns)}};
      o.text = std::to_string(r.patterns.size()) + " stable patterns found, search " +
               (r.complete ? "complete" : "incomplete") + " after " + std::to_string(r.nodes) + " nodes\n";
    }
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    if (json) out << Json{{"command", command}, {"error", e.what()}, {"count", e.count()}}.dump() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (json) out << Json{{"command", command}, {"error", e.what()}, {"where", e.where()}}.dump() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    if (json) out << Json{{"command", command}, {"error", e.what()}}.dump() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (json) out << Json{{"command", command}, {"error", e.what()}}.dump() << "\n";
    return kUsage;
  }

  if (json) out << Json{{"command", command}, {"result", o.result}, {"failures", o.failures}}.dump() << "\n";
  else out << o.text;
  return o.code;
}

}  // namespace stablepat::cli
