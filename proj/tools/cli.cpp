// Copyright 2026 The dyckcluster Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

namespace dyckcluster::cli {

namespace {

struct RunConfig {
  int r = 0;
  int n = 0;
  std::string family = "D";
  std::string mode = "classical";
  std::string what = "collections";
  std::string framework = "simplified";
  std::string direction = "forward";
  std::string check = "all";
  std::string format = "text";
  std::string out;
  std::optional<std::uint64_t> limit;
  Limits limits;
};

// Thrown from a visitor once --limit records have been written.
struct StopEnumeration {};

struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

Direction parse_direction(const std::string& s) { return s == "backward" ? Direction::Backward : Direction::Forward; }

Framework parse_framework(const std::string& s) {
  return s == "ls" ? Framework::LeeSchiffler : Framework::Simplified;
}

std::string point_text(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

void cmd_path(const RunConfig& cfg, std::ostream& out) {
  FamilyContext ctx(cfg.r, cfg.n);
  StepWord word = build_family_path(ctx, cfg.family == "C" ? Family::C : Family::D);
  auto corners = northwest_corners(word);
  if (cfg.format == "json") {
    Json j;
    j["r"] = cfg.r;
    j["n"] = cfg.n;
    j["family"] = cfg.family;
    j["word"] = word.str();
    j["endpoint"] = Json::array({word.east_count(), word.north_count()});
    Json list = Json::array();
    for (const Vertex& v : corners) list.push_back(Json::array({v.coords.x, v.coords.y}));
    j["corners"] = list;
    out << j.dump() << "\n";
    return;
  }
  out << "family: " << cfg.family << "\n";
  out << "word: " << word.str() << "\n";
  out << "endpoint: " << point_text(word.endpoint()) << "\n";
  out << "corners:";
  for (const Vertex& v : corners) out << " " << point_text(v.coords);
  out << "\n";
}

void cmd_expand(const RunConfig& cfg, std::ostream& out) {
  Direction dir = parse_direction(cfg.direction);
  if (cfg.mode == "quantum") {
    QuantumElement z = quantum_expansion(FamilyContext(cfg.r, cfg.n), dir, cfg.limits);
    out << (cfg.format == "json" ? quantum_to_json(z).dump() : to_string(z)) << "\n";
    return;
  }
  LaurentPoly p(2);
  if (cfg.mode == "oracle") {
    p = cluster_recurrence(cfg.r, dir == Direction::Forward ? cfg.n : 3 - cfg.n);
  } else if (cfg.mode == "coeff") {
    p = expansion_with_coefficients(FamilyContext(cfg.r, cfg.n), dir, cfg.limits);
  } else {
    auto formula = cfg.mode == "llz" ? ExpansionFormula::Pairs : ExpansionFormula::Subpaths;
    p = expansion_classical(FamilyContext(cfg.r, cfg.n), formula, dir, cfg.limits);
  }
  out << (cfg.format == "json" ? polynomial_to_json(p).dump() : to_string(p)) << "\n";
}

void cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  FamilyContext ctx(cfg.r, cfg.n);
  bool json = cfg.format == "json";
  Json records = Json::array();
  std::uint64_t count = 0;
  bool truncated = false;
  auto admit = [&]() {
    if (cfg.limit && count == *cfg.limit) {
      truncated = true;
      throw StopEnumeration{};
    }
    ++count;
  };
  try {
    if (cfg.what == "pairs") {
      auto expected = expected_collection_count(cfg.r, cfg.n);
      if (!expected || *expected > cfg.limits.max_objects) {
        throw GuardExceeded("more than " + std::to_string(cfg.limits.max_objects) + " compatible pairs");
      }
      StepWord host = build_family_path(ctx, Family::C);
      for_each_compatible_pair(
          host, cfg.r, PairStrategy::Pruned,
          [&](const EdgeSet& s1, const EdgeSet& s2) {
            admit();
            EdgePair pair(host, cfg.r, s1, s2);
            if (json) {
              records.push_back(pair_to_json(pair));
            } else {
              out << to_string(pair) << " " << pair_word(pair).letters << "\n";
            }
          },
          cfg.limits);
    } else {
      for_each_collection(
          ctx, parse_framework(cfg.framework),
          [&](const ColoredCollection& beta) {
            admit();
            if (json) {
              records.push_back(collection_to_json(beta));
            } else {
              out << to_string(beta) << "\n";
            }
          },
          cfg.limits);
    }
  } catch (const StopEnumeration&) {
  }
  if (json) {
    Json j;
    j["what"] = cfg.what;
    j["r"] = cfg.r;
    j["n"] = cfg.n;
    j["records"] = std::move(records);
    j["count"] = count;
    j["truncated"] = truncated;
    out << j.dump() << "\n";
    return;
  }
  if (truncated) {
    out << "truncated after " << count << " records\n";
  } else {
    out << "total: " << count << "\n";
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void check_bijection(const RunConfig& cfg, std::vector<Check>& checks) {
  FamilyContext ctx(cfg.r, cfg.n);
  std::size_t host_len = ctx.edge_count() + ctx.last_corner();
  auto mode = host_len <= 20 ? BijectionMode::BruteForce : BijectionMode::CountsOnly;
  BijectionReport report = verify_bijection(ctx, mode, cfg.limits);
  std::ostringstream d;
  d << (mode == BijectionMode::BruteForce ? "bruteforce" : "counts") << ": collections=" << report.count_collections
    << " pairs=" << report.count_pairs << " injective=" << yes_no(report.injective)
    << " surjective=" << yes_no(report.surjective) << " weights=" << yes_no(report.weight_preserving);
  for (const auto& m : report.mismatches) d << "; " << m;
  checks.push_back({"bijection", report.pass(), d.str()});
}

void check_recurrence(const RunConfig& cfg, std::vector<Check>& checks) {
  FamilyContext ctx(cfg.r, cfg.n);
  if (cfg.n < 4) {
    auto count = enumerate_collections(ctx, Framework::Simplified, cfg.limits).size();
    auto oracle = cluster_recurrence(cfg.r, cfg.n).coefficient_sum();
    checks.push_back({"recurrence.count", static_cast<std::int64_t>(count) == oracle,
                      "collections=" + std::to_string(count) + " oracle=" + std::to_string(oracle)});
    return;
  }
  for (Direction dir : {Direction::Forward, Direction::Backward}) {
    LaurentPoly oracle = cluster_recurrence(cfg.r, dir == Direction::Forward ? cfg.n : 3 - cfg.n);
    LaurentPoly sub = expansion_classical(ctx, ExpansionFormula::Subpaths, dir, cfg.limits);
    LaurentPoly pairs = expansion_classical(ctx, ExpansionFormula::Pairs, dir, cfg.limits);
    bool pass = sub == oracle && pairs == oracle;
    checks.push_back({std::string("recurrence.") + to_string(dir), pass,
                      "terms=" + std::to_string(oracle.term_count()) + " subpaths=" + yes_no(sub == oracle) +
                          " pairs=" + yes_no(pairs == oracle)});
  }
}

void check_quantum(const RunConfig& cfg, std::vector<Check>& checks) {
  bool fwd = verify_quantum_recurrence(cfg.r, cfg.n, cfg.limits);
  checks.push_back({"quantum.recurrence.forward", fwd,
                    "Z" + std::to_string(cfg.n + 1) + "*Z" + std::to_string(cfg.n - 1) + " = q^-r*Z" +
                        std::to_string(cfg.n) + "^r + 1"});
  int k = 4 - cfg.n;
  bool back = verify_quantum_recurrence_backward(cfg.r, k, cfg.limits);
  checks.push_back({"quantum.recurrence.backward", back,
                    "Z" + std::to_string(k + 1) + "*Z" + std::to_string(k - 1) + " = q^-r*Z" + std::to_string(k) +
                        "^r + 1"});
  if (cfg.n >= 4) {
    FamilyContext ctx(cfg.r, cfg.n);
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
      bool same = quantum_expansion(ctx, dir, cfg.limits).specialize_q_one() ==
                  expansion_classical(ctx, ExpansionFormula::Subpaths, dir, cfg.limits);
      checks.push_back({std::string("quantum.q1.") + to_string(dir), same, "q=1 specialization vs classical"});
    }
  }
}

void check_weights(const RunConfig& cfg, std::vector<Check>& checks) {
  constexpr std::uint64_t kFullCheck = 100000;
  FamilyContext ctx(cfg.r, cfg.n);
  auto expected = expected_collection_count(cfg.r, cfg.n);
  std::uint64_t stride = 1;
  if (expected && *expected > kFullCheck) stride = (*expected + kFullCheck - 1) / kFullCheck;
  std::uint64_t seen = 0;
  std::uint64_t checked_count = 0;
  std::uint64_t bad = 0;
  std::string first_bad;
  for_each_collection(
      ctx, Framework::Simplified,
      [&](const ColoredCollection& beta) {
        if (seen++ % stride != 0) return;
        ++checked_count;
        std::int64_t closed = wq_closed(ctx, beta);
        std::int64_t all = wq_allpairs(pair_word(phi_unchecked(ctx, beta)), cfg.r);
        if (closed != all) {
          if (bad++ == 0) first_bad = to_string(beta);
        }
      },
      cfg.limits);
  std::string details = "checked " + std::to_string(checked_count) + " of " + std::to_string(seen) + " collections";
  if (bad > 0) details += ", " + std::to_string(bad) + " differ, first " + first_bad;
  checks.push_back({"weights.closed_vs_allpairs", bad == 0, details});

  ColoredCollection empty;
  std::int64_t w = wq_allpairs(pair_word(phi(ctx, empty)), cfg.r);
  std::int64_t expect = ctx.c(cfg.n - 1) + ctx.c(cfg.n - 2) - 1;
  checks.push_back({"weights.empty", w == expect, "w=" + std::to_string(w) + " expected=" + std::to_string(expect)});
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<Check> checks;
  bool all = cfg.check == "all";
  if (all || cfg.check == "bijection") check_bijection(cfg, checks);
  if (all || cfg.check == "recurrence") check_recurrence(cfg, checks);
  if (all || cfg.check == "quantum") check_quantum(cfg, checks);
  if (all || cfg.check == "weights") check_weights(cfg, checks);
  bool pass = true;
  for (const Check& c : checks) pass = pass && c.pass;
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const Check& c : checks) list.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    out << Json{{"checks", list}}.dump() << "\n";
  } else {
    for (const Check& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.details << "\n";
  }
  return pass ? kOk : kVerificationFailed;
}

std::optional<std::uint64_t> env_max_objects() {
  const char* raw = std::getenv(kMaxObjectsEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::string s(raw);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v == 0 || s.front() == '-') {
    throw InvalidArgument(std::string(kMaxObjectsEnv) + " must be a positive integer");
  }
  return v;
}

}  // namespace

Json polynomial_to_json(const LaurentPoly& p) {
  Json vars = Json::array();
  for (const auto& name : variable_names(p.nvars())) vars.push_back(name);
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exps.push_back(e[i]);
    terms.push_back(Json{{"exps", exps}, {"coeff", c}});
  }
  return Json{{"vars", vars}, {"terms", terms}};
}

LaurentPoly polynomial_from_json(const Json& j) {
  std::size_t nvars = j.at("vars").size();
  LaurentPoly p(nvars);
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at("exps");
    if (exps.size() != nvars) throw InvalidArgument("term exponent count does not match vars");
    Exponents e{};
    for (std::size_t i = 0; i < nvars; ++i) e[i] = exps[i].get<std::int64_t>();
    p.add_term(e, t.at("coeff").get<std::int64_t>());
  }
  return p;
}

Json quantum_to_json(const QuantumElement& x) {
  Json terms = Json::array();
  for (const auto& [key, f] : x.terms()) {
    Json q = Json::object();
    for (const auto& [e, c] : f.terms()) q[std::to_string(e)] = c;
    terms.push_back(Json{{"exps", Json::array({key.first, key.second})}, {"coeff", f.at_one()}, {"q", q}});
  }
  return Json{{"vars", Json::array({"Z1", "Z2"})}, {"terms", terms}};
}

QuantumElement quantum_from_json(const Json& j) {
  QuantumElement x;
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at("exps");
    QLaurent f;
    for (const auto& [k, v] : t.at("q").items()) f.add_term(std::stoll(k), v.get<std::int64_t>());
    x.add_term(exps.at(0).get<std::int64_t>(), exps.at(1).get<std::int64_t>(), f);
  }
  return x;
}

Json collection_to_json(const ColoredCollection& beta) {
  Json list = Json::array();
  for (const Subpath& sp : beta.subpaths) {
    if (!sp.is_span()) {
      list.push_back(Json{{"edge", sp.edge}});
      continue;
    }
    Json item{{"span", Json::array({sp.start, sp.end})}, {"color", to_string(sp.color)}};
    if (sp.mw) {
      item["m"] = sp.mw->m;
      item["w"] = sp.mw->w;
    }
    list.push_back(item);
  }
  return list;
}

Json pair_to_json(const EdgePair& pair) {
  return Json{{"S1", pair.s1.indices()}, {"S2", pair.s2.indices()}, {"word", pair_word(pair).letters}};
}

Json bijection_report_to_json(const BijectionReport& report) {
  return Json{{"r", report.r},
              {"n", report.n},
              {"mode", report.mode == BijectionMode::BruteForce ? "bruteforce" : "countsOnly"},
              {"countCollections", report.count_collections},
              {"countPairs", report.count_pairs},
              {"injective", report.injective},
              {"surjective", report.surjective},
              {"weightPreserving", report.weight_preserving},
              {"mismatches", report.mismatches},
              {"pass", report.pass()}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-2 cluster variables from maximal Dyck paths", "dyckcluster"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::uint64_t> max_flag;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "Exchange parameter r >= 2")->required()->check(CLI::Range(2, 1 << 20));
    sub->add_option("--n", cfg.n, "Index n >= 3")->required()->check(CLI::Range(3, 1 << 20));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
    sub->add_option("--max-objects", max_flag, "Enumeration size limit")->check(CLI::PositiveNumber);
  };

  auto* path = app.add_subcommand("path", "Print D_n or C_n with its corners");
  common(path);
  path->add_option("--family", cfg.family, "D or C")->check(CLI::IsMember({"D", "C"}));

  auto* expand = app.add_subcommand("expand", "Laurent expansion of X_n");
  common(expand);
  expand->add_option("--mode", cfg.mode, "classical, llz, oracle, coeff or quantum")
      ->check(CLI::IsMember({"classical", "llz", "oracle", "coeff", "quantum"}));
  expand->add_option("--direction", cfg.direction, "forward (X_n) or backward (X_{3-n})")
      ->check(CLI::IsMember({"forward", "backward"}));

  auto* enumerate = app.add_subcommand("enumerate", "List collections or compatible pairs");
  common(enumerate);
  enumerate->add_option("--what", cfg.what, "collections or pairs")->check(CLI::IsMember({"collections", "pairs"}));
  enumerate->add_option("--framework", cfg.framework, "simplified or ls")->check(CLI::IsMember({"simplified", "ls"}));
  enumerate->add_option("--limit", cfg.limit, "Stop after this many records");

  auto* verify = app.add_subcommand("verify", "Cross-check expansions, bijection and weights");
  common(verify);
  verify->add_option("--check", cfg.check, "bijection, recurrence, quantum, weights or all")
      ->check(CLI::IsMember({"bijection", "recurrence", "quantum", "weights", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.limits.max_objects = Limits::kDefaultMaxObjects;
    if (auto env = env_max_objects()) cfg.limits.max_objects = *env;
    if (max_flag) cfg.limits.max_objects = *max_flag;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw InvalidArgument("cannot open " + cfg.out + " for writing");
      sink = &file;
    }
    int code = kOk;
    if (path->parsed()) {
      cmd_path(cfg, *sink);
    } else if (expand->parsed()) {
      cmd_expand(cfg, *sink);
    } else if (enumerate->parsed()) {
      cmd_enumerate(cfg, *sink);
    } else {
      code = cmd_verify(cfg, *sink);
    }
    sink->flush();
    return code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const OverflowError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace dyckcluster::cli
