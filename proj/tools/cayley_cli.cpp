// cayley: command-line front end. Writes one JSON document to stdout (or
// --out). Exit codes: 0 pass, 1 fail, 2 usage error, 3 cap or budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cayley/blocks.hpp"
#include "cayley/ci_engine.hpp"
#include "cayley/closures.hpp"
#include "cayley/error.hpp"
#include "cayley/group_zoo.hpp"
#include "cayley/json_io.hpp"
#include "repro.hpp"

namespace {

using namespace cayley;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct Settings {
  std::string spec;
  std::string what = "regular-left";
  std::string fixture;
  std::string out;
  std::vector<std::string> group_files;
  std::string claim;
  unsigned k = 3;
  std::uint64_t p = 0, n = 0, a = 0, b = 0;
  std::uint64_t cap = kDefaultCap;
  std::size_t budget = 0;
  std::uint64_t seed = repro::Options{}.seed;
  std::size_t trials = repro::Options{}.trials;
  bool timing = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path + ": malformed JSON: " + e.what());
  }
}

GroupSpec require_spec(const Settings& s) {
  if (s.spec.empty()) throw InvalidArgument("--spec is required");
  return parse_group_spec(s.spec);
}

// --fixture wins; otherwise the left regular representation of --spec.
PermGroup input_group(const Settings& s) {
  if (!s.fixture.empty()) return perm_group_from_json(read_json_file(s.fixture));
  return regular_representation(require_spec(s), Side::left).group;
}

int construct(const Settings& s, Json& out) {
  if (s.what == "cor2") {
    auto groups = cor2_groups(s.p, s.n, s.a, s.b);
    out = {{"holomorph", to_json(groups.holomorph)}, {"first", to_json(groups.first)}, {"second", to_json(groups.second)}};
    return kPass;
  }
  if (s.what == "natural") {
    out = to_json(frobenius_natural(s.p, s.n));
    return kPass;
  }
  GroupSpec spec = require_spec(s);
  if (s.what == "regular-left" || s.what == "regular-right") {
    out = to_json(regular_representation(spec, s.what == "regular-left" ? Side::left : Side::right).group);
  } else if (s.what == "holomorph") {
    out = to_json(inner_holomorph(spec));
  } else {
    throw InvalidArgument("unknown --what: " + s.what);
  }
  out["spec"] = to_json(spec);
  return kPass;
}

int closure(const Settings& s, Json& out) {
  if (s.k != 2 && s.k != 3) throw InvalidArgument("--k must be 2 or 3");
  PermGroup g = input_group(s);
  PermGroup c = k_closure(g, s.k, s.budget);
  bool closed = c.order() == g.order();
  out = {{"k", s.k}, {"order", g.order().str()}, {"closure_order", c.order().str()},
         {"is_k_closed", closed}, {"closure", to_json(c)}};
  return kPass;
}

// Ambient defaults to the inner holomorph of --spec.
int ci_check(const Settings& s, Json& out) {
  GroupSpec spec = require_spec(s);
  PermGroup ambient = s.fixture.empty() ? inner_holomorph(spec) : perm_group_from_json(read_json_file(s.fixture));
  auto verdict = babai_check(ambient, spec, s.cap);
  out = to_json(verdict);
  return verdict.status == CiVerdict::Status::ci_for_this_structure ? kPass : kFail;
}

int tower(const Settings& s, Json& out) {
  if (s.group_files.size() != 2) throw InvalidArgument("tower needs two group files");
  PermGroup r = perm_group_from_json(read_json_file(s.group_files[0]));
  PermGroup t = perm_group_from_json(read_json_file(s.group_files[1]));
  auto outcome = block_tower_search(r, t, s.cap);
  out = {{"transcript", outcome.transcript.lines()}};
  if (!outcome.result) {
    out["found"] = false;
    out["failure"] = outcome.failure;
    return kFail;
  }
  out["found"] = true;
  out["result"] = to_json(*outcome.result);
  return kPass;
}

int reproduce(const Settings& s, Json& out) {
  repro::Options options{s.seed, s.cap, s.trials};
  auto report = repro::run_claim(s.claim, options);
  out = report.to_json();
  out["seed"] = s.seed;
  return report.pass ? kPass : kFail;
}

void emit(const Settings& s, const Json& out) {
  std::string text = out.dump(2) + "\n";
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(s.out);
  if (!file) throw InvalidArgument("cannot write " + s.out);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-group tools for Cayley isomorphism questions"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", s.cap, "Element-enumeration cap");
    cmd->add_option("--out", s.out, "Write JSON here instead of stdout");
    cmd->add_flag("--timing", s.timing, "Add wall time in seconds to the output");
  };

  auto* construct_cmd = app.add_subcommand("construct", "Emit a permutation group");
  construct_cmd->add_option("--spec", s.spec, "Group spec, JSON or name such as frobenius:5:4");
  construct_cmd->add_option("--what", s.what, "regular-left | regular-right | holomorph | natural | cor2")
      ->check(CLI::IsMember({"regular-left", "regular-right", "holomorph", "natural", "cor2"}));
  for (auto [flag, target] : {std::pair{"--p", &s.p}, {"--n", &s.n}, {"--a", &s.a}, {"--b", &s.b}})
    construct_cmd->add_option(flag, *target);
  add_common(construct_cmd);

  auto* closure_cmd = app.add_subcommand("closure", "k-closure of a group");
  closure_cmd->add_option("--spec", s.spec, "Use the regular representation of this spec");
  closure_cmd->add_option("--fixture", s.fixture, "Group JSON file");
  closure_cmd->add_option("--k", s.k)->check(CLI::IsMember({2u, 3u}));
  closure_cmd->add_option("--budget", s.budget, "Maximum degree for the search");
  add_common(closure_cmd);

  auto* ci_cmd = app.add_subcommand("ci-check", "Count regular subgroup classes of a spec in an ambient group");
  ci_cmd->add_option("--spec", s.spec)->required();
  ci_cmd->add_option("--fixture", s.fixture, "Ambient group JSON (default: inner holomorph of spec)");
  add_common(ci_cmd);

  auto* tower_cmd = app.add_subcommand("tower", "Block tower search for two regular groups");
  tower_cmd->add_option("groups", s.group_files, "R.json T.json")->expected(2)->required();
  add_common(tower_cmd);

  auto* repro_cmd = app.add_subcommand("reproduce", "Run a named reproduction pipeline");
  repro_cmd->add_option("claim", s.claim)->required()->check(CLI::IsMember(repro::claim_ids()));
  repro_cmd->add_option("--seed", s.seed);
  repro_cmd->add_option("--trials", s.trials);
  add_common(repro_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Json out;
    int code = kUsage;
    if (*construct_cmd) code = construct(s, out);
    else if (*closure_cmd) code = closure(s, out);
    else if (*ci_cmd) code = ci_check(s, out);
    else if (*tower_cmd) code = tower(s, out);
    else if (*repro_cmd) code = reproduce(s, out);
    if (s.timing)
      out["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(s, out);
    return code;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
