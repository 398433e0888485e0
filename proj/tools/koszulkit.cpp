// koszulkit command-line front end.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "koszulkit/koszulkit.hpp"

namespace {

using nlohmann::json;
using namespace koszulkit;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::string out;
  std::string window = kStandardWindow.str();
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "tsv", "human"}));
  cmd->add_option("--out", c.out, "Write the report to this file instead of stdout");
  cmd->add_option("--window", c.window, "Cohomology window i0:i1,j0:j1");
}

std::string header(const std::string& command) {
  std::ostringstream os;
  os << "# koszulkit " << command << "\n# shift convention: " << kShiftConvention << "\n";
  return os.str();
}

json envelope(const std::string& command) {
  return {{"schema", 1}, {"command", command}, {"convention", kShiftConvention}};
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

Window parse_window(const std::string& s) {
  try {
    return Window::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --window: ") + e.what());
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("KOSZULKIT_SEED")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("KOSZULKIT_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

// ---------------------------------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  int e = 1, f = 1;
  std::uint32_t p = 3;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  bool grid = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Window w = parse_window(a.common.window);
  if (a.f < 0 || a.e < a.f) throw UsageError("dimensions must satisfy 0 <= dim-f <= dim-e");
  if (!is_prime(a.p)) throw UsageError("p must be prime, got " + std::to_string(a.p));
  if (a.trials && *a.trials < 0) throw UsageError("--trials must be nonnegative");
  std::vector<std::string> suites;
  if (a.suite == "all") suites = suite_names();
  else suites = {a.suite};

  std::vector<std::pair<int, int>> dims;
  if (a.grid) {
    for (int e = 0; e <= 3; ++e)
      for (int f = 0; f <= e; ++f) dims.push_back({e, f});
  } else {
    dims.push_back({a.e, a.f});
  }

  std::vector<SuiteOutcome> outcomes;
  for (auto& s : suites)
    for (auto [e, f] : dims) {
      SuiteConfig c;
      c.e = e;
      c.f = f;
      c.p = a.p;
      c.trials = a.trials;
      c.seed = resolve_seed(a.seed);
      c.window = w;
      outcomes.push_back(run_suite(s, c));
    }
  bool pass = true;
  for (auto& o : outcomes) pass = pass && o.pass();

  std::ostringstream os;
  if (a.common.format == "json") {
    json j = envelope("verify");
    j["suites"] = json::array();
    for (auto& o : outcomes) j["suites"].push_back(to_json(o));
    j["verdict"] = pass ? "pass" : "fail";
    os << j.dump(2) << "\n";
  } else if (a.common.format == "tsv") {
    os << "suite\te\tf\tp\tseed\ttrial\tverdict\n";
    for (auto& o : outcomes)
      for (auto& i : o.instances)
        os << o.suite << "\t" << o.config.e << "\t" << o.config.f << "\t" << o.config.p << "\t" << o.config.seed << "\t"
           << i.trial << "\t" << (i.pass ? "pass" : "fail") << "\n";
  } else {
    os << header("verify") << "# window " << w.str() << "\n";
    for (auto& o : outcomes) {
      os << o.suite << " e=" << o.config.e << " f=" << o.config.f << " p=" << o.config.p << " seed=" << o.config.seed
         << ": " << (o.instances.size() - o.failures()) << "/" << o.instances.size() << " pass\n";
      for (auto& i : o.instances)
        if (!i.pass) os << "  trial " << i.trial << " FAILED\n  " << i.detail.dump() << "\n";
    }
    os << (pass ? "PASS" : "FAIL") << "\n";
  }
  emit(a.common, os.str());
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------------------------

struct Sl2Args {
  Common common;
  std::uint32_t p = 3;
  std::optional<int> lambda;
  bool singular = false;
};

int cmd_sl2(const Sl2Args& a) {
  if (!is_prime(a.p) || a.p < 3) throw UsageError("p must be an odd prime, got " + std::to_string(a.p));
  if (a.singular == a.lambda.has_value()) throw UsageError("give exactly one of --lambda or --singular");
  sl2::BlockDescriptor d{a.p, a.lambda};
  sl2::BlockReport r;
  try {
    r = sl2::block_report(d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream os;
  if (a.common.format == "json") {
    json j = envelope("sl2");
    j.update(r.json);
    os << j.dump(2) << "\n";
  } else if (a.common.format == "tsv") {
    os << "check\tverdict\n";
    for (auto& [k, v] : r.json["verdicts"].items()) os << k << "\t" << v.get<std::string>() << "\n";
  } else {
    os << header("sl2") << "block " << r.json["block"].dump() << "\n"
       << "dim " << r.json["dim"] << "\n"
       << "degree dims " << r.json["degree_dims"].dump() << "\n"
       << "P(t) = " << r.json["poincare"]["polynomial"].get<std::string>() << "\n";
    for (auto& [k, v] : r.json["verdicts"].items()) os << "  " << k << ": " << v.get<std::string>() << "\n";
    os << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  emit(a.common, os.str());
  return r.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------------------------

struct TableArgs {
  Common common;
  std::string file;
  std::string functor = "none";
};

int cmd_table(const TableArgs& a) {
  const Window w = parse_window(a.common.window);
  std::ifstream in(a.file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + a.file);
  SemifreeModule m;
  try {
    m = semifree_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw UsageError(a.file + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(a.file + ": " + e.what());
  }
  const auto kind = m.algebra.kind();
  ModulePtr target;
  if (a.functor == "none") {
    target = expand(m);
  } else if (a.functor == "kappa") {
    if (kind != AlgebraKind::S) throw UsageError("--functor kappa needs a module over S");
    target = kappa(expand(m));
  } else if (a.functor == "kappa-inv") {
    if (kind != AlgebraKind::T) throw UsageError("--functor kappa-inv needs a module over T");
    target = kappa_inv(expand(m));
  } else {
    target = expand(dualize(m));
  }
  const auto table = cohomology(*target, w);

  std::ostringstream os;
  if (a.common.format == "json") {
    json j = envelope("table");
    j["algebra"] = m.algebra.to_json();
    j["functor"] = a.functor;
    j["window"] = w.str();
    j["table"] = to_json(table);
    os << j.dump(2) << "\n";
  } else if (a.common.format == "tsv") {
    os << "i\tj\tdim\n";
    for (auto& [b, n] : table.entries()) os << b.i << "\t" << b.j << "\t" << n << "\n";
  } else {
    os << header("table") << "# window " << w.str() << "\n" << to_laurent(table) << "\n";
  }
  emit(a.common, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear Koszul duality and SL(2) block computations over prime fields"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run seeded randomized verification suites");
  add_common(verify, va.common);
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", va.suite, "Suite to run")->check(CLI::IsMember(choices));
  verify->add_option("--dim-e", va.e, "dim E");
  verify->add_option("--dim-f", va.f, "dim F");
  verify->add_option("-p,--prime", va.p, "Characteristic");
  verify->add_option("--trials", va.trials, "Trials per suite (default 25, or 10 for exactness and fbot)");
  verify->add_option("--seed", va.seed, "Seed (falls back to KOSZULKIT_SEED, then 1)");
  verify->add_flag("--grid", va.grid, "Run every 0 <= f <= e <= 3");

  Sl2Args sa;
  auto* sl2cmd = app.add_subcommand("sl2", "Report on a block of the restricted enveloping algebra of sl2");
  add_common(sl2cmd, sa.common);
  sl2cmd->add_option("-p,--prime", sa.p, "Characteristic");
  auto* lam = sl2cmd->add_option("--lambda", sa.lambda, "Regular block with 0 <= lambda <= (p-3)/2");
  sl2cmd->add_flag("--singular", sa.singular, "The singular block")->excludes(lam);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Cohomology table of a serialized semifree dg-module");
  add_common(table, ta.common);
  table->add_option("file", ta.file, "Module JSON")->required();
  table->add_option("--functor", ta.functor, "Apply a functor first")
      ->check(CLI::IsMember({"none", "kappa", "kappa-inv", "dual"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*sl2cmd) return cmd_sl2(sa);
    return cmd_table(ta);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
