#pragma once

// Seeded randomized verification suites. Each trial draws its modules from an independent stream
// derived from (seed, trial, suite name), so a suite's outcome depends only on its configuration.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homdual.hpp"
#include "lkd.hpp"
#include "qmodel.hpp"
#include "random.hpp"

namespace koszulkit {

struct SuiteConfig {
  int e = 1;
  int f = 1;
  std::uint32_t p = 3;
  std::optional<int> trials;  // nullopt: the suite's default
  std::uint64_t seed = 1;
  Window window = kStandardWindow;
};

struct InstanceOutcome {
  int trial = 0;
  bool pass = true;
  nlohmann::json detail;  // tables and diagnostics, filled on failure
};

struct SuiteOutcome {
  std::string suite;
  SuiteConfig config;
  int trials = 0;
  std::vector<InstanceOutcome> instances;

  std::size_t failures() const {
    std::size_t n = 0;
    for (auto& i : instances) n += !i.pass;
    return n;
  }
  bool pass() const { return failures() == 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"round-trip", "exactness", "duality-oracle", "biduality",
                                              "compat",     "fbot",      "shift"};
  return names;
}

inline int default_trials(const std::string& suite) { return suite == "exactness" || suite == "fbot" ? 10 : 25; }

namespace suite_detail {

inline InstanceOutcome round_trip(const SuiteConfig& c, const KoszulContext& K, int t) {
  auto rng = trial_rng(c.seed, t, "round-trip");
  auto M = random_semifree(K.S(), rng);
  auto N = random_semifree(K.T(), rng);
  auto counit_cone = cohomology(*cone(counit(expand(M))), c.window);
  auto unit_cone = cohomology(*cone(unit(expand(N))), c.window);
  InstanceOutcome o{t, counit_cone.empty() && unit_cone.empty(), {}};
  if (!o.pass)
    o.detail = {{"counit_cone", to_json(counit_cone)}, {"unit_cone", to_json(unit_cone)},
                {"M", to_json(M)},                     {"N", to_json(N)}};
  return o;
}

inline InstanceOutcome exactness(const SuiteConfig& c, const KoszulContext& K, int t) {
  auto rng = trial_rng(c.seed, t, "exactness");
  auto M = random_semifree(K.S(), rng);
  auto N = random_semifree(K.T(), rng);
  auto cm = cone(identity_map(M));
  auto cn = cone(identity_map(N));
  auto fm = cohomology(*functor_F(cm), c.window);
  auto gn = cohomology(*functor_G(cn), c.window);
  auto in_m = cohomology(*expand(cm), c.window);
  auto in_n = cohomology(*expand(cn), c.window);
  InstanceOutcome o{t, fm.empty() && gn.empty() && in_m.empty() && in_n.empty(), {}};
  if (!o.pass)
    o.detail = {{"F_of_cone", to_json(fm)}, {"G_of_cone", to_json(gn)}, {"cone_S", to_json(in_m)}, {"cone_T", to_json(in_n)}};
  return o;
}

inline InstanceOutcome oracle(const SuiteConfig& c, const KoszulContext& K, int t) {
  auto rng = trial_rng(c.seed, t, "duality-oracle");
  auto N = random_semifree(K.T(), rng);
  auto r = oracle_compare_T(N, c.window);
  InstanceOutcome o{t, r.equal(), {}};
  if (!o.pass) o.detail = {{"report", to_json(r)}, {"N", to_json(N)}};
  return o;
}

inline InstanceOutcome biduality(const SuiteConfig& c, const KoszulContext& K, int t) {
  auto rng = trial_rng(c.seed, t, "biduality");
  auto N = random_semifree(K.T(), rng);
  auto M = random_semifree(K.S(), rng);
  auto phi = biduality_map(N);
  auto chain = check_chain_map(phi);
  auto cone_table = chain.ok ? cohomology(*cone(expand(phi)), c.window) : BigradedDims{};
  const bool s_involution = dualize_S(dualize_S(M)) == M;
  InstanceOutcome o{t, chain.ok && cone_table.empty() && s_involution, {}};
  if (!o.pass)
    o.detail = {{"chain_map", chain.ok ? "yes" : chain.message},
                {"biduality_cone", to_json(cone_table)},
                {"D_S_involution", s_involution}};
  return o;
}

inline InstanceOutcome compat(const SuiteConfig& c, const KoszulContext& K, int t) {
  auto rng = trial_rng(c.seed, t, "compat");
  auto M = random_semifree(K.S(), rng);
  auto r = check_compat(M, c.window);
  InstanceOutcome o{t, r.equal(), {}};
  if (!o.pass) o.detail = {{"report", to_json(r)}, {"M", to_json(M)}};
  return o;
}

inline InstanceOutcome fbot(const SuiteConfig& c, const KoszulContext& K, int t) {
  auto rng = trial_rng(c.seed, t, "fbot");
  auto M = random_semifree(K.Q(), rng);
  auto r = check_fbot(M, c.window);
  InstanceOutcome o{t, r.equal(), {}};
  if (!o.pass) o.detail = {{"report", to_json(r)}, {"M", to_json(M)}};
  return o;
}

/// ξ(M<m>) = ξ(M)<m>[-m] on presentations, and κ(M<m>) = κ(M)<m> on cohomology, m in -2..2.
inline InstanceOutcome shift_identities(const SuiteConfig& c, const KoszulContext& K, int t) {
  auto rng = trial_rng(c.seed, t, "shift");
  auto M = random_semifree(K.S(), rng);
  const Window& w = c.window;
  InstanceOutcome o{t, true, {}};
  auto failures = nlohmann::json::array();
  for (int m = -2; m <= 2; ++m) {
    const bool xi_ok = regrade_xi(shifted(M, 0, m)) == shifted(regrade_xi(M), -m, m);
    const Window pre{w.i_lo, w.i_hi, w.j_lo - m, w.j_hi - m};
    auto lhs = cohomology(*kappa(expand(shifted(M, 0, m))), w);
    auto rhs = shift(cohomology(*kappa(expand(M)), pre), 0, m);
    const bool kappa_ok = lhs == rhs;
    if (!xi_ok || !kappa_ok) {
      o.pass = false;
      failures.push_back({{"m", m}, {"xi", xi_ok}, {"kappa_lhs", to_json(lhs)}, {"kappa_rhs", to_json(rhs)}});
    }
  }
  if (!o.pass) o.detail = {{"failures", failures}, {"M", to_json(M)}};
  return o;
}

}  // namespace suite_detail

/// Throws std::invalid_argument on an unknown suite or invalid configuration.
inline SuiteOutcome run_suite(const std::string& suite, const SuiteConfig& c) {
  if (c.f < 0 || c.e < c.f) throw std::invalid_argument("dimensions must satisfy 0 <= f <= e");
  if (!is_prime(c.p)) throw std::invalid_argument("p must be prime, got " + std::to_string(c.p));
  if (c.trials && *c.trials < 0) throw std::invalid_argument("trials must be nonnegative");
  using Fn = InstanceOutcome (*)(const SuiteConfig&, const KoszulContext&, int);
  Fn fn = nullptr;
  if (suite == "round-trip") fn = suite_detail::round_trip;
  else if (suite == "exactness") fn = suite_detail::exactness;
  else if (suite == "duality-oracle") fn = suite_detail::oracle;
  else if (suite == "biduality") fn = suite_detail::biduality;
  else if (suite == "compat") fn = suite_detail::compat;
  else if (suite == "fbot") fn = suite_detail::fbot;
  else if (suite == "shift") fn = suite_detail::shift_identities;
  else throw std::invalid_argument("unknown suite '" + suite + "'");

  const KoszulContext K{c.e, c.f, c.p};
  SuiteOutcome out{suite, c, c.trials.value_or(default_trials(suite)), {}};
  for (int t = 0; t < out.trials; ++t) out.instances.push_back(fn(c, K, t));
  return out;
}

inline nlohmann::json to_json(const SuiteOutcome& s) {
  nlohmann::json j;
  j["suite"] = s.suite;
  j["e"] = s.config.e;
  j["f"] = s.config.f;
  j["p"] = s.config.p;
  j["seed"] = s.config.seed;
  j["trials"] = s.trials;
  j["window"] = s.config.window.str();
  j["passed"] = s.instances.size() - s.failures();
  j["verdict"] = s.pass() ? "pass" : "fail";
  auto inst = nlohmann::json::array();
  for (auto& i : s.instances) {
    nlohmann::json r{{"trial", i.trial}, {"verdict", i.pass ? "pass" : "fail"}};
    if (!i.pass) r["detail"] = i.detail;
    inst.push_back(r);
  }
  j["instances"] = inst;
  return j;
}

}  // namespace koszulkit
