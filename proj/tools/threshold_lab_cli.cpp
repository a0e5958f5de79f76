// Command-line front end: simulate, enumerate, expand, reduce, resilience, verify.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tlab/dynamics.hpp"
#include "tlab/enumeration.hpp"
#include "tlab/error.hpp"
#include "tlab/expansions.hpp"
#include "tlab/io.hpp"
#include "tlab/reductions.hpp"
#include "tlab/resilience.hpp"
#include "tlab/verify.hpp"

namespace {

using namespace tlab;

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kGuardExceeded = 3;
constexpr int kInvariantViolated = 4;

struct Config {
  std::string input;
  std::string formula;
  std::string initial;
  std::string kind;
  std::string mode;
  std::string rule = "auto";
  std::string family;
  std::string action = "W";
  std::size_t K = 0;
  std::size_t size = 0;
  std::size_t node = 0;
  std::size_t guard_n = default_guard_n();
  std::size_t max_states = 0;
  std::size_t workers = 0;
  std::uint64_t seed = 0;
  double timeout = 60.0;
  bool verify = false;
  bool witnesses = false;
};

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

EnumerationOptions enumeration_options(const Config& c) {
  EnumerationOptions o;
  o.guard_n = c.guard_n;
  o.workers = c.workers;
  return o;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::InvalidInput, message);
}

int run_simulate(const Config& c) {
  require(!c.input.empty(), "simulate needs --input");
  require(!c.initial.empty(), "simulate needs --initial");
  const Json doc = read_json_file(c.input);
  const ActionProfile a = ActionProfile::parse(c.initial);
  LimitReport report;
  if (c.rule == "weighted") {
    const WeightedGraph w = parse_weighted(doc);
    const std::size_t guard = c.max_states ? c.max_states : default_guard(w.edges().size(), w.size());
    report = limit_cycle([&](const ActionProfile& x) { return step_weighted(w, x); }, a, guard);
  } else {
    const InstanceFile inst = parse_instance(doc);
    const Graph& g = inst.graph;
    const std::size_t guard = c.max_states ? c.max_states : default_guard(g.edge_count(), g.size());
    if (c.rule == "inverted") {
      const ThresholdDist k = inst.effective_thresholds();
      report = limit_cycle([&](const ActionProfile& x) { return step_inverted(g, k, x); }, a, guard);
    } else if (inst.types && (c.rule == "auto" || c.rule == "types")) {
      const TypeDist& q = *inst.types;
      report = limit_cycle([&](const ActionProfile& x) { return step_types(g, q, x); }, a, guard);
    } else {
      require(c.rule == "auto" || c.rule == "threshold", "unknown or inapplicable --rule '" + c.rule + "'");
      const ThresholdDist k = inst.effective_thresholds();
      report = limit_cycle([&](const ActionProfile& x) { return step(g, k, x); }, a, guard);
    }
  }
  emit(to_json(report));
  return kOk;
}

int run_enumerate(const Config& c) {
  require(!c.input.empty(), "enumerate needs --input");
  const InstanceFile inst = parse_instance(read_json_file(c.input));
  auto options = enumeration_options(c);
  if (!c.witnesses) options.witness_cap = 0;
  const LimitCensus census = enumerate_limits(inst.graph, inst.effective_thresholds(), options);
  Json out = to_json(census);
  if (c.witnesses) {
    Json fixed = Json::array(), pairs = Json::array();
    for (const auto& a : census.fixed_point_list) fixed.push_back(a.str());
    for (const auto& [a, b] : census.two_cycle_list) pairs.push_back(Json::array({a.str(), b.str()}));
    out["fixed_point_list"] = std::move(fixed);
    out["two_cycle_list"] = std::move(pairs);
    out["lists_truncated"] = census.lists_truncated;
  }
  emit(out);
  return kOk;
}

int run_expand(const Config& c) {
  require(!c.input.empty(), "expand needs --input");
  const Json doc = read_json_file(c.input);
  if (c.kind == "unit-weights") {
    emit(to_json(integer_weights_to_unit(parse_weighted(doc))));
  } else if (c.kind == "drop-self-loops") {
    emit(to_json(remove_self_loops(parse_weighted(doc))));
  } else if (c.kind == "signed") {
    emit(to_json(signed_to_primary(parse_weighted(doc))));
  } else {
    const InstanceFile inst = parse_instance(doc);
    const ThresholdDist k = inst.effective_thresholds();
    if (c.kind == "bipartite") {
      emit(to_json(bipartite_expansion(inst.graph, k)));
    } else if (c.kind == "symmetric") {
      emit(to_json(symmetric_expansion(inst.graph, k)));
    } else if (c.kind == "one-step-symmetric") {
      emit(to_json(one_step_symmetric_expansion(inst.graph, k)));
    } else if (c.kind == "inverted") {
      emit(to_json(inverted_to_primary(inst.graph, k)));
    } else if (c.kind == "remove-node") {
      require(c.action == "B" || c.action == "W", "--action must be B or W");
      const auto parts =
          remove_constant_node(inst.graph, k, c.node, c.action == "B" ? Action::B : Action::W);
      Json out = Json::array();
      for (const auto& part : parts) {
        Json j = to_json(part.graph, part.thresholds);
        j["nodes"] = part.nodes;
        out.push_back(std::move(j));
      }
      emit(Json{{"components", std::move(out)}});
    } else {
      throw Error(ErrorKind::InvalidInput, "unknown --kind '" + c.kind + "' for expand");
    }
  }
  return kOk;
}

int run_reduce(const Config& c) {
  require(!c.formula.empty(), "reduce needs --formula");
  const Formula f = parse_formula(read_json_file(c.formula));
  const auto options = enumeration_options(c);
  int status = kOk;
  Json out;
  if (c.kind == "fix") {
    const auto gadget = fix_reduction(f);
    out = to_json(gadget);
    if (c.verify) {
      const auto F = count_fixed_points_backtracking(gadget.graph, gadget.thresholds, c.timeout);
      const auto oracle = count_sat(f);
      Json v{{"fixed_points", F}};
      try {
        const auto counts = recover_sat_count(F, f.num_vars);
        v["recovered_sat"] = counts.sat;
        v["recovered_nsat"] = counts.nsat;
        v["oracle_sat"] = oracle;
        v["result"] = counts.sat == oracle ? "MATCH" : "MISMATCH";
      } catch (const Error& e) {
        v["oracle_sat"] = oracle;
        v["result"] = "MISMATCH";
        v["error"] = e.what();
      }
      if (v["result"] != "MATCH") status = kInvariantViolated;
      out["verification"] = std::move(v);
    }
  } else if (c.kind == "pred") {
    const auto gadget = pred_reduction(f);
    out = to_json(gadget);
    if (c.verify) {
      const bool reachable = is_reachable(gadget.graph, gadget.thresholds, gadget.target, options);
      const bool satisfiable = count_sat(f) > 0;
      out["verification"] = Json{{"reachable", reachable},
                                 {"satisfiable", satisfiable},
                                 {"result", reachable == satisfiable ? "MATCH" : "MISMATCH"}};
      if (reachable != satisfiable) status = kInvariantViolated;
    }
  } else if (c.kind == "reachable-pred") {
    if (c.verify) {
      const auto r = reachable_pred_reduction(f, options);
      out = to_json(r.instance);
      Json v{{"measured", r.measured},
             {"claimed", r.claimed},
             {"cover_count", r.cover_count},
             {"factorizes", r.factorizes},
             {"result", r.matches_claim ? "MATCH" : "DISCREPANCY"}};
      if (!r.notice.empty()) v["notice"] = r.notice;
      out["verification"] = std::move(v);
    } else {
      out = to_json(reachable_pred_construction(f));
    }
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown --kind '" + c.kind + "' for reduce");
  }
  emit(out);
  return status;
}

int run_resilience(const Config& c) {
  if (c.mode == "closed-form") {
    require(!c.family.empty() && c.size > 0 && c.K > 0, "closed-form needs --family, --size and --K");
    const Rational mu = resilience_closed_form(parse_family(c.family), c.size, c.K);
    emit(Json{{"family", c.family}, {"n", c.size}, {"K", c.K}, {"mu", to_json(mu)}});
    return kOk;
  }
  require(!c.input.empty(), "resilience --mode " + c.mode + " needs --input");
  const Graph g = parse_instance(read_json_file(c.input)).graph;
  if (c.mode == "brute") {
    require(c.K > 0, "brute mode needs --K");
    emit(to_json(resilience_bruteforce(g, c.K)));
  } else if (c.mode == "greedy") {
    const TypeDist q = greedy_upper_bound_q(g);
    const std::size_t K = c.K ? c.K : g.size();
    const auto check = check_recovery(g, q, K);
    Json out{{"q", to_json(q)}, {"norm", to_json(q.l1_norm())}, {"K", std::min(K, g.size())},
             {"recovers", check.recovers}};
    if (check.failing_seed) out["failing_seed"] = check.failing_seed->str();
    emit(out);
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown --mode '" + c.mode + "'");
  }
  return kOk;
}

int run_verify(const Config& c) {
  AcceptanceSuite suite({c.seed, c.workers});
  std::vector<CriterionResult> results;
  if (c.kind.empty() || c.kind == "all") {
    results = suite.run_all();
  } else {
    int id = 0;
    try {
      id = std::stoi(c.kind);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "verify --kind takes a criterion number 1..10 or 'all'");
    }
    if (id < 1 || id > AcceptanceSuite::kCount)
      throw Error(ErrorKind::InvalidInput, "verify --kind takes a criterion number 1..10 or 'all'");
    results.push_back(suite.run(id));
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << format_result(r) << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kInvariantViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"threshold-lab: deterministic linear-threshold dynamics on finite graphs"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--guard-n", c.guard_n, "Largest n for exhaustive 2^n scans")->check(CLI::PositiveNumber);
    sub->add_option("--workers", c.workers, "Worker threads for scans (0 = all cores)");
  };

  auto* simulate = app.add_subcommand("simulate", "Iterate from a profile to its limit cycle");
  simulate->add_option("--input", c.input, "Instance JSON")->required();
  simulate->add_option("--initial", c.initial, "Initial profile as a B/W string")->required();
  simulate->add_option("--rule", c.rule, "auto | threshold | types | inverted | weighted")
      ->check(CLI::IsMember({"auto", "threshold", "types", "inverted", "weighted"}));
  simulate->add_option("--max-states", c.max_states, "Trajectory guard (default 10(14|E|+6n)+4)");

  auto* enumerate = app.add_subcommand("enumerate", "Count fixed points and 2-cycles over all profiles");
  enumerate->add_option("--input", c.input, "Instance JSON")->required();
  enumerate->add_flag("--witnesses", c.witnesses, "Also list the fixed points and 2-cycles");
  add_common(enumerate);

  auto* expand = app.add_subcommand("expand", "Apply a structure-preserving transform");
  expand->add_option("--input", c.input, "Instance JSON (weighted for unit-weights, drop-self-loops, signed)")
      ->required();
  expand->add_option("--kind", c.kind,
                     "bipartite | symmetric | one-step-symmetric | inverted | signed | unit-weights | "
                     "drop-self-loops | remove-node")
      ->required();
  expand->add_option("--node", c.node, "Node to remove (remove-node)");
  expand->add_option("--action", c.action, "Pinned action B or W (remove-node)");

  auto* reduce = app.add_subcommand("reduce", "Build a formula gadget");
  reduce->add_option("--formula", c.formula, "Formula JSON")->required();
  reduce->add_option("--kind", c.kind, "fix | pred | reachable-pred")->required();
  reduce->add_flag("--verify", c.verify, "Compare the gadget against the model-counting oracle");
  reduce->add_option("--timeout", c.timeout, "Seconds allowed for fixed-point counting");
  add_common(reduce);

  auto* resilience = app.add_subcommand("resilience", "Resilience measure");
  resilience->add_option("--mode", c.mode, "brute | greedy | closed-form")
      ->required()
      ->check(CLI::IsMember({"brute", "greedy", "closed-form"}));
  resilience->add_option("--input", c.input, "Instance JSON (thresholds/types are ignored)");
  resilience->add_option("--K", c.K, "Perturbation budget");
  resilience->add_option("--family", c.family, "star | path | cycle | complete (closed-form)");
  resilience->add_option("--size", c.size, "Family size n (closed-form)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites and print a pass/fail table");
  verify->add_option("--kind", c.kind, "Criterion number 1..10 or 'all'");
  verify->add_option("--seed", c.seed, "Seed for randomized suites");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*simulate) return run_simulate(c);
    if (*enumerate) return run_enumerate(c);
    if (*expand) return run_expand(c);
    if (*reduce) return run_reduce(c);
    if (*resilience) return run_resilience(c);
    if (*verify) return run_verify(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::GuardExceeded:
      case ErrorKind::Timeout: return kGuardExceeded;
      case ErrorKind::IdentityViolated: return kInvariantViolated;
      default: return kInvalidInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}
