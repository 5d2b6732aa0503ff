// Copyright 2026 The sqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sqkd: command-line harness for the one-qubit semiquantum key distribution
// model. Subcommands: run, sweep, optimize, verify, emit-attack.
//
// Exit status: 0 success, 1 a bound or proof step was violated, 2 bad input.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sqkd/attacks.hpp"
#include "sqkd/eavesdropper.hpp"
#include "sqkd/experiments.hpp"
#include "sqkd/serialization.hpp"
#include "sqkd/tradeoff.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct AttackArgs {
  std::string attack;
  std::string family;
  std::string param;
  std::uint64_t seed = 0;
  Eigen::Index ancilla_dim = 2;

  bool random() const { return attack == "random"; }

  std::string describe() const {
    if (!family.empty()) return family + ":" + param;
    if (random()) return "random(d=" + std::to_string(ancilla_dim) + ")";
    return attack;
  }
};

void add_attack_options(CLI::App* cmd, AttackArgs& args) {
  auto* attack = cmd->add_option("--attack", args.attack,
                                 "identity | forward-cnot | return-cz | partial-*(theta) | "
                                 "random | path to an attack document");
  auto* family = cmd->add_option("--family", args.family, "partial-forward-cnot | partial-return-cz");
  attack->excludes(family);
  cmd->add_option("--param", args.param, "family parameter, theta=v");
  cmd->add_option("--ancilla-dim", args.ancilla_dim, "ancilla dimension for random attacks")
      ->check(CLI::Range(1, 6));
}

sqkd::AttackModel build_attack(const AttackArgs& args) {
  if (!args.family.empty()) {
    const sqkd::GridSpec g = sqkd::GridSpec::parse(args.param.empty() ? "theta=" : args.param);
    if (g.count != 1) throw sqkd::DomainError("--param must be a single value here");
    const double params[] = {g.start};
    return sqkd::attack_family(args.family).build(params);
  }
  if (args.attack.empty()) throw sqkd::DomainError("one of --attack or --family is required");
  if (args.random()) return sqkd::random_attack(args.ancilla_dim, args.seed);
  try {
    return sqkd::named_attack(args.attack);
  } catch (const sqkd::DomainError&) {
    if (!std::filesystem::exists(args.attack)) throw;
  }
  return sqkd::parse_attack_file(args.attack);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw sqkd::ParseError("cannot write '" + out + "'");
  f << text;
}

sqkd::Json header(const std::string& command, std::uint64_t seed) {
  sqkd::Json j = sqkd::Json::object();
  j["tool"] = "sqkd";
  j["version"] = SQKD_VERSION;
  j["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
               "." + std::to_string(EIGEN_MINOR_VERSION);
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

sqkd::Json search_to_json(const sqkd::AccessibleInformation& s) {
  sqkd::Json j = sqkd::Json::object();
  j["bits"] = s.bits;
  j["best_restart"] = s.best_restart;
  j["converged"] = s.converged;
  sqkd::Json restarts = sqkd::Json::array();
  for (const auto& r : s.restarts) {
    restarts.push_back({{"bits", r.bits}, {"iterations", r.iterations}, {"converged", r.converged}});
  }
  j["restarts"] = std::move(restarts);
  return j;
}

int cmd_run(const AttackArgs& attack_args, const std::string& povm_spec, std::size_t restarts,
            const std::string& out) {
  const sqkd::AttackModel attack = build_attack(attack_args);
  sqkd::OptimizerConfig opt;
  opt.restarts = restarts;
  opt.seed = attack_args.seed;
  const sqkd::ResolvedPovm povm =
      sqkd::resolve_povm(sqkd::PovmChoice::parse(povm_spec), attack, opt);
  const sqkd::TradeoffReport report = sqkd::verify_tradeoff(attack, povm.povm);
  const sqkd::SiftOutcome sift = sqkd::sift_branch(attack);

  sqkd::Json doc = header("run", attack_args.seed);
  doc["attack_source"] = attack_args.describe();
  doc["povm_source"] = povm_spec;
  doc["attack"] = sqkd::attack_to_json(attack);
  doc["povm"] = sqkd::povm_to_json(povm.povm);
  doc["holevo"] = sqkd::holevo_bound(sift.rho_eve[0], sift.rho_eve[1], sift.p_a);
  doc["info_interval"] = sqkd::Json::array({report.info, doc["holevo"]});
  if (povm.search) doc["optimizer"] = search_to_json(*povm.search);
  doc["tradeoff"] = sqkd::tradeoff_report_to_json(report);
  emit(sqkd::to_document(doc), out);
  return report.holds && report.trace.holds() ? kExitOk : kExitViolation;
}

int cmd_sweep(const std::string& family, const std::string& param, const std::string& povm_spec,
              std::size_t restarts, std::uint64_t seed, const std::string& out) {
  sqkd::SweepConfig cfg{family, sqkd::GridSpec::parse(param), sqkd::PovmChoice::parse(povm_spec),
                        {}};
  cfg.optimizer.restarts = restarts;
  cfg.optimizer.seed = seed;
  const auto rows = sqkd::run_sweep(cfg);
  emit(sqkd::sweep_csv(rows), out);
  for (const auto& r : rows) {
    if (!r.holds) return kExitViolation;
  }
  return kExitOk;
}

int cmd_optimize(const std::string& objective, double epsilon, Eigen::Index ancilla_dim,
                 std::size_t restarts, std::uint64_t seed, const std::string& out) {
  sqkd::OptimizeConfig cfg;
  cfg.objective = sqkd::parse_objective(objective);
  cfg.epsilon = epsilon;
  cfg.ancilla_dim = ancilla_dim;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.povm_optimizer.seed = seed;
  const sqkd::OptimizeResult result = sqkd::run_optimize(cfg);

  sqkd::Json doc = header("optimize", seed);
  doc["objective"] = objective;
  doc["epsilon"] = epsilon;
  doc["ancilla_dim"] = ancilla_dim;
  doc["objective_value"] = result.objective;
  doc["best_restart"] = result.best_restart;
  // Empirical tightness of the bound for the attack found; null when rhs = 0.
  if (result.report.rhs > 0) {
    doc["info_over_rhs"] = result.report.info / result.report.rhs;
  } else {
    doc["info_over_rhs"] = nullptr;
  }
  sqkd::Json stats = sqkd::Json::array();
  for (const auto& r : result.restarts) {
    stats.push_back(
        {{"objective", r.objective}, {"iterations", r.iterations}, {"converged", r.converged}});
  }
  doc["restarts"] = std::move(stats);
  doc["attack"] = sqkd::attack_to_json(result.attack);
  doc["povm"] = sqkd::povm_to_json(result.povm);
  doc["tradeoff"] = sqkd::tradeoff_report_to_json(result.report);
  emit(sqkd::to_document(doc), out);
  return result.report.holds && result.report.trace.holds() ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed,
               const std::string& out) {
  const sqkd::VerifySummary s = sqkd::run_verify({sqkd::parse_suite(suite), trials, seed});
  const std::string text = sqkd::format_summary(s);
  emit(text, out);
  if (!out.empty()) std::cout << text;
  return s.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_emit_attack(const AttackArgs& args, const std::string& out) {
  emit(sqkd::to_document(sqkd::attack_to_json(build_attack(args))), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and trade-off verifier for semiquantum key distribution with classical Alice"};
  app.require_subcommand(1);

  AttackArgs attack_args;
  std::string povm_spec = "optimize";
  std::string out;
  std::string param;
  std::string family;
  std::string objective = "max-gap";
  std::string suite = "theorem";
  std::uint64_t seed = 0;
  std::size_t restarts = 32;
  std::size_t trials = 1000;
  double epsilon = 0.01;
  Eigen::Index ancilla_dim = 2;

  auto* run = app.add_subcommand("run", "evaluate one attack and POVM, emit a JSON report");
  add_attack_options(run, attack_args);
  run->add_option("--povm", povm_spec, "z | x | optimize | path to a POVM document");
  run->add_option("--seed", attack_args.seed, "seed for random attacks and the POVM search");
  run->add_option("--restarts", restarts, "POVM search restarts")->check(CLI::PositiveNumber);
  run->add_option("--out", out, "report path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "sweep a one-parameter family, emit CSV");
  sweep->add_option("--family", family, "partial-forward-cnot | partial-return-cz")->required();
  sweep->add_option("--param", param, "grid, theta=a:b:n")->required();
  sweep->add_option("--povm", povm_spec, "z | x | optimize | path to a POVM document");
  sweep->add_option("--restarts", restarts, "POVM search restarts")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "POVM search seed");
  sweep->add_option("--out", out, "CSV path (default stdout)");

  auto* optimize = app.add_subcommand("optimize", "search for extremal attacks");
  optimize->add_option("--objective", objective, "max-gap | max-info");
  optimize->add_option("--epsilon", epsilon, "disturbance budget for max-info");
  optimize->add_option("--ancilla-dim", ancilla_dim, "ancilla dimension")->check(CLI::Range(1, 6));
  optimize->add_option("--restarts", restarts, "attack search restarts")->check(CLI::PositiveNumber);
  optimize->add_option("--seed", seed, "search seed");
  optimize->add_option("--out", out, "report path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a randomized verification suite");
  verify->add_option("--suite", suite,
                     "lemma1 | lemma2 | theorem | proof-chain | proof-chain-named | sift-crosscheck");
  verify->add_option("--trials", trials, "number of trials");
  verify->add_option("--seed", seed, "suite seed");
  verify->add_option("--out", out, "summary path (also printed)");

  auto* emit_attack = app.add_subcommand("emit-attack", "write an attack document");
  add_attack_options(emit_attack, attack_args);
  emit_attack->add_option("--seed", attack_args.seed, "seed for random attacks");
  emit_attack->add_option("--out", out, "document path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*run) return cmd_run(attack_args, povm_spec, restarts, out);
    if (*sweep) return cmd_sweep(family, param, povm_spec, restarts, seed, out);
    if (*optimize) return cmd_optimize(objective, epsilon, ancilla_dim, restarts, seed, out);
    if (*verify) return cmd_verify(suite, trials, seed, out);
    if (*emit_attack) return cmd_emit_attack(attack_args, out);
  } catch (const std::exception& e) {
    std::cerr << "sqkd: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
