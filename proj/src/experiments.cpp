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

#include "sqkd/experiments.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "sqkd/parallel.hpp"
#include "sqkd/serialization.hpp"

namespace sqkd {
namespace {

constexpr double kInfeasibleObjective = 1e6;

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Ket gaussian_ket(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Ket v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = {re, im};
  }
  return v;
}

Operator gaussian_matrix(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = {re, im};
    }
  }
  return m;
}

double parse_double(std::string_view text, std::string_view what) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

struct TrialResult {
  double slack = std::numeric_limits<double>::infinity();
  double equality_error = 0;
  bool violation = false;
};

TrialResult evaluate_trial(Suite suite, std::mt19937_64& rng) {
  TrialResult r;
  switch (suite) {
    case Suite::kLemma1: {
      const JointDistribution j = random_joint(rng);
      r.slack = lemma1_bound(j) - mutual_information(j);
      r.violation = r.slack < -tol::kSlack;
      break;
    }
    case Suite::kLemma2: {
      const Lemma2Instance inst = random_lemma2_instance(rng);
      r.slack = lemma2_check(inst.phi0, inst.phi1, inst.x, inst.povm).slack();
      r.violation = r.slack < -tol::kSlack;
      break;
    }
    case Suite::kTheorem: {
      const AttackInstance inst = random_attack_instance(rng);
      const double info = eve_information(inst.attack, inst.povm);
      const double rhs = theorem_rhs(ctrl_error(inst.attack), sift_branch(inst.attack).p_sift);
      r.slack = rhs - info;
      r.violation = r.slack < -tol::kSlack;
      break;
    }
    case Suite::kProofChain: {
      const AttackInstance inst = random_attack_instance(rng);
      const ProofTrace trace = proof_chain(inst.attack, inst.povm);
      r.slack = trace.min_inequality_slack();
      r.equality_error = trace.max_equality_error();
      r.violation = !trace.holds();
      break;
    }
    case Suite::kSiftCrosscheck: {
      const auto d = static_cast<Eigen::Index>(uniform_index(rng, 1, 4));
      const SiftOutcome sift = sift_branch(random_attack(d, rng));
      r.equality_error = std::abs(sift.p_sift - sift.p_sift_operator);
      r.violation = r.equality_error > tol::kEquality;
      break;
    }
    case Suite::kProofChainNamed:
      break;
  }
  return r;
}

std::vector<AttackInstance> named_instances() {
  const double q = std::numbers::pi / 8;
  const std::vector<std::string> names = {
      "identity", "forward-cnot", "return-cz"};
  std::vector<AttackModel> attacks;
  for (const auto& n : names) attacks.push_back(named_attack(n));
  for (double theta : {q, 2 * q, 3 * q}) {
    attacks.push_back(partial_forward_cnot_attack(theta));
    attacks.push_back(partial_return_cz_attack(theta));
  }
  std::vector<AttackInstance> out;
  for (const auto& a : attacks) {
    out.push_back({a, computational_basis_povm(a.ancilla_dim)});
    out.push_back({a, fourier_basis_povm(a.ancilla_dim)});
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------

JointDistribution random_joint(std::mt19937_64& rng) {
  const std::size_t m = uniform_index(rng, 1, 8);
  std::exponential_distribution<double> mass(1.0);
  std::bernoulli_distribution zero(0.2);
  Eigen::MatrixXd t(2, static_cast<Eigen::Index>(m));
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    const double w = mass(rng);
    t.data()[i] = zero(rng) ? 0.0 : w;
  }
  if (t.sum() <= 0.0) t(0, 0) = 1.0;
  t /= t.sum();
  return JointDistribution::from_table(t);
}

Povm random_povm(Eigen::Index dim, std::size_t outcomes, std::mt19937_64& rng) {
  std::vector<Operator> factors;
  factors.reserve(outcomes);
  for (std::size_t e = 0; e < outcomes; ++e) factors.push_back(gaussian_matrix(dim, rng));
  return povm_from_factors(factors);
}

Lemma2Instance random_lemma2_instance(std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(uniform_index(rng, 1, 4));
  const std::size_t m = uniform_index(rng, 1, 6);
  std::normal_distribution<double> log_scale(0.0, 1.0);
  Ket phi0 = gaussian_ket(2 * d, rng) * std::exp(log_scale(rng));
  Ket phi1 = gaussian_ket(2 * d, rng) * std::exp(log_scale(rng));
  Operator x = gaussian_matrix(2, rng);
  return {std::move(phi0), std::move(phi1), std::move(x), random_povm(d, m, rng)};
}

AttackInstance random_attack_instance(std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(uniform_index(rng, 2, 4));
  const std::size_t m = uniform_index(rng, 2, static_cast<std::size_t>(d * d));
  AttackModel attack = random_attack(d, rng);
  Povm povm = random_povm(d, m, rng);
  return {std::move(attack), std::move(povm)};
}

// ---------------------------------------------------------------------------

Suite parse_suite(std::string_view name) {
  if (name == "lemma1") return Suite::kLemma1;
  if (name == "lemma2") return Suite::kLemma2;
  if (name == "theorem") return Suite::kTheorem;
  if (name == "proof-chain") return Suite::kProofChain;
  if (name == "proof-chain-named") return Suite::kProofChainNamed;
  if (name == "sift-crosscheck") return Suite::kSiftCrosscheck;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kLemma1: return "lemma1";
    case Suite::kLemma2: return "lemma2";
    case Suite::kTheorem: return "theorem";
    case Suite::kProofChain: return "proof-chain";
    case Suite::kProofChainNamed: return "proof-chain-named";
    case Suite::kSiftCrosscheck: return "sift-crosscheck";
  }
  return "unknown";
}

VerifySummary run_verify(const VerifyOptions& options) {
  std::vector<TrialResult> results;
  std::vector<std::uint64_t> seeds;
  if (options.suite == Suite::kProofChainNamed) {
    const std::vector<AttackInstance> instances = named_instances();
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const ProofTrace trace = proof_chain(instances[i].attack, instances[i].povm);
      results.push_back({trace.min_inequality_slack(), trace.max_equality_error(), !trace.holds()});
      seeds.push_back(0);
    }
  } else {
    results.resize(options.trials);
    seeds.resize(options.trials);
    parallel_for(options.trials, [&](std::size_t i) {
      seeds[i] = derive_seed(options.seed, i);
      std::mt19937_64 rng(seeds[i]);
      results[i] = evaluate_trial(options.suite, rng);
    });
  }

  VerifySummary s;
  s.suite = options.suite;
  s.trials = results.size();
  s.seed = options.seed;
  s.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const TrialResult& r = results[i];
    if (r.violation) ++s.violations;
    s.max_equality_error = std::max(s.max_equality_error, r.equality_error);
    if (r.slack < s.min_slack) {
      s.min_slack = r.slack;
      s.worst_trial = i;
      s.worst_seed = seeds[i];
    }
  }
  return s;
}

std::string format_summary(const VerifySummary& s) {
  char buf[512];
  const bool has_slack = std::isfinite(s.min_slack);
  std::snprintf(buf, sizeof buf,
                "suite: %s\ntrials: %zu\nseed: %llu\nviolations: %zu\nmin_slack: %s\n"
                "worst_trial: %zu\nworst_seed: %llu\nmax_equality_error: %.6e\nstatus: %s\n",
                std::string(suite_name(s.suite)).c_str(), s.trials,
                static_cast<unsigned long long>(s.seed), s.violations,
                has_slack ? format_number(s.min_slack).c_str() : "n/a", s.worst_trial,
                static_cast<unsigned long long>(s.worst_seed), s.max_equality_error,
                s.violations == 0 ? "pass" : "FAIL");
  return buf;
}

// ---------------------------------------------------------------------------

PovmChoice PovmChoice::parse(std::string_view spec) {
  if (spec == "z") return {Kind::kComputational, std::nullopt};
  if (spec == "x") return {Kind::kFourier, std::nullopt};
  if (spec == "optimize") return {Kind::kOptimize, std::nullopt};
  return {Kind::kExplicit, parse_povm_file(std::string(spec))};
}

ResolvedPovm resolve_povm(const PovmChoice& choice, const AttackModel& attack,
                          const OptimizerConfig& optimizer) {
  switch (choice.kind) {
    case PovmChoice::Kind::kComputational:
      return {computational_basis_povm(attack.ancilla_dim), std::nullopt};
    case PovmChoice::Kind::kFourier:
      return {fourier_basis_povm(attack.ancilla_dim), std::nullopt};
    case PovmChoice::Kind::kExplicit:
      if (choice.povm->dim() != attack.ancilla_dim) {
        throw DimensionError("POVM dimension " + std::to_string(choice.povm->dim()) +
                             " does not match ancilla dimension " +
                             std::to_string(attack.ancilla_dim));
      }
      return {*choice.povm, std::nullopt};
    case PovmChoice::Kind::kOptimize:
      break;
  }
  AccessibleInformation search = accessible_information(attack, optimizer);
  Povm povm = search.povm;
  return {std::move(povm), std::move(search)};
}

// ---------------------------------------------------------------------------

GridSpec GridSpec::parse(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw DomainError("grid spec must look like key=a:b:n or key=v, got '" + std::string(spec) + "'");
  }
  GridSpec g;
  g.key = std::string(spec.substr(0, eq));
  const std::string_view range = spec.substr(eq + 1);
  const auto c1 = range.find(':');
  if (c1 == std::string_view::npos) {
    g.start = g.stop = parse_double(range, "grid value");
    g.count = 1;
    return g;
  }
  const auto c2 = range.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw DomainError("grid spec needs a:b:n");
  g.start = parse_double(range.substr(0, c1), "grid start");
  g.stop = parse_double(range.substr(c1 + 1, c2 - c1 - 1), "grid stop");
  const std::string_view n = range.substr(c2 + 1);
  std::size_t count = 0;
  const auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), count);
  if (ec != std::errc() || ptr != n.data() + n.size() || count < 1) {
    throw DomainError("grid point count must be a positive integer");
  }
  g.count = count;
  return g;
}

std::vector<double> GridSpec::points() const {
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = count == 1 ? start
                        : start + (stop - start) * static_cast<double>(i) /
                                      static_cast<double>(count - 1);
  }
  if (count > 1) pts.back() = stop;
  return pts;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const AttackFamily family = attack_family(config.family);
  if (config.grid.key != "theta") {
    throw DomainError("family " + config.family + " is swept over 'theta', not '" +
                      config.grid.key + "'");
  }
  const std::vector<double> thetas = config.grid.points();
  std::vector<std::optional<SweepRow>> rows(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) {
    const double params[] = {thetas[i]};
    const AttackModel attack = family.build(params);
    const ResolvedPovm povm = resolve_povm(config.povm, attack, config.optimizer);
    const TradeoffReport r = verify_tradeoff(attack, povm.povm);
    rows[i] = SweepRow{config.family, thetas[i], r.p_ctrl, r.p_sift, r.info, r.rhs, r.gap, r.holds};
  });
  std::vector<SweepRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family,theta,p_ctrl,p_sift,info_lower,rhs,gap,holds\n";
  for (const auto& r : rows) {
    os << r.family << ',' << format_number(r.theta) << ',' << format_number(r.p_ctrl) << ','
       << format_number(r.p_sift) << ',' << format_number(r.info_lower) << ','
       << format_number(r.rhs) << ',' << format_number(r.gap) << ','
       << (r.holds ? "true" : "false") << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Objective parse_objective(std::string_view name) {
  if (name == "max-gap") return Objective::kMaxGap;
  if (name == "max-info") return Objective::kMaxInfo;
  throw DomainError("unknown objective '" + std::string(name) + "'");
}

std::string_view objective_name(Objective objective) {
  return objective == Objective::kMaxGap ? "max-gap" : "max-info";
}

namespace {

double objective_value(const OptimizeConfig& config, double p_ctrl, double p_sift, double info,
                       double rhs) {
  if (config.objective == Objective::kMaxGap) return info - rhs;
  return info - kDisturbancePenalty * std::max(0.0, p_ctrl + p_sift - config.epsilon);
}

}  // namespace

double optimize_objective(const OptimizeConfig& config, const TradeoffReport& report) {
  return objective_value(config, report.p_ctrl, report.p_sift, report.info, report.rhs);
}

OptimizeResult run_optimize(const OptimizeConfig& config) {
  const Eigen::Index d = config.ancilla_dim;
  if (d < 1 || d > kMaxRandomAncillaDim) {
    throw DomainError("optimize: ancilla dimension must be in [1, 6]");
  }
  if (config.restarts < 1) throw DomainError("optimize: at least one restart is required");
  if (config.objective == Objective::kMaxInfo && !(config.epsilon >= 0.0)) {
    throw DomainError("optimize: epsilon must be nonnegative");
  }
  const std::size_t m = config.povm_optimizer.outcome_count == 0
                            ? default_outcome_count(d)
                            : config.povm_optimizer.outcome_count;
  const auto n_attack = static_cast<Eigen::Index>(parameterized_attack_size(d));
  const auto n_povm = static_cast<Eigen::Index>(2 * m) * d * d;

  const auto split = [&](const Eigen::VectorXd& x) {
    AttackModel attack = parameterized_attack({x.data(), static_cast<std::size_t>(n_attack)}, d);
    Povm povm = povm_from_parameters({x.data() + n_attack, static_cast<std::size_t>(n_povm)}, d, m);
    return std::pair{std::move(attack), std::move(povm)};
  };
  const auto loss = [&](const Eigen::VectorXd& x) {
    try {
      const auto [attack, povm] = split(x);
      const double p_ctrl = ctrl_error(attack);
      const double p_sift = sift_branch(attack).p_sift;
      const double info = eve_information(attack, povm);
      return -objective_value(config, p_ctrl, p_sift, info, theorem_rhs(p_ctrl, p_sift));
    } catch (const std::exception&) {
      return kInfeasibleObjective;
    }
  };

  struct Candidate {
    Eigen::VectorXd x;
    OptimizeRestart stat;
  };
  std::vector<Candidate> candidates(config.restarts);
  parallel_for(config.restarts, [&](std::size_t r) {
    Eigen::VectorXd start = Eigen::VectorXd::Zero(n_attack + n_povm);
    if (r == 0) {
      for (Eigen::Index j = 0; j < d; ++j) {
        // Computational-basis POVM factors |j⟩⟨j| on the diagonal.
        const Eigen::Index offset = n_attack + (j % static_cast<Eigen::Index>(m)) * 2 * d * d;
        start(offset + 2 * (j * d + j)) = 1.0;
      }
    } else {
      std::mt19937_64 rng(derive_seed(config.seed, r));
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (Eigen::Index i = 0; i < start.size(); ++i) start(i) = gauss(rng);
    }
    const NelderMeadResult run = nelder_mead(loss, start, config.simplex);
    candidates[r] = {run.x, {-run.value, run.iterations, run.converged}};
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < candidates.size(); ++r) {
    if (candidates[r].stat.objective > candidates[best].stat.objective) best = r;
  }
  auto [attack, joint_povm] = split(candidates[best].x);

  OptimizerConfig search_cfg = config.povm_optimizer;
  search_cfg.outcome_count = m;
  const AccessibleInformation search = accessible_information(attack, search_cfg);
  const bool use_search = search.bits > eve_information(attack, joint_povm);
  Povm povm = use_search ? search.povm : joint_povm;
  TradeoffReport report = verify_tradeoff(attack, povm);
  const double objective = optimize_objective(config, report);

  std::vector<OptimizeRestart> stats;
  for (const auto& c : candidates) stats.push_back(c.stat);
  return {std::move(attack), std::move(povm), std::move(report), objective, best, std::move(stats)};
}

}  // namespace sqkd
