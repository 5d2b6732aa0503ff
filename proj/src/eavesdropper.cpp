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

#include "sqkd/eavesdropper.hpp"

#include <optional>
#include <random>
#include <string>

#include "sqkd/parallel.hpp"

namespace sqkd {
namespace {

constexpr double kInfeasible = 1.0;
constexpr double kPolishStep = 0.05;

std::size_t resolve_outcomes(const OptimizerConfig& cfg, Eigen::Index dim) {
  const std::size_t m = cfg.outcome_count == 0 ? default_outcome_count(dim) : cfg.outcome_count;
  if (m < 2) throw DomainError("optimizer: outcome count must be >= 2");
  if (cfg.restarts < 1) throw DomainError("optimizer: at least one restart is required");
  return m;
}

/// Factors whose completion is the computational-basis measurement, with
/// basis vectors folded modulo m when m < d.
Eigen::VectorXd computational_start(Eigen::Index dim, std::size_t m) {
  std::vector<Operator> factors(m, Operator::Zero(dim, dim));
  for (Eigen::Index j = 0; j < dim; ++j) {
    factors[static_cast<std::size_t>(j) % m](j, j) = 1.0;
  }
  const std::vector<double> p = factor_parameters(factors);
  return Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
}

Eigen::VectorXd random_start(Eigen::Index dim, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd x(static_cast<Eigen::Index>(2 * m) * dim * dim);
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = gauss(rng);
  return x;
}

std::optional<double> information_at(const Ensemble& ensemble, const Eigen::VectorXd& x,
                                      std::size_t m) {
  try {
    const Povm povm =
        povm_from_parameters({x.data(), static_cast<std::size_t>(x.size())}, ensemble.dim(), m);
    return ensemble_information(ensemble, povm);
  } catch (const DegeneracyError&) {
  } catch (const ValidationError&) {
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

struct RestartOutcome {
  Eigen::VectorXd x;
  RestartStat stat;
};

}  // namespace

double ensemble_information(const Ensemble& ensemble, const Povm& povm) {
  const Eigen::Index m = static_cast<Eigen::Index>(povm.outcome_count());
  Eigen::MatrixXd table(2, m);
  for (int z = 0; z < 2; ++z) {
    if (ensemble.states[z].rows() != povm.dim()) {
      throw DimensionError("ensemble_information: POVM dimension does not match the states");
    }
    for (Eigen::Index e = 0; e < m; ++e) {
      table(z, e) = ensemble.priors[z] * (ensemble.states[z] * povm[e]).trace().real();
    }
  }
  return mutual_information(JointDistribution::from_table(table));
}

AccessibleInformation accessible_information(const Ensemble& ensemble, const OptimizerConfig& cfg) {
  const Eigen::Index d = ensemble.dim();
  const std::size_t m = resolve_outcomes(cfg, d);
  const auto objective = [&](const Eigen::VectorXd& x) {
    const auto bits = information_at(ensemble, x, m);
    return bits ? -*bits : kInfeasible;
  };

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  parallel_for(cfg.restarts, [&](std::size_t r) {
    const Eigen::VectorXd start =
        r == 0 ? computational_start(d, m) : random_start(d, m, derive_seed(cfg.seed, r));
    NelderMeadResult run = nelder_mead(objective, start, cfg.simplex);
    NelderMeadOptions polish = cfg.simplex;
    polish.initial_step = kPolishStep;
    const NelderMeadResult refined = nelder_mead(objective, run.x, polish);
    const int iterations = run.iterations + refined.iterations;
    if (refined.value < run.value) run = refined;
    run.converged = refined.converged;
    outcomes[r] = {run.x, {-run.value, iterations, run.converged}};
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].stat.bits > outcomes[best].stat.bits) best = r;
  }
  const Eigen::VectorXd& x = outcomes[best].x;
  std::optional<Povm> povm;
  try {
    povm.emplace(povm_from_parameters({x.data(), static_cast<std::size_t>(x.size())}, d, m));
  } catch (const std::exception&) {
    // Every restart failed to leave the infeasible region; fall back to the
    // computational-basis start, which is always feasible.
    const Eigen::VectorXd x0 = computational_start(d, m);
    povm.emplace(povm_from_parameters({x0.data(), static_cast<std::size_t>(x0.size())}, d, m));
  }
  std::vector<RestartStat> stats;
  stats.reserve(outcomes.size());
  for (const auto& o : outcomes) stats.push_back(o.stat);
  const double bits = ensemble_information(ensemble, *povm);
  return {bits, std::move(*povm), outcomes[best].stat.converged, best, std::move(stats)};
}

AccessibleInformation accessible_information(const AttackModel& attack, const OptimizerConfig& cfg) {
  AccessibleInformation result = accessible_information(Ensemble::from_sift(sift_branch(attack)), cfg);
  result.bits = eve_information(attack, result.povm);
  return result;
}

double holevo_bound(const Operator& rho0, const Operator& rho1, std::array<double, 2> priors) {
  for (double p : priors) {
    if (p < -tol::kClamp || p > 1.0 + tol::kClamp) {
      throw DomainError("holevo_bound: prior out of range");
    }
  }
  if (std::abs(priors[0] + priors[1] - 1.0) > tol::kProbabilitySum) {
    throw DomainError("holevo_bound: priors must sum to 1");
  }
  if (rho0.rows() != rho1.rows()) throw DimensionError("holevo_bound: state dimensions differ");
  const std::array<const Operator*, 2> states = {&rho0, &rho1};
  Operator average = Operator::Zero(rho0.rows(), rho0.cols());
  double conditional = 0;
  for (int z = 0; z < 2; ++z) {
    if (priors[z] <= tol::kClamp) continue;
    if (!is_density(*states[z])) {
      throw ValidationError("holevo_bound: state " + std::to_string(z) + " is not a density operator");
    }
    average += priors[z] * *states[z];
    conditional += priors[z] * von_neumann_entropy(*states[z]);
  }
  return std::max(0.0, von_neumann_entropy(average) - conditional);
}

}  // namespace sqkd
