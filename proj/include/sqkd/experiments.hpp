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

#ifndef SQKD_EXPERIMENTS_HPP
#define SQKD_EXPERIMENTS_HPP

// Batch drivers behind the command-line tool: randomized verification
// suites, one-parameter sweeps, and the search for extremal attacks.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sqkd/attacks.hpp"
#include "sqkd/eavesdropper.hpp"
#include "sqkd/tradeoff.hpp"

namespace sqkd {

// ---------------------------------------------------------------------------
// Random instances

/// Binary-X joint law over 1..8 outcomes; some entries are zeroed to reach
/// the boundary of the simplex.
JointDistribution random_joint(std::mt19937_64& rng);

/// POVM with m outcomes on C^d from Gaussian factors.
Povm random_povm(Eigen::Index dim, std::size_t outcomes, std::mt19937_64& rng);

struct Lemma2Instance {
  Ket phi0;
  Ket phi1;
  Operator x;
  Povm povm;
};

/// d ∈ [1, 4], m ∈ [1, 6], unnormalized Gaussian vectors, Gaussian X.
Lemma2Instance random_lemma2_instance(std::mt19937_64& rng);

struct AttackInstance {
  AttackModel attack;
  Povm povm;
};

/// Haar attack with d ∈ {2, 3, 4} and a random POVM with 2 ≤ m ≤ d².
AttackInstance random_attack_instance(std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Verification suites

enum class Suite { kLemma1, kLemma2, kTheorem, kProofChain, kProofChainNamed, kSiftCrosscheck };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct VerifyOptions {
  Suite suite = Suite::kTheorem;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

struct VerifySummary {
  Suite suite = Suite::kTheorem;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t violations = 0;
  /// Smallest inequality slack seen (rhs − lhs).
  double min_slack = 0;
  std::size_t worst_trial = 0;
  std::uint64_t worst_seed = 0;
  /// Largest deviation among equality checks, 0 when the suite has none.
  double max_equality_error = 0;
};

/// Trial i is generated from derive_seed(seed, i) and evaluated
/// independently; the reduction runs in trial order.
VerifySummary run_verify(const VerifyOptions& options);

/// Fixed-format text, identical for identical options.
std::string format_summary(const VerifySummary& summary);

// ---------------------------------------------------------------------------
// POVM selection

struct PovmChoice {
  enum class Kind { kComputational, kFourier, kOptimize, kExplicit };
  Kind kind = Kind::kOptimize;
  std::optional<Povm> povm;

  /// "z", "x", "optimize"; anything else is read as a POVM document path.
  static PovmChoice parse(std::string_view spec);
};

struct ResolvedPovm {
  Povm povm;
  /// Present when the POVM came from the optimizer.
  std::optional<AccessibleInformation> search;
};

ResolvedPovm resolve_povm(const PovmChoice& choice, const AttackModel& attack,
                          const OptimizerConfig& optimizer);

// ---------------------------------------------------------------------------
// Sweeps

/// "key=a:b:n" (n evenly spaced points from a to b) or "key=v".
struct GridSpec {
  std::string key;
  double start = 0;
  double stop = 0;
  std::size_t count = 1;

  static GridSpec parse(std::string_view spec);
  /// Grid values; the last one equals stop exactly.
  std::vector<double> points() const;
};

struct SweepConfig {
  std::string family;
  GridSpec grid;
  PovmChoice povm;
  OptimizerConfig optimizer;
};

struct SweepRow {
  std::string family;
  double theta = 0;
  double p_ctrl = 0;
  double p_sift = 0;
  double info_lower = 0;
  double rhs = 0;
  double gap = 0;
  bool holds = false;
};

std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Header family,theta,p_ctrl,p_sift,info_lower,rhs,gap,holds; numbers with
/// 12 significant digits; rows in grid order.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// ---------------------------------------------------------------------------
// Attack search

enum class Objective { kMaxGap, kMaxInfo };

Objective parse_objective(std::string_view name);
std::string_view objective_name(Objective objective);

inline constexpr double kDisturbancePenalty = 1e3;

struct OptimizeConfig {
  Objective objective = Objective::kMaxGap;
  /// Disturbance budget for max-info: p_ctrl + p_sift ≤ epsilon.
  double epsilon = 0.01;
  Eigen::Index ancilla_dim = 2;
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  NelderMeadOptions simplex{.max_iterations = 6000};
  /// Settings for the final accessible-information search on the winner.
  OptimizerConfig povm_optimizer{};
};

struct OptimizeRestart {
  double objective = 0;
  int iterations = 0;
  bool converged = false;
};

struct OptimizeResult {
  AttackModel attack;
  Povm povm;
  TradeoffReport report;
  /// Objective of the returned attack/POVM (maximized).
  double objective = 0;
  std::size_t best_restart = 0;
  std::vector<OptimizeRestart> restarts;
};

/// Searches parameterized_attack space jointly with POVM factors. max-gap
/// maximizes info − rhs; max-info maximizes info − 1e3·max(0, p_ctrl +
/// p_sift − epsilon).
OptimizeResult run_optimize(const OptimizeConfig& config);

/// Objective value of one attack/POVM pair under config.
double optimize_objective(const OptimizeConfig& config, const TradeoffReport& report);

}  // namespace sqkd

#endif  // SQKD_EXPERIMENTS_HPP
