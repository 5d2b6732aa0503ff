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

#ifndef SQKD_EAVESDROPPER_HPP
#define SQKD_EAVESDROPPER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "sqkd/nelder_mead.hpp"
#include "sqkd/povm.hpp"
#include "sqkd/protocol.hpp"

namespace sqkd {

/// What Eve holds after SIFT: ρ_z with prior p_a(z).
struct Ensemble {
  std::array<Operator, 2> states;
  std::array<double, 2> priors{};

  static Ensemble from_sift(const SiftOutcome& sift) { return {sift.rho_eve, sift.p_a}; }
  Eigen::Index dim() const { return states[0].rows(); }
};

/// d² outcomes, and at least two so that d = 1 still has a valid search.
inline std::size_t default_outcome_count(Eigen::Index dim) {
  return std::max<std::size_t>(2, static_cast<std::size_t>(dim * dim));
}

struct OptimizerConfig {
  /// POVM outcome count; 0 selects default_outcome_count(d).
  std::size_t outcome_count = 0;
  std::size_t restarts = 32;
  NelderMeadOptions simplex{};
  std::uint64_t seed = 0;
};

struct RestartStat {
  double bits = 0;
  int iterations = 0;
  bool converged = false;
};

struct AccessibleInformation {
  /// Best mutual information found; a lower bound on the accessible
  /// information.
  double bits = 0;
  Povm povm;
  bool converged = false;
  std::size_t best_restart = 0;
  std::vector<RestartStat> restarts;
};

/// I(A:E) for the ensemble measured with povm: p(z, e) = p_z tr(ρ_z Ê_e).
double ensemble_information(const Ensemble& ensemble, const Povm& povm);

/// Simplex search over POVM factor space. Restart 0 starts at the
/// computational-basis measurement, the others at seeded random factors;
/// the best restart wins, ties going to the lower index.
AccessibleInformation accessible_information(const Ensemble& ensemble, const OptimizerConfig& cfg);

/// Same search on the SIFT ensemble of an attack. The returned bits are
/// recomputed through eve_information(attack, povm).
AccessibleInformation accessible_information(const AttackModel& attack, const OptimizerConfig& cfg);

/// χ = S(p₀ρ₀ + p₁ρ₁) − p₀S(ρ₀) − p₁S(ρ₁), in bits. States with zero prior
/// are ignored.
double holevo_bound(const Operator& rho0, const Operator& rho1, std::array<double, 2> priors);

}  // namespace sqkd

#endif  // SQKD_EAVESDROPPER_HPP
