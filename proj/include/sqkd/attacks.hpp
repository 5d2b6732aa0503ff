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

#ifndef SQKD_ATTACKS_HPP
#define SQKD_ATTACKS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqkd/protocol.hpp"

namespace sqkd {

inline constexpr Eigen::Index kMaxRandomAncillaDim = 6;

/// A smooth map from a box of real parameters to attacks.
struct AttackFamily {
  std::string name;
  std::vector<std::pair<double, double>> param_bounds;
  std::function<AttackModel(std::span<const double>)> builder;

  std::size_t param_count() const { return param_bounds.size(); }
  /// Checks the parameter count and bounds, then builds.
  AttackModel build(std::span<const double> params) const;
};

/// V = U = 1 on C² ⊗ C², Ω = |0⟩.
AttackModel identity_attack();
/// V = CNOT (qubit controls the ancilla), U = 1, Ω = |0⟩.
AttackModel forward_cnot_attack();
/// V = 1, U = CZ, Ω = |+⟩.
AttackModel return_cz_attack();
/// V = exp(iθ |1⟩⟨1| ⊗ (1 − σ_x)); θ = π/2 is the CNOT, θ = 0 the identity.
AttackModel partial_forward_cnot_attack(double theta);
/// U = exp(iθ |1⟩⟨1| ⊗ (1 − σ_z)); θ = π/2 is the CZ, θ = 0 the identity.
AttackModel partial_return_cz_attack(double theta);

/// Catalog lookup. Accepts identity, forward-cnot, return-cz and the
/// parameterized forms partial-forward-cnot(θ), partial-return-cz(θ).
AttackModel named_attack(std::string_view name);

/// The one-parameter families partial-forward-cnot and partial-return-cz,
/// each over θ ∈ [0, π/2].
AttackFamily attack_family(std::string_view name);

/// V, U independent Haar unitaries on C² ⊗ C^d, Ω = |0⟩. Requires 1 ≤ d ≤ 6.
AttackModel random_attack(Eigen::Index ancilla_dim, std::mt19937_64& rng);
AttackModel random_attack(Eigen::Index ancilla_dim, std::uint64_t seed);

/// Hermitian n×n matrix from n² reals: the diagonal first, then the strict
/// upper triangle row by row as (real, imaginary) pairs.
Operator hermitian_from_parameters(std::span<const double> params, Eigen::Index n);

/// Number of reals parameterized_attack expects: 2·(2d)².
std::size_t parameterized_attack_size(Eigen::Index ancilla_dim);

/// V = exp(i H_V), U = exp(i H_U) with the generators read from the first
/// and second halves of params. Ω = |0⟩.
AttackModel parameterized_attack(std::span<const double> params, Eigen::Index ancilla_dim);

}  // namespace sqkd

#endif  // SQKD_ATTACKS_HPP
