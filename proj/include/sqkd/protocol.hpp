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

#ifndef SQKD_PROTOCOL_HPP
#define SQKD_PROTOCOL_HPP

#include <array>

#include "sqkd/linalg.hpp"
#include "sqkd/povm.hpp"

namespace sqkd {

/// Eve's two-interaction attack: V acts on the way to Alice, U on the way
/// back, both on H ⊗ K with K prepared in |Ω⟩.
struct AttackModel {
  Eigen::Index ancilla_dim = 1;
  Ket omega;
  Operator v;
  Operator u;

  Eigen::Index joint_dim() const { return 2 * ancilla_dim; }

  /// Throws DimensionError on shape mismatch and ValidationError when Ω is
  /// not normalized or V, U are not unitary (message carries the deviation).
  void validate() const;
};

/// Result of the SIFT branch: Alice measures Z, resends, Eve applies U,
/// Bob measures Z.
struct SiftOutcome {
  std::array<double, 2> p_a{};
  /// Lüders states σ_z; zero operator when degenerate[z].
  std::array<Operator, 2> sigma;
  /// Eve's reduced states ρ_z = tr_H(U σ_z U†); zero when degenerate[z].
  std::array<Operator, 2> rho_eve;
  std::array<bool, 2> degenerate{};
  /// p_b_given_a(z, z') = p(Bob gets z' | Alice got z). Rows of degenerate
  /// branches are left at zero.
  Eigen::Matrix2d p_b_given_a = Eigen::Matrix2d::Zero();
  /// Σ_z p(z⊕1 | z) p_a(z).
  double p_sift = 0;
  /// ⟨Ψ|Z₀U†Z₁UZ₀|Ψ⟩ + ⟨Ψ|Z₁U†Z₀UZ₁|Ψ⟩, evaluated independently.
  double p_sift_operator = 0;
};

/// |Ψ⟩ = V(|+⟩ ⊗ |Ω⟩).
Ket forward_state(const AttackModel& attack);

/// P_CTRL = ⟨Ψ|U† X₋ U|Ψ⟩ with X₋ = |−⟩⟨−| ⊗ 1_K.
double ctrl_error(const AttackModel& attack);

SiftOutcome sift_branch(const AttackModel& attack);

/// p^AE(z, e) = ⟨Ψ|Z_z U† E_e U Z_z|Ψ⟩.
JointDistribution joint_distribution(const AttackModel& attack, const Povm& povm);

/// p^AE(z, e) = p_a(z) · tr(ρ_z Ê_e), the reduced-state route.
JointDistribution joint_distribution(const SiftOutcome& sift, const Povm& povm);

/// I(A:E) of the SIFT joint distribution.
double eve_information(const AttackModel& attack, const Povm& povm);

}  // namespace sqkd

#endif  // SQKD_PROTOCOL_HPP
