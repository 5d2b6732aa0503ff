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

#ifndef SQKD_TRADEOFF_HPP
#define SQKD_TRADEOFF_HPP

#include <array>
#include <string>
#include <vector>

#include "sqkd/linalg.hpp"
#include "sqkd/povm.hpp"
#include "sqkd/protocol.hpp"

namespace sqkd {

/// One numerically checked relation lhs ≤ rhs or lhs = rhs.
struct ProofStep {
  enum class Relation { kLessEqual, kEqual };

  std::string name;
  double lhs = 0;
  double rhs = 0;
  Relation relation = Relation::kLessEqual;

  /// rhs − lhs for inequalities, −|rhs − lhs| for equalities.
  double slack() const {
    return relation == Relation::kEqual ? -std::abs(rhs - lhs) : rhs - lhs;
  }
  /// Inequalities tolerate −1e-9, equalities 1e-12.
  bool satisfied() const {
    return slack() >= -(relation == Relation::kEqual ? tol::kEquality : tol::kSlack);
  }
};

/// The intermediate quantities of the trade-off argument for one attack and
/// POVM, with every step's slack.
struct ProofTrace {
  /// C_z = Z_{z⊕1} U Z_z − Z_z U Z_{z⊕1}, so that U Z_z = Z_z U + C_z.
  std::array<Operator, 2> c;
  /// p₀(z, e) = ⟨Ψ|U† Z_z E_e U|Ψ⟩, the outcome law with Alice's Z moved
  /// past U.
  JointDistribution p0;
  std::array<double, 2> p0_marginal{};
  /// |⟨φ₀|X|φ₁⟩| with φ_z = Z_z U|Ψ⟩ and X = |0⟩⟨1| ⊗ 1_K.
  double lhs_overlap = 0;
  /// Σ_e √(p^AE(0,e) p^AE(1,e)).
  double fidelity_sum = 0;
  std::vector<ProofStep> steps;

  double min_inequality_slack() const;
  double max_equality_error() const;
  bool holds() const;
  const ProofStep& step(std::string_view name) const;
};

struct TradeoffReport {
  double p_ctrl = 0;
  double p_sift = 0;
  std::array<double, 2> p_a{};
  JointDistribution joint;
  /// I(A:E) under the supplied POVM.
  double info = 0;
  double lemma1 = 0;
  double rhs = 0;
  double gap = 0;
  bool holds = false;
  ProofTrace trace;
};

/// 2·√(P_CTRL + 6·P_SIFT^{1/4}). Inputs outside [0, 1] (beyond 1e-12) throw
/// DomainError.
double theorem_rhs(double p_ctrl, double p_sift);

/// √(max(0, 1 − 4F²)) with F = Σ_y √(p(0,y) p(1,y)); upper-bounds I(X:Y)
/// for binary X.
double lemma1_bound(const JointDistribution& joint);

/// |⟨φ₀|X⊗1|φ₁⟩| ≤ ‖X‖ Σ_e ⟨φ₀|1⊗Ê_e|φ₀⟩^{1/2} ⟨φ₁|1⊗Ê_e|φ₁⟩^{1/2} for
/// possibly unnormalized φ on H⊗K and X on H.
ProofStep lemma2_check(const Ket& phi0, const Ket& phi1, const Operator& x, const Povm& povm);

ProofTrace proof_chain(const AttackModel& attack, const Povm& povm);

TradeoffReport verify_tradeoff(const AttackModel& attack, const Povm& povm);

}  // namespace sqkd

#endif  // SQKD_TRADEOFF_HPP
