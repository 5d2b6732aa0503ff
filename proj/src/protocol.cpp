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

#include "sqkd/protocol.hpp"

#include <algorithm>
#include <string>

namespace sqkd {
namespace {

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

void check_square(const Operator& m, Eigen::Index dim, const char* name) {
  if (m.rows() != dim || m.cols() != dim) {
    throw DimensionError(std::string("attack: ") + name + " must be " + std::to_string(dim) + "x" +
                         std::to_string(dim) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

}  // namespace

void AttackModel::validate() const {
  if (ancilla_dim < 1) throw DimensionError("attack: ancilla_dim must be >= 1");
  if (omega.size() != ancilla_dim) {
    throw DimensionError("attack: omega has " + std::to_string(omega.size()) +
                         " amplitudes, expected " + std::to_string(ancilla_dim));
  }
  check_square(v, joint_dim(), "V");
  check_square(u, joint_dim(), "U");
  const double norm_dev = std::abs(omega.squaredNorm() - 1.0);
  if (norm_dev > tol::kNorm) {
    throw ValidationError("attack: omega is not normalized (|norm^2 - 1| = " +
                          std::to_string(norm_dev) + ")");
  }
  const double v_dev = unitarity_deviation(v);
  if (v_dev > tol::kUnitary) {
    throw ValidationError("attack: V is not unitary (max deviation " + std::to_string(v_dev) + ")");
  }
  const double u_dev = unitarity_deviation(u);
  if (u_dev > tol::kUnitary) {
    throw ValidationError("attack: U is not unitary (max deviation " + std::to_string(u_dev) + ")");
  }
}

Ket forward_state(const AttackModel& attack) {
  attack.validate();
  return attack.v * tensor(plus_ket(), attack.omega);
}

double ctrl_error(const AttackModel& attack) {
  const Ket psi = forward_state(attack);
  const Operator x_minus = lift_qubit(projector(minus_ket()), attack.ancilla_dim);
  return clamp_probability(expectation((attack.u * psi).eval(), x_minus));
}

SiftOutcome sift_branch(const AttackModel& attack) {
  const Ket psi = forward_state(attack);
  const Eigen::Index d = attack.ancilla_dim;
  const std::array<Operator, 2> z_proj = {z_projector(0, d), z_projector(1, d)};
  const Operator& u = attack.u;

  SiftOutcome out;
  for (int z = 0; z < 2; ++z) {
    const Ket branch = z_proj[z] * psi;
    out.p_a[z] = clamp_probability(branch.squaredNorm());
    if (out.p_a[z] <= tol::kClamp) {
      out.degenerate[z] = true;
      out.sigma[z] = Operator::Zero(2 * d, 2 * d);
      out.rho_eve[z] = Operator::Zero(d, d);
      continue;
    }
    out.sigma[z] = projector(branch) / out.p_a[z];
    const Operator returned = u * out.sigma[z] * u.adjoint();
    out.rho_eve[z] = partial_trace_qubit(returned);
    for (int zb = 0; zb < 2; ++zb) {
      out.p_b_given_a(z, zb) = clamp_probability((returned * z_proj[zb]).trace().real());
    }
  }
  out.p_sift = clamp_probability(out.p_b_given_a(0, 1) * out.p_a[0] +
                                 out.p_b_given_a(1, 0) * out.p_a[1]);
  const Operator flip01 = z_proj[0] * u.adjoint() * z_proj[1] * u * z_proj[0];
  const Operator flip10 = z_proj[1] * u.adjoint() * z_proj[0] * u * z_proj[1];
  out.p_sift_operator = clamp_probability(expectation(psi, flip01) + expectation(psi, flip10));
  return out;
}

JointDistribution joint_distribution(const AttackModel& attack, const Povm& povm) {
  if (povm.dim() != attack.ancilla_dim) {
    throw DimensionError("joint_distribution: POVM acts on dimension " +
                         std::to_string(povm.dim()) + ", ancilla has dimension " +
                         std::to_string(attack.ancilla_dim));
  }
  const Ket psi = forward_state(attack);
  const Eigen::Index m = static_cast<Eigen::Index>(povm.outcome_count());
  Eigen::MatrixXd table(2, m);
  for (int z = 0; z < 2; ++z) {
    const Ket returned = attack.u * z_projector(z, attack.ancilla_dim) * psi;
    for (Eigen::Index e = 0; e < m; ++e) {
      table(z, e) = expectation(returned, lift_ancilla(povm[e]));
    }
  }
  return JointDistribution::from_table(table);
}

JointDistribution joint_distribution(const SiftOutcome& sift, const Povm& povm) {
  const Eigen::Index m = static_cast<Eigen::Index>(povm.outcome_count());
  Eigen::MatrixXd table(2, m);
  for (int z = 0; z < 2; ++z) {
    if (sift.rho_eve[z].rows() != povm.dim()) {
      throw DimensionError("joint_distribution: POVM dimension does not match Eve's states");
    }
    for (Eigen::Index e = 0; e < m; ++e) {
      table(z, e) = sift.degenerate[z] ? 0.0
                                       : sift.p_a[z] * (sift.rho_eve[z] * povm[e]).trace().real();
    }
  }
  return JointDistribution::from_table(table);
}

double eve_information(const AttackModel& attack, const Povm& povm) {
  return mutual_information(joint_distribution(attack, povm));
}

}  // namespace sqkd
