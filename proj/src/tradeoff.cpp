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

#include "sqkd/tradeoff.hpp"

#include <algorithm>
#include <limits>

namespace sqkd {
namespace {

using Relation = ProofStep::Relation;

double checked_probability(double p, const char* name) {
  if (!(p >= -tol::kClamp && p <= 1.0 + tol::kClamp)) {
    throw DomainError(std::string("theorem_rhs: ") + name + " must lie in [0, 1], got " +
                      std::to_string(p));
  }
  return std::clamp(p, 0.0, 1.0);
}

double fidelity_sum(const JointDistribution& j) {
  return (j.table().row(0).array() * j.table().row(1).array()).sqrt().sum();
}

/// |0⟩⟨1|, the qubit operator the overlap argument is run with.
Operator lowering() {
  Operator x = Operator::Zero(2, 2);
  x(0, 1) = 1.0;
  return x;
}

}  // namespace

double ProofTrace::min_inequality_slack() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : steps) {
    if (s.relation == Relation::kLessEqual) m = std::min(m, s.slack());
  }
  return m;
}

double ProofTrace::max_equality_error() const {
  double m = 0;
  for (const auto& s : steps) {
    if (s.relation == Relation::kEqual) m = std::max(m, -s.slack());
  }
  return m;
}

bool ProofTrace::holds() const {
  return std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) { return s.satisfied(); });
}

const ProofStep& ProofTrace::step(std::string_view name) const {
  for (const auto& s : steps) {
    if (s.name == name) return s;
  }
  throw DomainError("proof trace has no step '" + std::string(name) + "'");
}

double theorem_rhs(double p_ctrl, double p_sift) {
  const double c = checked_probability(p_ctrl, "p_ctrl");
  const double s = checked_probability(p_sift, "p_sift");
  return 2.0 * std::sqrt(c + 6.0 * std::pow(s, 0.25));
}

double lemma1_bound(const JointDistribution& joint) {
  // 1 − F = Σ_e (√p(0,e) − √p(1,e))² for a normalized table. Forming it this
  // way avoids the cancellation in 1 − F, which the square root would
  // amplify from 1e-16 to 1e-8.
  const auto& t = joint.table();
  const double one_minus_f = (t.row(0).array().sqrt() - t.row(1).array().sqrt()).square().sum();
  const double f = 2.0 * fidelity_sum(joint);
  return std::sqrt(std::clamp(one_minus_f * (1.0 + f), 0.0, 1.0));
}

ProofStep lemma2_check(const Ket& phi0, const Ket& phi1, const Operator& x, const Povm& povm) {
  const Eigen::Index joint_dim = 2 * povm.dim();
  if (phi0.size() != joint_dim || phi1.size() != joint_dim) {
    throw DimensionError("lemma2_check: vectors must live on H⊗K of dimension " +
                         std::to_string(joint_dim));
  }
  if (x.rows() != 2 || x.cols() != 2) {
    throw DimensionError("lemma2_check: X must act on the qubit (2x2)");
  }
  const double lhs = std::abs(phi0.dot(lift_qubit(x, povm.dim()) * phi1));
  double sum = 0;
  for (const Operator& el : povm.elements()) {
    const Operator lifted = lift_ancilla(el);
    sum += std::sqrt(std::max(0.0, expectation(phi0, lifted))) *
           std::sqrt(std::max(0.0, expectation(phi1, lifted)));
  }
  return {"lemma2", lhs, operator_norm(x) * sum, Relation::kLessEqual};
}

ProofTrace proof_chain(const AttackModel& attack, const Povm& povm) {
  const Eigen::Index d = attack.ancilla_dim;
  if (povm.dim() != d) throw DimensionError("proof_chain: POVM dimension does not match ancilla");
  const Ket psi = forward_state(attack);
  const Operator& u = attack.u;
  const std::array<Operator, 2> z_proj = {z_projector(0, d), z_projector(1, d)};
  const SiftOutcome sift = sift_branch(attack);
  const double p_sift = sift.p_sift;
  const double p_ctrl = ctrl_error(attack);
  const JointDistribution joint = joint_distribution(attack, povm);
  const auto m = static_cast<Eigen::Index>(povm.outcome_count());

  std::vector<Operator> lifted;
  lifted.reserve(povm.outcome_count());
  for (const Operator& el : povm.elements()) lifted.push_back(lift_ancilla(el));

  std::vector<ProofStep> steps;
  std::array<Operator, 2> c;
  for (int z = 0; z < 2; ++z) {
    const int flip = z ^ 1;
    c[z] = z_proj[flip] * u * z_proj[z] - z_proj[z] * u * z_proj[flip];
    const double residual = (u * z_proj[z] - (z_proj[z] * u + c[z])).cwiseAbs().maxCoeff();
    steps.push_back({"decomposition.z" + std::to_string(z), residual, 0.0, Relation::kEqual});
  }
  for (int z = 0; z < 2; ++z) {
    steps.push_back({"s1.z" + std::to_string(z), expectation(psi, (c[z].adjoint() * c[z]).eval()),
                     p_sift, Relation::kEqual});
  }

  // p₀(z,e) and c(z,e) = ⟨Ψ|C_z† E_e C_z|Ψ⟩.
  const Ket returned = u * psi;
  Eigen::MatrixXd p0_table(2, m);
  Eigen::MatrixXd c_table(2, m);
  for (int z = 0; z < 2; ++z) {
    const Ket kicked = c[z] * psi;
    for (Eigen::Index e = 0; e < m; ++e) {
      p0_table(z, e) = expectation(returned, (z_proj[z] * lifted[e]).eval());
      c_table(z, e) = std::max(0.0, expectation(kicked, lifted[e]));
    }
  }
  JointDistribution p0 = JointDistribution::from_table(p0_table);
  const Eigen::Matrix<double, 2, Eigen::Dynamic>& q = p0.table();
  const Eigen::Matrix<double, 2, Eigen::Dynamic>& pae = joint.table();
  const std::array<double, 2> p0_marginal = {q.row(0).sum(), q.row(1).sum()};

  // r(z,e)² = 2 p₀^{1/2} c^{1/2} + c bounds |√p^AE − √p₀|².
  Eigen::MatrixXd r_sq(2, m);
  ProofStep worst_s2{"s2", 0.0, 0.0, Relation::kLessEqual};
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int z = 0; z < 2; ++z) {
    for (Eigen::Index e = 0; e < m; ++e) {
      r_sq(z, e) = 2.0 * std::sqrt(q(z, e)) * std::sqrt(c_table(z, e)) + c_table(z, e);
      const ProofStep s{"s2", std::abs(std::sqrt(pae(z, e)) - std::sqrt(q(z, e))),
                        std::sqrt(r_sq(z, e)), Relation::kLessEqual};
      if (s.slack() < worst_slack) {
        worst_slack = s.slack();
        worst_s2 = s;
      }
    }
  }
  steps.push_back(worst_s2);

  const Ket phi0 = z_proj[0] * returned;
  const Ket phi1 = z_proj[1] * returned;
  const Operator x = lowering();
  const double lhs_overlap = std::abs(phi0.dot(lift_qubit(x, d) * phi1));
  steps.push_back({"s3", 0.5 - p_ctrl, lhs_overlap, Relation::kLessEqual});
  steps.push_back(lemma2_check(phi0, phi1, x, povm));

  const double fid = fidelity_sum(joint);
  const double fid0 = (q.row(0).array() * q.row(1).array()).sqrt().sum();
  const double p_quarter = std::pow(p_sift, 0.25);
  const double p_half = std::sqrt(p_sift);

  // The chain from Σ_e √(p₀(0,e) p₀(1,e)) down to fidelity_sum + 6 P_SIFT^{1/4},
  // one link at a time.
  const Eigen::ArrayXd r0 = r_sq.row(0).transpose().array().sqrt();
  const Eigen::ArrayXd r1 = r_sq.row(1).transpose().array().sqrt();
  const Eigen::ArrayXd a0 = pae.row(0).transpose().array().sqrt();
  const Eigen::ArrayXd a1 = pae.row(1).transpose().array().sqrt();
  const double perturbed = ((a0 + r0) * (a1 + r1)).sum();
  steps.push_back({"s4.perturbation", fid0, perturbed, Relation::kLessEqual});

  const std::array<double, 2> t = {r_sq.row(0).sum(), r_sq.row(1).sum()};
  const std::array<double, 2> pa = {pae.row(0).sum(), pae.row(1).sum()};
  const double split = fid + std::sqrt(pa[0] * t[1]) + std::sqrt(pa[1] * t[0]) +
                       std::sqrt(t[0] * t[1]);
  steps.push_back({"s4.cauchy_schwarz", perturbed, split, Relation::kLessEqual});

  std::array<double, 2> t_bound{};
  for (int z = 0; z < 2; ++z) {
    t_bound[z] = 2.0 * std::sqrt(p0_marginal[z]) * p_half + p_sift;
    steps.push_back({"s4.completeness.z" + std::to_string(z), t[z], t_bound[z],
                     Relation::kLessEqual});
  }
  const double substituted = fid + std::sqrt(pa[0] * t_bound[1]) + std::sqrt(pa[1] * t_bound[0]) +
                             std::sqrt(t_bound[0] * t_bound[1]);
  steps.push_back({"s4.substituted", split, substituted, Relation::kLessEqual});

  const double pooled = t_bound[0] + t_bound[1];
  const double merged = fid + std::sqrt(pooled) + 0.5 * pooled;
  steps.push_back({"s4.merged", substituted, merged, Relation::kLessEqual});

  const double sharp = fid + std::sqrt(6.0) * p_quarter + 3.0 * p_half;
  steps.push_back({"s4.sharp", merged, sharp, Relation::kLessEqual});
  steps.push_back({"s4.constant", sharp, fid + 6.0 * p_quarter, Relation::kLessEqual});
  steps.push_back({"s4", fid0, fid + 6.0 * p_quarter, Relation::kLessEqual});

  steps.push_back({"s5", 0.5 - p_ctrl - 6.0 * p_quarter, fid, Relation::kLessEqual});

  const double info = mutual_information(joint);
  const double l1 = lemma1_bound(joint);
  const double rhs = theorem_rhs(p_ctrl, p_sift);
  steps.push_back({"s6.lemma1", info, l1, Relation::kLessEqual});
  const double load = p_ctrl + 6.0 * p_quarter;
  if (load <= 0.5) {
    steps.push_back({"s6.quadratic", l1, 2.0 * std::sqrt(std::max(0.0, load - load * load)),
                     Relation::kLessEqual});
  }
  steps.push_back({"s6.theorem", l1, rhs, Relation::kLessEqual});

  return {c, std::move(p0), p0_marginal, lhs_overlap, fid, std::move(steps)};
}

TradeoffReport verify_tradeoff(const AttackModel& attack, const Povm& povm) {
  const SiftOutcome sift = sift_branch(attack);
  const double p_ctrl = ctrl_error(attack);
  JointDistribution joint = joint_distribution(attack, povm);
  const double info = mutual_information(joint);
  const double l1 = lemma1_bound(joint);
  const double rhs = theorem_rhs(p_ctrl, sift.p_sift);
  const double gap = rhs - info;
  return {p_ctrl,     sift.p_sift, sift.p_a, std::move(joint), info, l1, rhs, gap,
          gap >= -tol::kSlack, proof_chain(attack, povm)};
}

}  // namespace sqkd
