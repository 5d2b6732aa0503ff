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

#include "sqkd/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

namespace sqkd {
namespace {

using ::sqkd::testing::max_diff;

Operator random_matrix(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Operator m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const double re = g(rng);
    m.data()[i] = {re, g(rng)};
  }
  return m;
}

Operator random_density(Eigen::Index n, std::mt19937_64& rng) {
  const Operator a = random_matrix(n, rng);
  Operator rho = a * a.adjoint();
  return rho / rho.trace();
}

TEST(TensorTest, IdentityTimesIdentity) {
  const Operator i2 = Operator::Identity(2, 2);
  EXPECT_EQ(tensor(i2, i2), Operator::Identity(4, 4));
}

TEST(TensorTest, BasisBookkeepingIsQubitMajor) {
  const Ket v = tensor(basis_ket(2, 0), basis_ket(2, 1));
  EXPECT_EQ(v, basis_ket(4, 1));
  EXPECT_EQ(tensor(basis_ket(2, 1), basis_ket(3, 2)), basis_ket(6, 5));
}

TEST(TensorTest, ProjectorFixesItsEigenvector) {
  const Operator x_plus = tensor(projector(plus_ket()), Operator::Identity(2, 2).eval());
  const Ket v = tensor(plus_ket(), basis_ket(2, 0));
  EXPECT_LE(max_diff(x_plus * v, v), 1e-15);
}

TEST(TensorTest, AssociativeAndBilinear) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const Operator a = random_matrix(2, rng), b = random_matrix(3, rng), c = random_matrix(2, rng);
    const Operator a2 = random_matrix(2, rng);
    const std::complex<double> s(g(rng), g(rng));
    EXPECT_LE(max_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), 1e-12);
    EXPECT_LE(max_diff(tensor((a + s * a2).eval(), b), (tensor(a, b) + s * tensor(a2, b)).eval()),
              1e-12);
    EXPECT_LE(max_diff(tensor(a, (s * b).eval()), (s * tensor(a, b)).eval()), 1e-12);
  }
}

TEST(PartialTraceTest, ProductState) {
  std::mt19937_64 rng(3);
  const Operator rho_k = random_density(3, rng);
  EXPECT_LE(max_diff(partial_trace_qubit(tensor(projector(basis_ket(2, 0)), rho_k)), rho_k), 1e-15);
}

TEST(PartialTraceTest, MaximallyEntangledGivesMaximallyMixed) {
  Ket phi = Ket::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  const Operator reduced = partial_trace_qubit(projector(phi));
  EXPECT_LE(max_diff(reduced, (Operator::Identity(2, 2) / 2.0).eval()), 1e-15);
}

TEST(PartialTraceTest, MatchesDirectSummation) {
  std::mt19937_64 rng(5);
  for (Eigen::Index d = 1; d <= 5; ++d) {
    const Operator rho = random_density(2 * d, rng);
    const Operator reduced = partial_trace_qubit(rho);
    // Oracle: explicit double loop over (q, k, l).
    for (Eigen::Index k = 0; k < d; ++k) {
      for (Eigen::Index l = 0; l < d; ++l) {
        std::complex<double> sum = 0;
        for (Eigen::Index q = 0; q < 2; ++q) sum += rho(q * d + k, q * d + l);
        EXPECT_LE(std::abs(reduced(k, l) - sum), 1e-15);
      }
    }
    EXPECT_LE(std::abs(reduced.trace() - rho.trace()), 1e-12);
  }
}

TEST(PartialTraceTest, ProductOperatorsReduceToScaledFactor) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Operator a = random_matrix(2, rng);
    const Operator b = random_matrix(1 + trial % 4, rng);
    EXPECT_LE(max_diff(partial_trace_qubit(tensor(a, b)), (a.trace() * b).eval()), 1e-12);
  }
}

TEST(PartialTraceTest, RejectsOddDimension) {
  EXPECT_THROW(partial_trace_qubit(Operator::Identity(3, 3)), DimensionError);
  EXPECT_THROW(partial_trace_qubit(Operator::Zero(2, 4)), DimensionError);
}

TEST(OperatorNormTest, Examples) {
  EXPECT_NEAR(operator_norm(Operator::Identity(5, 5)), 1.0, 1e-12);
  Operator lowering = Operator::Zero(2, 2);
  lowering(0, 1) = 1.0;
  EXPECT_NEAR(operator_norm(lowering), 1.0, 1e-12);
  Operator diag = Operator::Zero(2, 2);
  diag(0, 0) = 0.3;
  diag(1, 1) = -2.0;
  EXPECT_NEAR(operator_norm(diag), 2.0, 1e-12);
}

TEST(OperatorNormTest, SubmultiplicativeAndUnitarilyInvariant) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index n = 1 + trial % 6;
    const Operator a = random_matrix(n, rng), b = random_matrix(n, rng);
    const Operator u = haar_unitary(n, rng), w = haar_unitary(n, rng);
    const double na = operator_norm(a);
    EXPECT_LE(operator_norm((a * b).eval()), na * operator_norm(b) * (1 + 1e-9));
    EXPECT_NEAR(operator_norm((u * a * w).eval()), na, 1e-9 * na);
  }
}

TEST(HaarTest, DimensionOneIsAPhase) {
  std::mt19937_64 rng(1);
  const Operator u = haar_unitary(1, rng);
  ASSERT_EQ(u.rows(), 1);
  EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
}

TEST(HaarTest, SamplesAreUnitary) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const Operator u = haar_unitary(1 + trial % 12, rng);
    EXPECT_LE(unitarity_deviation(u), 1e-10);
  }
}

TEST(HaarTest, EqualSeedsAreBitIdentical) {
  std::mt19937_64 a(99), b(99);
  EXPECT_EQ(haar_unitary(6, a), haar_unitary(6, b));
}

TEST(HaarTest, FirstMomentMatchesHaar) {
  // E|U₀₀|² = 1/dim under the Haar measure.
  std::mt19937_64 rng(2024);
  double sum = 0;
  constexpr int kSamples = 100000;
  for (int i = 0; i < kSamples; ++i) sum += std::norm(haar_unitary(2, rng)(0, 0));
  EXPECT_NEAR(sum / kSamples, 0.5, 0.01);
}

TEST(HaarTest, PhaseCorrectionMakesDiagonalPhasesUniform) {
  // Without the phase correction arg(U₀₀) concentrates; with it the mean
  // of U₀₀ vanishes.
  std::mt19937_64 rng(77);
  std::complex<double> sum = 0;
  constexpr int kSamples = 20000;
  for (int i = 0; i < kSamples; ++i) sum += haar_unitary(2, rng)(0, 0);
  EXPECT_LT(std::abs(sum) / kSamples, 0.02);
}

TEST(ShannonEntropyTest, Examples) {
  EXPECT_EQ(shannon_entropy(Eigen::Vector2d(1, 0)), 0.0);
  EXPECT_NEAR(shannon_entropy(Eigen::Vector2d(0.5, 0.5)), 1.0, 1e-15);
  // mpmath, 30 digits: h(0.2) = 0.721928094887362347870319429489
  EXPECT_NEAR(shannon_entropy(Eigen::Vector2d(0.2, 0.8)), 0.721928094887362, 1e-14);
}

TEST(ShannonEntropyTest, Errors) {
  EXPECT_THROW(shannon_entropy(Eigen::Vector2d(-0.1, 1.1)), DomainError);
  EXPECT_THROW(shannon_entropy(Eigen::Vector2d(0.5, 0.6)), DomainError);
  EXPECT_NO_THROW(shannon_entropy(Eigen::Vector2d(-1e-13, 1.0)));
}

TEST(MutualInformationTest, Examples) {
  Eigen::MatrixXd t(2, 2);
  t << 0.25, 0.25, 0.25, 0.25;
  EXPECT_NEAR(mutual_information(JointDistribution::from_table(t)), 0.0, 1e-15);
  t << 0.5, 0, 0, 0.5;
  EXPECT_NEAR(mutual_information(JointDistribution::from_table(t)), 1.0, 1e-15);
  t << 0.4, 0.1, 0.1, 0.4;
  // 1 − h(0.2) = 0.278071905112637652129680570511
  EXPECT_NEAR(mutual_information(JointDistribution::from_table(t)), 0.278071905112638, 1e-14);
}

TEST(MutualInformationTest, BoundedByMarginalEntropies) {
  std::mt19937_64 rng(17);
  std::exponential_distribution<double> mass(1.0);
  for (int trial = 0; trial < 100000; ++trial) {
    const Eigen::Index m = 1 + trial % 6;
    Eigen::MatrixXd t(2, m);
    for (Eigen::Index i = 0; i < t.size(); ++i) t.data()[i] = mass(rng);
    t /= t.sum();
    const JointDistribution j = JointDistribution::from_table(t);
    const double i_xy = mutual_information(j);
    ASSERT_GE(i_xy, 0.0);
    ASSERT_LE(i_xy, std::min(shannon_entropy(j.marginal_x()), shannon_entropy(j.marginal_y())) + 1e-12);
  }
}

TEST(JointDistributionTest, Validation) {
  EXPECT_THROW(JointDistribution::from_table(Eigen::MatrixXd::Constant(3, 2, 1.0 / 6)), DomainError);
  Eigen::MatrixXd t(2, 2);
  t << 0.5, 0.6, 0.0, 0.0;
  EXPECT_THROW(JointDistribution::from_table(t), DomainError);
  t << 0.5, -0.01, 0.0, 0.51;
  EXPECT_THROW(JointDistribution::from_table(t), DomainError);
  t << 0.5, -1e-13, 0.0, 0.5;
  const JointDistribution j = JointDistribution::from_table(t);
  EXPECT_EQ(j(0, 1), 0.0);
}

TEST(RoleChecksTest, RecognizeRoles) {
  EXPECT_TRUE(is_projector(z_projector(1, 3)));
  EXPECT_TRUE(is_density(projector(plus_ket())));
  EXPECT_FALSE(is_density(Operator::Identity(2, 2).eval()));
  Operator not_positive = Operator::Zero(2, 2);
  not_positive(0, 0) = -0.5;
  EXPECT_FALSE(is_positive(not_positive));
  EXPECT_NEAR(von_neumann_entropy((Operator::Identity(4, 4) / 4.0).eval()), 2.0, 1e-12);
}

}  // namespace
}  // namespace sqkd
