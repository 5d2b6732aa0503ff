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

#ifndef SQKD_LINALG_HPP
#define SQKD_LINALG_HPP

// Dense complex linear algebra on H (qubit) ⊗ K (ancilla) and the classical
// entropy functionals built on top of it.
//
// Index convention: qubit-major. Basis vector |q⟩⊗|k⟩ of H⊗K, with K of
// dimension d, sits at index q·d + k, so |z⟩⟨z| ⊗ 1_K is the z-th diagonal
// d×d block.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>

#include "sqkd/errors.hpp"

namespace sqkd {

namespace tol {
inline constexpr double kUnitary = 1e-10;
inline constexpr double kNorm = 1e-10;
inline constexpr double kRole = 1e-10;
inline constexpr double kProbabilitySum = 1e-9;
inline constexpr double kEquality = 1e-12;
inline constexpr double kSlack = 1e-9;
inline constexpr double kClamp = 1e-12;
inline constexpr double kEntropyFloor = 1e-15;
}  // namespace tol

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Ket = CVector<double>;
using Operator = CMatrix<double>;

template <typename Real = double>
CVector<Real> basis_ket(Eigen::Index dim, Eigen::Index index) {
  CVector<Real> v = CVector<Real>::Zero(dim);
  v(index) = Real(1);
  return v;
}

/// |+⟩ = (|0⟩ + |1⟩)/√2.
template <typename Real = double>
CVector<Real> plus_ket() {
  CVector<Real> v(2);
  v << Real(1), Real(1);
  return v / std::sqrt(Real(2));
}

/// |−⟩ = (|0⟩ − |1⟩)/√2.
template <typename Real = double>
CVector<Real> minus_ket() {
  CVector<Real> v(2);
  v << Real(1), Real(-1);
  return v / std::sqrt(Real(2));
}

template <typename Derived>
auto projector(const Eigen::MatrixBase<Derived>& ket) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> p = ket * ket.adjoint();
  return p;
}

/// Kronecker product, first operand on the major index. Column vectors stay
/// column vectors.
template <typename A, typename B>
auto tensor(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  static_assert(std::is_same_v<typename A::Scalar, typename B::Scalar>,
                "tensor operands must share a scalar type");
  using Scalar = typename A::Scalar;
  constexpr int kCols =
      (A::ColsAtCompileTime == 1 && B::ColsAtCompileTime == 1) ? 1 : Eigen::Dynamic;
  Eigen::Matrix<Scalar, Eigen::Dynamic, kCols> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Lifts an operator on H to X ⊗ 1_K.
template <typename Derived>
auto lift_qubit(const Eigen::MatrixBase<Derived>& x, Eigen::Index ancilla_dim) {
  using Scalar = typename Derived::Scalar;
  using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return tensor(x.eval(), M::Identity(ancilla_dim, ancilla_dim).eval());
}

/// Lifts an operator on K to 1_H ⊗ E.
template <typename Derived>
auto lift_ancilla(const Eigen::MatrixBase<Derived>& e) {
  using Scalar = typename Derived::Scalar;
  using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return tensor(M::Identity(2, 2).eval(), e.eval());
}

/// Z_z = |z⟩⟨z| ⊗ 1_K.
template <typename Real = double>
CMatrix<Real> z_projector(int z, Eigen::Index ancilla_dim) {
  CMatrix<Real> p = CMatrix<Real>::Zero(2 * ancilla_dim, 2 * ancilla_dim);
  p.block(z * ancilla_dim, z * ancilla_dim, ancilla_dim, ancilla_dim).setIdentity();
  return p;
}

/// tr_H: (result)_{kl} = Σ_q m_{(q,k),(q,l)}.
template <typename Derived>
auto partial_trace_qubit(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols() || m.rows() % 2 != 0) {
    throw DimensionError("partial_trace_qubit: expected a square operator of even dimension, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const Eigen::Index d = m.rows() / 2;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      m.topLeftCorner(d, d) + m.bottomRightCorner(d, d);
  return out;
}

/// Largest singular value, via the top eigenvalue of m†m.
template <typename Derived>
auto operator_norm(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.rows() != m.cols()) {
    throw DimensionError("operator_norm: operator must be square");
  }
  if (m.size() == 0) return Real(0);
  const auto gram = (m.adjoint() * m).eval();
  Eigen::SelfAdjointEigenSolver<decltype(gram)> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(Real(0), es.eigenvalues().maxCoeff()));
}

template <typename Derived>
auto unitarity_deviation(const Eigen::MatrixBase<Derived>& m) {
  using M = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) {
    throw DimensionError("unitarity_deviation: operator must be square");
  }
  return (m.adjoint() * m - M::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

template <typename Derived>
auto hermiticity_deviation(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Smallest eigenvalue of the Hermitian part of m.
template <typename Derived>
auto min_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  using M = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const M h = (m + m.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<M> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tolerance = tol::kUnitary) {
  return m.rows() == m.cols() && unitarity_deviation(m) <= tolerance;
}

template <typename Derived>
bool is_projector(const Eigen::MatrixBase<Derived>& m, double tolerance = tol::kRole) {
  return m.rows() == m.cols() && hermiticity_deviation(m) <= tolerance &&
         (m * m - m).cwiseAbs().maxCoeff() <= tolerance;
}

template <typename Derived>
bool is_positive(const Eigen::MatrixBase<Derived>& m, double tolerance = tol::kRole) {
  return m.rows() == m.cols() && hermiticity_deviation(m) <= tolerance &&
         min_eigenvalue(m) >= -tolerance;
}

template <typename Derived>
bool is_density(const Eigen::MatrixBase<Derived>& m, double tolerance = tol::kRole) {
  return is_positive(m, tolerance) && std::abs(m.trace() - 1.0) <= tolerance;
}

/// f(h) for Hermitian h, through its spectral decomposition.
template <typename Derived, typename F>
auto hermitian_function(const Eigen::MatrixBase<Derived>& h, F&& f) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using M = CMatrix<Real>;
  const M herm = ((h + h.adjoint()) / 2).template cast<std::complex<Real>>();
  Eigen::SelfAdjointEigenSolver<M> es(herm);
  CVector<Real> mapped(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) {
    mapped(i) = std::complex<Real>(f(es.eigenvalues()(i)));
  }
  M out = es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().adjoint();
  return out;
}

/// exp(i·h) for Hermitian h.
template <typename Derived>
auto unitary_exp(const Eigen::MatrixBase<Derived>& h) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return hermitian_function(h, [](Real lambda) {
    return std::complex<Real>(std::cos(lambda), std::sin(lambda));
  });
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix, with the phases
/// of R's diagonal folded back into Q.
template <typename Real = double, typename Rng>
CMatrix<Real> haar_unitary(Eigen::Index dim, Rng& rng) {
  if (dim < 1) throw DomainError("haar_unitary: dim must be >= 1");
  std::normal_distribution<Real> gauss(Real(0), Real(1) / std::sqrt(Real(2)));
  CMatrix<Real> g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const Real re = gauss(rng);
      const Real im = gauss(rng);
      g(i, j) = std::complex<Real>(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix<Real>> qr(g);
  CMatrix<Real> q = qr.householderQ() * CMatrix<Real>::Identity(dim, dim);
  const CMatrix<Real>& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const std::complex<Real> diag = r(j, j);
    const Real mag = std::abs(diag);
    const std::complex<Real> phase = mag > Real(0) ? diag / mag : std::complex<Real>(1);
    q.col(j) *= phase;
  }
  return q;
}

/// −Σ p log₂ p with 0·log 0 = 0. Entries in [−1e-12, 1e-15) count as zero.
template <typename Derived>
auto shannon_entropy(const Eigen::DenseBase<Derived>& p) {
  using Real = typename Derived::Scalar;
  Real sum = 0;
  Real h = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const Real x = p.derived().coeff(i);
    if (x < -tol::kClamp) {
      throw DomainError("shannon_entropy: negative probability " + std::to_string(x));
    }
    sum += x;
    if (x > tol::kEntropyFloor) h -= x * std::log2(x);
  }
  if (std::abs(sum - Real(1)) > tol::kProbabilitySum) {
    throw DomainError("shannon_entropy: probabilities sum to " + std::to_string(sum));
  }
  return h;
}

/// S(ρ) = −tr ρ log₂ ρ, eigenvalues clamped at zero.
template <typename Derived>
auto von_neumann_entropy(const Eigen::MatrixBase<Derived>& rho) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using M = CMatrix<Real>;
  const M herm = ((rho + rho.adjoint()) / 2).template cast<std::complex<Real>>();
  Eigen::SelfAdjointEigenSolver<M> es(herm, Eigen::EigenvaluesOnly);
  Real h = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Real lambda = es.eigenvalues()(i);
    if (lambda < -tol::kRole) {
      throw DomainError("von_neumann_entropy: operator is not positive");
    }
    if (lambda > tol::kEntropyFloor) h -= lambda * std::log2(lambda);
  }
  return h;
}

/// Joint law of a binary X and a finite Y, stored as a 2×|Y| table.
template <typename Real = double>
class BasicJointDistribution {
 public:
  using Table = Eigen::Matrix<Real, 2, Eigen::Dynamic>;

  /// Validates the table: exactly two rows, no entry below −1e-12 (tiny
  /// negatives are clamped to zero), total mass 1 within 1e-9.
  static BasicJointDistribution from_table(
      const Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>& table) {
    if (table.rows() != 2) {
      throw DomainError("joint distribution: x alphabet must be binary, got " +
                        std::to_string(table.rows()) + " rows");
    }
    if (table.cols() < 1) throw DomainError("joint distribution: empty outcome set");
    Table t = table;
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      Real& x = t.data()[i];
      if (!std::isfinite(x) || x < -tol::kClamp) {
        throw DomainError("joint distribution: invalid entry " + std::to_string(x));
      }
      x = std::max(x, Real(0));
    }
    if (std::abs(t.sum() - Real(1)) > tol::kProbabilitySum) {
      throw DomainError("joint distribution: total mass " + std::to_string(t.sum()));
    }
    return BasicJointDistribution(std::move(t));
  }

  const Table& table() const { return table_; }
  Real operator()(int x, Eigen::Index y) const { return table_(x, y); }
  Eigen::Index outcome_count() const { return table_.cols(); }

  RVector<Real> marginal_x() const { return table_.rowwise().sum(); }
  RVector<Real> marginal_y() const { return table_.colwise().sum().transpose(); }

 private:
  explicit BasicJointDistribution(Table t) : table_(std::move(t)) {}
  Table table_;
};

using JointDistribution = BasicJointDistribution<double>;

/// I(X:Y) = Σ p(x,y) log₂[p(x,y) / (p(x) p(y))], clamped at zero. Equal to
/// H(X) + H(Y) − H(X,Y), but exactly 0 on product tables.
template <typename Real>
Real mutual_information(const BasicJointDistribution<Real>& j) {
  const RVector<Real> px = j.marginal_x();
  const RVector<Real> py = j.marginal_y();
  Real info = 0;
  for (Eigen::Index y = 0; y < j.outcome_count(); ++y) {
    for (int x = 0; x < 2; ++x) {
      const Real p = j(x, y);
      if (p > tol::kEntropyFloor) info += p * std::log2(p / (px(x) * py(y)));
    }
  }
  return std::max(Real(0), info);
}

/// Re⟨ψ|M|ψ⟩.
template <typename V, typename M>
double expectation(const Eigen::MatrixBase<V>& psi, const Eigen::MatrixBase<M>& m) {
  return psi.dot(m * psi).real();
}

}  // namespace sqkd

#endif  // SQKD_LINALG_HPP
