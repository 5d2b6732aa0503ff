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

#ifndef SQKD_POVM_HPP
#define SQKD_POVM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sqkd/linalg.hpp"

namespace sqkd {

/// Eve's measurement on the ancilla K. Elements are the Ê_e of
/// E_e = 1_H ⊗ Ê_e; each is positive and together they sum to 1_K.
class Povm {
 public:
  /// Throws ValidationError unless every element is positive within 1e-10
  /// and the elements sum to the identity within 1e-9.
  explicit Povm(std::vector<Operator> elements);

  const std::vector<Operator>& elements() const { return elements_; }
  const Operator& operator[](std::size_t e) const { return elements_[e]; }
  std::size_t outcome_count() const { return elements_.size(); }
  Eigen::Index dim() const { return elements_.front().rows(); }

 private:
  std::vector<Operator> elements_;
};

/// Projective measurement in the computational basis of K.
Povm computational_basis_povm(Eigen::Index dim);

/// Projective measurement in the Fourier basis of K; for dim = 2 this is
/// {|+⟩⟨+|, |−⟩⟨−|}.
Povm fourier_basis_povm(Eigen::Index dim);

/// E_e = S^{-1/2} A_e†A_e S^{-1/2} with S = Σ A_e†A_e. Throws
/// DegeneracyError when S has an eigenvalue ≤ 1e-12.
Povm povm_from_factors(std::span<const Operator> factors);

/// Reads m factors of size d×d from 2·m·d² reals (real, imaginary parts in
/// row-major order, factor after factor) and completes them into a POVM.
Povm povm_from_parameters(std::span<const double> params, Eigen::Index dim, std::size_t outcomes);

/// Inverse layout of povm_from_parameters for a given list of factors.
std::vector<double> factor_parameters(std::span<const Operator> factors);

}  // namespace sqkd

#endif  // SQKD_POVM_HPP
