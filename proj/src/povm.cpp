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

#include "sqkd/povm.hpp"

#include <numbers>
#include <string>

namespace sqkd {

Povm::Povm(std::vector<Operator> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw ValidationError("povm: no elements");
  const Eigen::Index d = elements_.front().rows();
  if (d < 1) throw DimensionError("povm: elements must have positive dimension");
  Operator total = Operator::Zero(d, d);
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const Operator& el = elements_[e];
    if (el.rows() != d || el.cols() != d) {
      throw DimensionError("povm: element " + std::to_string(e) + " has mismatched shape");
    }
    if (!is_positive(el, tol::kRole)) {
      throw ValidationError("povm: element " + std::to_string(e) + " is not positive");
    }
    total += el;
  }
  const double completeness = (total - Operator::Identity(d, d)).cwiseAbs().maxCoeff();
  if (completeness > tol::kProbabilitySum) {
    throw ValidationError("povm: elements sum to identity only within " +
                          std::to_string(completeness));
  }
}

Povm computational_basis_povm(Eigen::Index dim) {
  std::vector<Operator> els;
  for (Eigen::Index k = 0; k < dim; ++k) els.push_back(projector(basis_ket(dim, k)));
  return Povm(std::move(els));
}

Povm fourier_basis_povm(Eigen::Index dim) {
  std::vector<Operator> els;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Eigen::Index k = 0; k < dim; ++k) {
    Ket f(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      f(j) = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                   static_cast<double>(dim));
    }
    els.push_back(projector(f));
  }
  return Povm(std::move(els));
}

Povm povm_from_factors(std::span<const Operator> factors) {
  if (factors.empty()) throw DegeneracyError("povm_from_factors: no factors");
  const Eigen::Index d = factors.front().cols();
  std::vector<Operator> grams;
  grams.reserve(factors.size());
  Operator total = Operator::Zero(d, d);
  for (const Operator& a : factors) {
    if (a.cols() != d) throw DimensionError("povm_from_factors: factors disagree in dimension");
    grams.push_back(a.adjoint() * a);
    total += grams.back();
  }
  if (min_eigenvalue(total) <= tol::kClamp) {
    throw DegeneracyError("povm_from_factors: sum of A†A is singular");
  }
  const Operator inv_sqrt = hermitian_function(total, [](double x) { return 1.0 / std::sqrt(x); });
  std::vector<Operator> els;
  els.reserve(grams.size());
  for (const Operator& g : grams) {
    Operator el = inv_sqrt * g * inv_sqrt;
    els.push_back((el + el.adjoint()) / 2.0);
  }
  return Povm(std::move(els));
}

Povm povm_from_parameters(std::span<const double> params, Eigen::Index dim, std::size_t outcomes) {
  const std::size_t per_factor = static_cast<std::size_t>(2 * dim * dim);
  if (params.size() != per_factor * outcomes) {
    throw DimensionError("povm_from_parameters: expected " + std::to_string(per_factor * outcomes) +
                         " parameters, got " + std::to_string(params.size()));
  }
  std::vector<Operator> factors(outcomes, Operator(dim, dim));
  std::size_t k = 0;
  for (Operator& a : factors) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j, k += 2) {
        a(i, j) = {params[k], params[k + 1]};
      }
    }
  }
  return povm_from_factors(factors);
}

std::vector<double> factor_parameters(std::span<const Operator> factors) {
  std::vector<double> params;
  for (const Operator& a : factors) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        params.push_back(a(i, j).real());
        params.push_back(a(i, j).imag());
      }
    }
  }
  return params;
}

}  // namespace sqkd
