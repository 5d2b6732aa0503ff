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

#include "sqkd/attacks.hpp"

#include <charconv>
#include <numbers>

namespace sqkd {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

Operator pauli_x() {
  Operator x = Operator::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  return x;
}

Operator pauli_z() {
  Operator z = Operator::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

/// exp(iθ |1⟩⟨1| ⊗ (1 − P)) for a Pauli P on the ancilla.
Operator controlled_power(const Operator& pauli, double theta) {
  const Operator generator =
      tensor(projector(basis_ket(2, 1)), (Operator::Identity(2, 2) - pauli).eval());
  return unitary_exp((theta * generator).eval());
}

AttackModel two_qubit_attack(Ket omega, Operator v, Operator u) {
  AttackModel a{2, std::move(omega), std::move(v), std::move(u)};
  a.validate();
  return a;
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw DomainError("attack: theta must lie in [0, pi/2], got " + std::to_string(theta));
  }
}

}  // namespace

AttackModel AttackFamily::build(std::span<const double> params) const {
  if (params.size() != param_count()) {
    throw DimensionError("family " + name + ": expected " + std::to_string(param_count()) +
                         " parameters, got " + std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] < param_bounds[i].first || params[i] > param_bounds[i].second) {
      throw DomainError("family " + name + ": parameter " + std::to_string(i) + " out of bounds");
    }
  }
  return builder(params);
}

AttackModel identity_attack() {
  return two_qubit_attack(basis_ket(2, 0), Operator::Identity(4, 4), Operator::Identity(4, 4));
}

AttackModel forward_cnot_attack() {
  Operator cnot = Operator::Identity(4, 4);
  cnot.bottomRightCorner(2, 2) = pauli_x();
  return two_qubit_attack(basis_ket(2, 0), cnot, Operator::Identity(4, 4));
}

AttackModel return_cz_attack() {
  Operator cz = Operator::Identity(4, 4);
  cz(3, 3) = -1.0;
  return two_qubit_attack(plus_ket(), Operator::Identity(4, 4), cz);
}

AttackModel partial_forward_cnot_attack(double theta) {
  check_theta(theta);
  return two_qubit_attack(basis_ket(2, 0), controlled_power(pauli_x(), theta),
                          Operator::Identity(4, 4));
}

AttackModel partial_return_cz_attack(double theta) {
  check_theta(theta);
  return two_qubit_attack(plus_ket(), Operator::Identity(4, 4),
                          controlled_power(pauli_z(), theta));
}

AttackModel named_attack(std::string_view name) {
  if (name == "identity") return identity_attack();
  if (name == "forward-cnot") return forward_cnot_attack();
  if (name == "return-cz") return return_cz_attack();

  const auto open = name.find('(');
  if (open != std::string_view::npos && name.back() == ')') {
    const std::string_view family = name.substr(0, open);
    const std::string_view arg = name.substr(open + 1, name.size() - open - 2);
    double theta = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), theta);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw DomainError("named_attack: cannot parse parameter in '" + std::string(name) + "'");
    }
    const double params[] = {theta};
    return attack_family(family).build(params);
  }
  throw DomainError("named_attack: unknown attack '" + std::string(name) + "'");
}

AttackFamily attack_family(std::string_view name) {
  if (name == "partial-forward-cnot") {
    return {std::string(name), {{0.0, kHalfPi}},
            [](std::span<const double> p) { return partial_forward_cnot_attack(p[0]); }};
  }
  if (name == "partial-return-cz") {
    return {std::string(name), {{0.0, kHalfPi}},
            [](std::span<const double> p) { return partial_return_cz_attack(p[0]); }};
  }
  throw DomainError("attack_family: unknown family '" + std::string(name) + "'");
}

AttackModel random_attack(Eigen::Index ancilla_dim, std::mt19937_64& rng) {
  if (ancilla_dim < 1 || ancilla_dim > kMaxRandomAncillaDim) {
    throw DomainError("random_attack: ancilla dimension must be in [1, 6], got " +
                      std::to_string(ancilla_dim));
  }
  AttackModel a;
  a.ancilla_dim = ancilla_dim;
  a.omega = basis_ket(ancilla_dim, 0);
  a.v = haar_unitary(2 * ancilla_dim, rng);
  a.u = haar_unitary(2 * ancilla_dim, rng);
  return a;
}

AttackModel random_attack(Eigen::Index ancilla_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_attack(ancilla_dim, rng);
}

Operator hermitian_from_parameters(std::span<const double> params, Eigen::Index n) {
  if (params.size() != static_cast<std::size_t>(n * n)) {
    throw DimensionError("hermitian_from_parameters: expected " + std::to_string(n * n) +
                         " parameters, got " + std::to_string(params.size()));
  }
  Operator h = Operator::Zero(n, n);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = params[k++];
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j, k += 2) {
      h(i, j) = {params[k], params[k + 1]};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

std::size_t parameterized_attack_size(Eigen::Index ancilla_dim) {
  const auto n = static_cast<std::size_t>(2 * ancilla_dim);
  return 2 * n * n;
}

AttackModel parameterized_attack(std::span<const double> params, Eigen::Index ancilla_dim) {
  if (ancilla_dim < 1) throw DomainError("parameterized_attack: ancilla_dim must be >= 1");
  const std::size_t expected = parameterized_attack_size(ancilla_dim);
  if (params.size() != expected) {
    throw DimensionError("parameterized_attack: expected " + std::to_string(expected) +
                         " parameters, got " + std::to_string(params.size()));
  }
  const Eigen::Index n = 2 * ancilla_dim;
  const std::size_t half = expected / 2;
  AttackModel a;
  a.ancilla_dim = ancilla_dim;
  a.omega = basis_ket(ancilla_dim, 0);
  a.v = unitary_exp(hermitian_from_parameters(params.first(half), n));
  a.u = unitary_exp(hermitian_from_parameters(params.subspan(half), n));
  return a;
}

}  // namespace sqkd
