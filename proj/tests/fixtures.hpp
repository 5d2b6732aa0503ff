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

#ifndef SQKD_TESTS_FIXTURES_HPP
#define SQKD_TESTS_FIXTURES_HPP

// Test-only oracles. Nothing here calls into the library's entropy,
// exponential, or optimizer code paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "sqkd/protocol.hpp"

namespace sqkd::testing {

/// V = 1, Ω = |0⟩, U = |0⟩⟨0| ⊗ 1 + |1⟩⟨1| ⊗ H. Eve ends with ρ_0 = |0⟩⟨0|,
/// ρ_1 = |+⟩⟨+|, each with probability 1/2.
inline AttackModel return_hadamard_attack() {
  Operator u = Operator::Identity(4, 4);
  const double s = 1.0 / std::sqrt(2.0);
  u(2, 2) = s;
  u(2, 3) = s;
  u(3, 2) = s;
  u(3, 3) = -s;
  return {2, basis_ket(2, 0), Operator::Identity(4, 4), u};
}

/// exp(A) by a truncated Taylor series with scaling and squaring.
inline Operator taylor_exp(const Operator& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  const Operator scaled = a / std::pow(2.0, squarings);
  Operator term = Operator::Identity(a.rows(), a.cols());
  Operator sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline double plog(double p) { return p > 0 ? -p * std::log2(p) : 0.0; }

/// Mutual information of a 2×2 joint table written out by hand.
inline double mi_2x2(double a, double b, double c, double d) {
  const double hx = plog(a + b) + plog(c + d);
  const double hy = plog(a + c) + plog(b + d);
  return hx + hy - plog(a) - plog(b) - plog(c) - plog(d);
}

/// Best mutual information over real projective measurements
/// {|θ⟩⟨θ|, |θ⊥⟩⟨θ⊥|}, θ on a uniform grid of `angles` points in [0, π),
/// for two equiprobable real pure qubit states.
inline double projective_grid_oracle(double s0x, double s0y, double s1x, double s1y,
                                     int angles = 10000) {
  double best = 0;
  for (int k = 0; k < angles; ++k) {
    const double t = std::numbers::pi * k / angles;
    const double ax = std::cos(t), ay = std::sin(t);
    const double bx = -std::sin(t), by = std::cos(t);
    const auto sq = [](double v) { return v * v; };
    const double a = 0.5 * sq(ax * s0x + ay * s0y);
    const double b = 0.5 * sq(bx * s0x + by * s0y);
    const double c = 0.5 * sq(ax * s1x + ay * s1y);
    const double d = 0.5 * sq(bx * s1x + by * s1y);
    best = std::max(best, mi_2x2(a, b, c, d));
  }
  return best;
}

/// Entry-wise maximum absolute difference.
template <typename A, typename B>
double max_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace sqkd::testing

#endif  // SQKD_TESTS_FIXTURES_HPP
