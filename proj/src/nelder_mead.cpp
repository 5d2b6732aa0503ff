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

#include "sqkd/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace sqkd {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  const Eigen::Index n = x0.size();
  std::vector<Eigen::VectorXd> simplex(n + 1, x0);
  std::vector<double> values(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double step = x0(i) != 0.0 ? options.initial_step * std::max(1.0, std::abs(x0(i)))
                                     : options.initial_step;
    simplex[i + 1](i) += step;
  }
  for (Eigen::Index i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<Eigen::Index> order(n + 1);
  NelderMeadResult result;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return values[a] < values[b]; });
    const Eigen::Index best = order.front();
    const Eigen::Index worst = order.back();
    const Eigen::Index second_worst = order[n > 0 ? n - 1 : 0];

    double x_spread = 0;
    for (const auto& v : simplex) {
      x_spread = std::max(x_spread, (v - simplex[best]).cwiseAbs().maxCoeff());
    }
    if (values[worst] - values[best] <= options.f_tolerance && x_spread <= options.x_tolerance) {
      result.converged = true;
      break;
    }
    if (n == 0) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + kReflect * (centroid - simplex[worst]);
    const double f_reflected = f(reflected);
    if (f_reflected < values[best]) {
      const Eigen::VectorXd expanded = centroid + kExpand * (reflected - centroid);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + kContract * (reflected - centroid))
                : Eigen::VectorXd(centroid + kContract * (simplex[worst] - centroid));
    const double f_contracted = f(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + kShrink * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best_index = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[best_index];
  result.value = *best_it;
  result.iterations = it;
  return result;
}

}  // namespace sqkd
