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

#ifndef SQKD_NELDER_MEAD_HPP
#define SQKD_NELDER_MEAD_HPP

#include <functional>

#include <Eigen/Dense>

namespace sqkd {

struct NelderMeadOptions {
  int max_iterations = 4000;
  /// Stop once the spread of simplex values falls below this.
  double f_tolerance = 1e-13;
  /// ...and every vertex is within this distance (max-norm) of the best.
  double x_tolerance = 1e-9;
  double initial_step = 0.25;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

/// Minimizes f from x0 with the standard reflect/expand/contract/shrink
/// simplex moves. The returned value is never worse than f(x0).
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options = {});

}  // namespace sqkd

#endif  // SQKD_NELDER_MEAD_HPP
