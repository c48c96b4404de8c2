// Copyright 2026 The fdeq developers
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

#pragma once

#include <Eigen/Dense>

#include <functional>

namespace fdeq {

/// max_iterations: 0 uses the default evaluation budget, 1 is the
/// one-iteration deployment mode (a single improvement step is attempted).
/// An "iteration" is one objective evaluation beyond the initial point.
struct OptimizerConfig {
    int max_iterations = 0;
    double convergence_tol = 1e-4;
    double initial_step = 0.3;
};

struct OptimResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free local descent in the COBYLA family: a linear model is
/// interpolated through a simplex of n+1 points and minimized within a trust
/// radius; the radius shrinks on failed steps until it falls below
/// convergence_tol. The reported best value is monotone non-increasing in
/// the evaluation index and never exceeds f(x0).
OptimResult minimize_linear_trust(const std::function<double(const Eigen::VectorXd&)>& f,
                                  const Eigen::VectorXd& x0, const OptimizerConfig& cfg);

/// Default evaluation budget when max_iterations == 0.
int default_eval_budget(int dim);

} // namespace fdeq
