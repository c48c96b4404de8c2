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

#include "fdeq/bits.hpp"
#include "fdeq/density.hpp"
#include "fdeq/qubo.hpp"
#include "fdeq/statevector.hpp"

#include <cstdint>
#include <vector>

namespace fdeq {

/// Basis-state probabilities, |amp|^2 or Re(rho_xx) clamped at 0.
Eigen::VectorXd probabilities(const StateVector& psi);
Eigen::VectorXd probabilities(const DensityMatrix& rho);

/// sum_x p(x) qubo_cost(x). Throws DimensionMismatch when the state dimension
/// is not 2^n_vars.
double expectation_diag(const StateVector& psi, const Qubo& cost);
double expectation_diag(const DensityMatrix& rho, const Qubo& cost);
double expectation_diag(const Eigen::VectorXd& probs, const std::vector<double>& cost_table);

/// n_shots iid draws from p(x), deterministic given seed.
std::vector<BinVector> sample_bitstrings(const StateVector& psi, int n_shots, std::uint64_t seed);
std::vector<BinVector> sample_bitstrings(const DensityMatrix& rho, int n_shots, std::uint64_t seed);
std::vector<std::uint64_t> sample_indices(const Eigen::VectorXd& probs, int n_shots,
                                          std::uint64_t seed);

} // namespace fdeq
