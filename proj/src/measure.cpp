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

#include "fdeq/measure.hpp"

#include "fdeq/errors.hpp"
#include "fdeq/rng.hpp"

#include <algorithm>
#include <bit>

namespace fdeq {

namespace {

int qubits_of_dim(Eigen::Index dim) {
    const auto udim = static_cast<std::uint64_t>(dim);
    if (dim < 2 || !std::has_single_bit(udim)) throw DimensionMismatch("state dimension not 2^n");
    return std::countr_zero(udim);
}

} // namespace

Eigen::VectorXd probabilities(const StateVector& psi) { return psi.cwiseAbs2(); }

Eigen::VectorXd probabilities(const DensityMatrix& rho) {
    return rho.diagonal().real().cwiseMax(0.0);
}

double expectation_diag(const Eigen::VectorXd& probs, const std::vector<double>& cost_table) {
    if (probs.size() != static_cast<Eigen::Index>(cost_table.size()))
        throw DimensionMismatch("expectation_diag: table size mismatch");
    return probs.dot(Eigen::Map<const Eigen::VectorXd>(cost_table.data(),
                                                       static_cast<Eigen::Index>(cost_table.size())));
}

double expectation_diag(const StateVector& psi, const Qubo& cost) {
    const int n = qubits_of_dim(psi.size());
    if (n != cost.n_vars) throw DimensionMismatch("expectation_diag: qubit/variable mismatch");
    return expectation_diag(probabilities(psi), qubo_cost_table(cost));
}

double expectation_diag(const DensityMatrix& rho, const Qubo& cost) {
    if (rho.rows() != rho.cols()) throw DimensionMismatch("expectation_diag: rho not square");
    const int n = qubits_of_dim(rho.rows());
    if (n != cost.n_vars) throw DimensionMismatch("expectation_diag: qubit/variable mismatch");
    return expectation_diag(probabilities(rho), qubo_cost_table(cost));
}

std::vector<std::uint64_t> sample_indices(const Eigen::VectorXd& probs, int n_shots,
                                          std::uint64_t seed) {
    if (n_shots < 1) throw EmptyInput("sample_indices: n_shots must be >= 1");
    const Eigen::Index dim = probs.size();
    std::vector<double> cdf(static_cast<std::size_t>(dim));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        acc += std::max(probs[i], 0.0);
        cdf[static_cast<std::size_t>(i)] = acc;
    }
    Rng rng(seed);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(n_shots));
    for (int s = 0; s < n_shots; ++s) {
        const double u = rng.uniform01() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out.push_back(static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
            it - cdf.begin(), static_cast<std::ptrdiff_t>(dim - 1))));
    }
    return out;
}

namespace {

std::vector<BinVector> indices_to_bits(const std::vector<std::uint64_t>& idx, int n) {
    std::vector<BinVector> out;
    out.reserve(idx.size());
    for (std::uint64_t i : idx) out.push_back(index_to_bits(i, n));
    return out;
}

} // namespace

std::vector<BinVector> sample_bitstrings(const StateVector& psi, int n_shots, std::uint64_t seed) {
    const int n = qubits_of_dim(psi.size());
    return indices_to_bits(sample_indices(probabilities(psi), n_shots, seed), n);
}

std::vector<BinVector> sample_bitstrings(const DensityMatrix& rho, int n_shots, std::uint64_t seed) {
    const int n = qubits_of_dim(rho.rows());
    return indices_to_bits(sample_indices(probabilities(rho), n_shots, seed), n);
}

} // namespace fdeq
