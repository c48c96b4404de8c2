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

#include "fdeq/resources.hpp"

#include "fdeq/errors.hpp"

#include <bit>
#include <cmath>

namespace fdeq {

std::int64_t qubo_vars_for_subblock(CodeFamily family, int subblock_bits,
                                    const ParityCheckMatrix* h) {
    if (subblock_bits < 1) throw ConfigError("qubo_vars_for_subblock: sub-block must be >= 1 bit");
    switch (family) {
    case CodeFamily::Polar: {
        const auto n = static_cast<std::uint64_t>(subblock_bits);
        if (!std::has_single_bit(n))
            throw ConfigError("qubo_vars_for_subblock: Polar sub-block must be a power of two");
        const int log2n = std::countr_zero(n);
        return subblock_bits + static_cast<std::int64_t>(subblock_bits) * log2n;
    }
    case CodeFamily::Ldpc: {
        if (h == nullptr) throw UnsupportedFamily("qubo_vars_for_subblock: LDPC needs an H matrix");
        std::int64_t vars = subblock_bits;
        for (const auto& row : h->row_support) {
            int deg = 0;
            for (int c : row)
                if (c < subblock_bits) ++deg;
            if (deg >= 2) vars += deg / 2;
        }
        return vars;
    }
    }
    throw UnsupportedFamily("qubo_vars_for_subblock: unknown code family");
}

namespace {

double layer_product(const ResourceParams& p) {
    const int sub_bits = p.block_length / p.n_sub;
    const double n_v = static_cast<double>(qubo_vars_for_subblock(p.family, sub_bits));
    return static_cast<double>(p.n_sub) * p.n_it * p.n_ly * (p.depth_coeff * n_v) *
           static_cast<double>(p.n_shots);
}

} // namespace

double runtime(const ResourceParams& p) {
    if (p.n_sub < 1 || p.n_it < 1 || p.n_ly < 1 || p.n_shots < 1)
        throw ConfigError("runtime: counts must be >= 1");
    if (p.gate_duration <= 0) throw ConfigError("runtime: gate_duration must be positive");
    if (p.depth_coeff <= 0) throw ConfigError("runtime: depth_coeff must be positive");
    return p.gate_duration * layer_product(p);
}

double required_gate_duration(const ResourceParams& p) {
    if (p.t_run_budget <= 0) throw ConfigError("required_gate_duration: budget must be positive");
    if (p.depth_coeff <= 0) throw ConfigError("required_gate_duration: depth_coeff must be positive");
    return p.t_run_budget / layer_product(p);
}

std::int64_t qubit_count(const ResourceParams& p) {
    if (p.t_run_budget == 0.0) return 0; // degenerate guard
    if (p.n_pps <= 0 || p.qubits_per_problem <= 0 || p.t_run_budget < 0)
        throw ConfigError("qubit_count: needs positive PPS, qubits/problem and run time");
    return static_cast<std::int64_t>(std::ceil(p.n_pps * p.qubits_per_problem * p.t_run_budget));
}

double depth_preset(Topology topology, double n_v) {
    switch (topology) {
    case Topology::HeavyHex:
        return 6.0 * n_v;
    case Topology::Sycamore:
        return 2.5 * n_v;
    case Topology::Linear:
        return n_v;
    }
    throw UnsupportedFamily("depth_preset: unknown topology");
}

} // namespace fdeq
