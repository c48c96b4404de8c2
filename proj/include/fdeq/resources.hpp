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

#include "fdeq/ldpc.hpp"

#include <cstdint>

namespace fdeq {

enum class CodeFamily { Polar, Ldpc };

enum class Topology { HeavyHex, Sycamore, Linear };

/// Inputs to the run-time / gate-duration / qubit-count arithmetic.
/// Layer depth is depth_coeff * N_v(sub-block).
struct ResourceParams {
    int block_length = 128;      // N
    int n_sub = 1;               // N_sub partitions
    int n_it = 1;                // QAOA iterations
    int n_ly = 1;                // layers per iteration
    std::int64_t n_shots = 1;    // N_s
    double gate_duration = 0.0;  // GD, seconds
    double depth_coeff = 1.0;    // c in CD_ly = c * N_v
    double n_pps = 0.0;          // problems per second
    double qubits_per_problem = 0.0;
    double t_run_budget = 0.0;   // seconds
    CodeFamily family = CodeFamily::Polar;
};

/// QUBO variable count of one sub-block. Polar: N + N log2 N. LDPC: the
/// configured H restricted to the first `subblock_bits` columns, dropping
/// rows left with fewer than two bits.
std::int64_t qubo_vars_for_subblock(CodeFamily family, int subblock_bits,
                                    const ParityCheckMatrix* h = nullptr);

/// T_run = N_sub * N_it * N_ly * GD * (c * N_v) * N_s.
double runtime(const ResourceParams& p);

/// GD meeting the budget: t_run_budget / (N_sub N_it N_ly c N_v N_s).
double required_gate_duration(const ResourceParams& p);

/// N_Q = ceil(N_PPS * N_{Q/p} * T_run); 0 for the T_run = 0 sentinel.
std::int64_t qubit_count(const ResourceParams& p);

/// Heavy-hex -> 6 n, Sycamore -> 2.5 n, Linear -> n.
double depth_preset(Topology topology, double n_v);

} // namespace fdeq
