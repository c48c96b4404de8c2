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

#include "fdeq/code.hpp"

#include <cstdint>

namespace fdeq {

struct BpConfig {
    int max_iterations = 50;
    bool early_stop = true; // stop once H x^T = 0
};

/// Sum-product belief propagation on the Tanner graph, flooding schedule.
/// Check-to-bit messages use the exact tanh product rule; bit decisions by
/// posterior LLR sign (bit 1 iff LLR < 0). Returns the last hard decision on
/// non-convergence.
BinVector bp_decode(const ParityCheckMatrix& h, const Eigen::VectorXd& llrs, const BpConfig& cfg);

struct SclConfig {
    int list_size = 1;
};

/// Successive cancellation list decoding. Left messages use the exact
/// boxplus f(a,b) = sign(a)sign(b) min(|a|,|b|)
///                  + log1p(e^{-(|a|+|b|)}) - log1p(e^{-||a|-|b||}),
/// right messages g(a,b,s) = b + (1-2s) a, and the path metric accumulates
/// the exact softplus penalty PM += log(1 + e^{-(1-2u) lambda}), so with
/// L = 2^K the surviving set is exhaustive and the winner is the exact ML
/// word. Ties break toward the lexicographically smallest data word.
BinVector scl_decode(const PolarCodeConfig& cfg, const Eigen::VectorXd& llrs,
                     const SclConfig& scl);

struct MlResult {
    BinVector data;
    double score = 0.0;
    std::uint64_t candidates = 0;
};

/// Exhaustive maximum-likelihood decoding: argmin over all 2^K data words of
/// sum_i L_i x_i(u), ties toward the lexicographically smallest u. Throws
/// SizeLimit when K exceeds the cap.
MlResult ml_decode_full(const Code& code, const Eigen::VectorXd& llrs, int k_cap = 20);
BinVector ml_decode(const Code& code, const Eigen::VectorXd& llrs, int k_cap = 20);

} // namespace fdeq
