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

#include "fdeq/decoders.hpp"

#include "fdeq/errors.hpp"

#include <cmath>
#include <vector>

namespace fdeq {

namespace {

constexpr double kLlrClamp = 30.0;

double clamp_llr(double v) { return std::clamp(v, -kLlrClamp, kLlrClamp); }

} // namespace

BinVector bp_decode(const ParityCheckMatrix& h, const Eigen::VectorXd& llrs, const BpConfig& cfg) {
    if (llrs.size() != h.bits) throw LengthMismatch("bp_decode: len(llrs) != N");
    if (cfg.max_iterations < 1) throw ConfigError("bp_decode: max_iterations must be >= 1");

    // Edge storage: per check, messages aligned with its bit support.
    const int m = h.checks;
    const int n = h.bits;
    std::vector<std::vector<double>> to_check(static_cast<std::size_t>(m));
    std::vector<std::vector<double>> to_bit(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        const std::size_t deg = h.row_support[static_cast<std::size_t>(c)].size();
        to_check[static_cast<std::size_t>(c)].resize(deg);
        to_bit[static_cast<std::size_t>(c)].assign(deg, 0.0);
        for (std::size_t e = 0; e < deg; ++e)
            to_check[static_cast<std::size_t>(c)][e] = llrs[h.row_support[static_cast<std::size_t>(c)][e]];
    }

    BinVector hard(n);
    for (int it = 0; it < cfg.max_iterations; ++it) {
        // Check update: tanh product rule over all other edges of the check,
        // via forward/backward partial products.
        for (int c = 0; c < m; ++c) {
            auto& in = to_check[static_cast<std::size_t>(c)];
            auto& out = to_bit[static_cast<std::size_t>(c)];
            const std::size_t deg = in.size();
            std::vector<double> t(deg);
            for (std::size_t e = 0; e < deg; ++e) t[e] = std::tanh(clamp_llr(in[e]) / 2.0);
            std::vector<double> fwd(deg + 1, 1.0), bwd(deg + 1, 1.0);
            for (std::size_t e = 0; e < deg; ++e) fwd[e + 1] = fwd[e] * t[e];
            for (std::size_t e = deg; e > 0; --e) bwd[e - 1] = bwd[e] * t[e - 1];
            for (std::size_t e = 0; e < deg; ++e) {
                const double prod = std::clamp(fwd[e] * bwd[e + 1], -0.9999999999999999, 0.9999999999999999);
                out[e] = 2.0 * std::atanh(prod);
            }
        }

        // Bit update and posterior decision.
        std::vector<double> posterior(static_cast<std::size_t>(n));
        for (int b = 0; b < n; ++b) posterior[static_cast<std::size_t>(b)] = llrs[b];
        for (int c = 0; c < m; ++c) {
            const auto& sup = h.row_support[static_cast<std::size_t>(c)];
            for (std::size_t e = 0; e < sup.size(); ++e)
                posterior[static_cast<std::size_t>(sup[e])] += to_bit[static_cast<std::size_t>(c)][e];
        }
        for (int b = 0; b < n; ++b) hard[b] = posterior[static_cast<std::size_t>(b)] < 0.0 ? 1 : 0;

        if (cfg.early_stop && ldpc_checksum_ok(h, hard)) return hard;
        if (it + 1 == cfg.max_iterations) break;

        // Bit-to-check: a priori plus all other incoming check messages.
        for (int c = 0; c < m; ++c) {
            const auto& sup = h.row_support[static_cast<std::size_t>(c)];
            for (std::size_t e = 0; e < sup.size(); ++e)
                to_check[static_cast<std::size_t>(c)][e] =
                    posterior[static_cast<std::size_t>(sup[e])] - to_bit[static_cast<std::size_t>(c)][e];
        }
    }
    return hard;
}

} // namespace fdeq
