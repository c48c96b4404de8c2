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

#include "fdeq/code.hpp"

#include <cmath>

namespace fdeq {

LdpcCode LdpcCode::from_h(const ParityCheckMatrix& h) {
    LdpcGenerator gen = ldpc_generator_from_h(h);
    LdpcCode code;
    code.h = h;
    code.data_positions = gen.data_positions();
    code.column_permutation = std::move(gen.column_permutation);
    code.g = std::move(gen.g);
    return code;
}

int block_length(const Code& code) {
    return std::visit([](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, LdpcCode>)
            return c.n();
        else
            return c.block_length;
    }, code);
}

int data_length(const Code& code) {
    return std::visit([](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, LdpcCode>)
            return c.k();
        else
            return c.data_bits;
    }, code);
}

BinVector encode(const Code& code, const BinVector& u) {
    if (const auto* ldpc = std::get_if<LdpcCode>(&code)) return ldpc_encode(ldpc->g, u);
    return polar_encode(std::get<PolarCodeConfig>(code), u);
}

Qubo build_decoding_qubo(const Code& code, const Eigen::VectorXd& llrs, double w_s) {
    const double w = std::isnan(w_s) ? default_satisfier_weight(llrs) : w_s;
    if (const auto* ldpc = std::get_if<LdpcCode>(&code)) return build_ldpc_qubo(ldpc->h, llrs, w);
    return build_polar_qubo(std::get<PolarCodeConfig>(code), llrs, w);
}

LdpcCode benchmark_ldpc_code() { return LdpcCode::from_h(benchmark_ldpc_h()); }

PolarCodeConfig benchmark_polar_code() { return PolarCodeConfig::make(4, 2); }

} // namespace fdeq
