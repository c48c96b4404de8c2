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
#include "fdeq/polar.hpp"
#include "fdeq/qubo.hpp"

#include <variant>

namespace fdeq {

/// LDPC code with its systematic generator resolved once.
struct LdpcCode {
    ParityCheckMatrix h;
    GeneratorMatrix g;
    std::vector<int> column_permutation;
    std::vector<int> data_positions;

    static LdpcCode from_h(const ParityCheckMatrix& h);
    int n() const { return h.bits; }
    int k() const { return g.k(); }
};

using Code = std::variant<LdpcCode, PolarCodeConfig>;

int block_length(const Code& code);
int data_length(const Code& code);
BinVector encode(const Code& code, const BinVector& u);

/// Decoding QUBO for either family; w_s = NaN picks the default weight
/// sum|L| + 1.
Qubo build_decoding_qubo(const Code& code, const Eigen::VectorXd& llrs,
                         double w_s = std::numeric_limits<double>::quiet_NaN());

/// The two shipped benchmark codes: the 13-variable LDPC code (N=7, K=2) and
/// the Polar N=4, K=2 code (12 nominal QUBO variables).
LdpcCode benchmark_ldpc_code();
PolarCodeConfig benchmark_polar_code();

} // namespace fdeq
