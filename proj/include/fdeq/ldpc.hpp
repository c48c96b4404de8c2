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

#include <iosfwd>
#include <string>
#include <vector>

namespace fdeq {

/// Sparse binary parity-check matrix. Rows are checks, columns are codeword
/// bits; every row must have at least two ones and M < N.
struct ParityCheckMatrix {
    int checks = 0; // M
    int bits = 0;   // N
    std::vector<std::vector<int>> row_support; // sorted column indices per row

    static ParityCheckMatrix from_rows(int m, int n, std::vector<std::vector<int>> rows);
    static ParityCheckMatrix from_dense(const BinMatrix& h);

    /// Text format: first line "M N", then M lines of 0-based column indices.
    static ParityCheckMatrix load(std::istream& in);
    static ParityCheckMatrix load_file(const std::string& path);
    void save(std::ostream& out) const;

    BinMatrix dense() const;
    int row_degree(int r) const { return static_cast<int>(row_support[r].size()); }
};

struct GeneratorMatrix {
    BinMatrix g; // K x N
    int k() const { return static_cast<int>(g.rows()); }
    int n() const { return static_cast<int>(g.cols()); }
};

/// Systematic generator derived from H, together with the column permutation
/// that produced the [A | I] form. column_permutation[j] is the original
/// column sitting at permuted position j; the first K of them carry the data
/// bits (x[column_permutation[j]] == u[j]).
struct LdpcGenerator {
    GeneratorMatrix g; // in original column order
    std::vector<int> column_permutation;
    std::vector<int> data_positions() const {
        return {column_permutation.begin(), column_permutation.begin() + g.k()};
    }
};

/// Throws RankDeficient when H has dependent rows (no column permutation
/// yields [A | I_{N-K}]).
LdpcGenerator ldpc_generator_from_h(const ParityCheckMatrix& h);

/// x = uG over GF(2). Throws LengthMismatch when len(u) != K.
BinVector ldpc_encode(const GeneratorMatrix& g, const BinVector& u);

/// True when H x^T = 0 over GF(2).
bool ldpc_checksum_ok(const ParityCheckMatrix& h, const BinVector& x);

/// The repository's fixed benchmark code: N=7, M=5, K=2, chosen so the
/// decoding QUBO has 13 variables (7 codeword bits + 6 check ancillas).
ParityCheckMatrix benchmark_ldpc_h();

} // namespace fdeq
