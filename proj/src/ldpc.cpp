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

#include "fdeq/ldpc.hpp"

#include "fdeq/errors.hpp"
#include "fdeq/gf2.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fdeq {

ParityCheckMatrix ParityCheckMatrix::from_rows(int m, int n, std::vector<std::vector<int>> rows) {
    if (m <= 0 || n <= 0) throw ConfigError("parity-check matrix: M and N must be positive");
    if (m >= n) throw ConfigError("parity-check matrix: M < N required (code must carry data)");
    if (static_cast<int>(rows.size()) != m) throw ConfigError("parity-check matrix: row count != M");
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        if (r.size() < 2) throw ConfigError("parity-check matrix: every check needs >= 2 bits");
        if (r.front() < 0 || r.back() >= n) throw ConfigError("parity-check matrix: column index out of range");
    }
    ParityCheckMatrix h;
    h.checks = m;
    h.bits = n;
    h.row_support = std::move(rows);
    return h;
}

ParityCheckMatrix ParityCheckMatrix::from_dense(const BinMatrix& hd) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(hd.rows()));
    for (Eigen::Index i = 0; i < hd.rows(); ++i)
        for (Eigen::Index j = 0; j < hd.cols(); ++j)
            if (hd(i, j)) rows[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
    return from_rows(static_cast<int>(hd.rows()), static_cast<int>(hd.cols()), std::move(rows));
}

ParityCheckMatrix ParityCheckMatrix::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("matrix file: missing header line");
    std::istringstream header(line);
    int m = 0, n = 0;
    if (!(header >> m >> n)) throw ConfigError("matrix file: header must be \"M N\"");
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ConfigError("matrix file: fewer rows than header M");
        std::istringstream ls(line);
        std::vector<int> cols;
        int c;
        while (ls >> c) cols.push_back(c);
        rows.push_back(std::move(cols));
    }
    return from_rows(m, n, std::move(rows));
}

ParityCheckMatrix ParityCheckMatrix::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open matrix file: " + path);
    return load(in);
}

void ParityCheckMatrix::save(std::ostream& out) const {
    out << checks << ' ' << bits << '\n';
    for (const auto& r : row_support) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << '\n';
    }
}

BinMatrix ParityCheckMatrix::dense() const {
    BinMatrix hd = BinMatrix::Zero(checks, bits);
    for (int i = 0; i < checks; ++i)
        for (int j : row_support[static_cast<std::size_t>(i)]) hd(i, j) = 1;
    return hd;
}

LdpcGenerator ldpc_generator_from_h(const ParityCheckMatrix& h) {
    BinMatrix r = h.dense();
    const std::vector<int> pivots = gf2_rref(r);
    const int m = h.checks;
    const int n = h.bits;
    if (static_cast<int>(pivots.size()) < m)
        throw RankDeficient("ldpc_generator_from_h: H has dependent rows");
    const int k = n - m;

    // Permuted order: non-pivot columns first (they carry data), pivot
    // columns last, so the reduced H reads [A | I_M].
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) perm.push_back(c);
    for (int c : pivots) perm.push_back(c);

    // A = RREF restricted to the data columns; G_perm = [I_K | A^T].
    BinMatrix g = BinMatrix::Zero(k, n);
    for (int j = 0; j < k; ++j) {
        g(j, perm[static_cast<std::size_t>(j)]) = 1;
        for (int i = 0; i < m; ++i)
            g(j, perm[static_cast<std::size_t>(k + i)]) = r(i, perm[static_cast<std::size_t>(j)]);
    }
    return LdpcGenerator{GeneratorMatrix{std::move(g)}, std::move(perm)};
}

BinVector ldpc_encode(const GeneratorMatrix& g, const BinVector& u) {
    if (u.size() != g.g.rows()) throw LengthMismatch("ldpc_encode: len(u) != K");
    return gf2_vec_mul(u, g.g);
}

bool ldpc_checksum_ok(const ParityCheckMatrix& h, const BinVector& x) {
    if (x.size() != h.bits) throw LengthMismatch("ldpc_checksum_ok: len(x) != N");
    for (const auto& row : h.row_support) {
        int parity = 0;
        for (int c : row) parity ^= x[c];
        if (parity) return false;
    }
    return true;
}

ParityCheckMatrix benchmark_ldpc_h() {
    return ParityCheckMatrix::from_rows(5, 7,
                                        {{0, 1, 2}, {0, 1, 3, 4}, {0, 1, 5}, {5, 6}, {1, 3, 5}});
}

} // namespace fdeq
