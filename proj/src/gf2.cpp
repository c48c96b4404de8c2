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

#include "fdeq/gf2.hpp"

#include "fdeq/errors.hpp"

namespace fdeq {

BinMatrix gf2_mul(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("gf2_mul: inner dimensions differ");
    Eigen::MatrixXi prod = a.cast<int>() * b.cast<int>();
    return prod.unaryExpr([](int x) { return static_cast<std::uint8_t>(x & 1); });
}

BinVector gf2_vec_mul(const BinVector& u, const BinMatrix& m) {
    if (u.size() != m.rows()) throw DimensionMismatch("gf2_vec_mul: length mismatch");
    Eigen::VectorXi prod = m.cast<int>().transpose() * u.cast<int>();
    return prod.unaryExpr([](int x) { return static_cast<std::uint8_t>(x & 1); });
}

std::vector<int> gf2_rref(BinMatrix& m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<int> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        m.row(r).swap(m.row(pivot));
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i != r && m(i, c)) {
                for (Eigen::Index j = c; j < cols; ++j) m(i, j) ^= m(r, j);
            }
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int gf2_rank(BinMatrix m) { return static_cast<int>(gf2_rref(m).size()); }

} // namespace fdeq
