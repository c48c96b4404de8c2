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

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <string>

namespace fdeq {

/// Binary (GF(2)) vector/matrix storage. Entries are 0 or 1.
using BinVector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;
using BinMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

inline BinVector bits(std::initializer_list<int> v) {
    BinVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (int b : v) out[i++] = static_cast<std::uint8_t>(b & 1);
    return out;
}

inline std::string bits_to_string(const BinVector& v) {
    std::string s;
    s.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) s.push_back(v[i] ? '1' : '0');
    return s;
}

inline BinVector bits_from_string(const std::string& s) {
    BinVector v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) v[static_cast<Eigen::Index>(i)] = s[i] == '1' ? 1 : 0;
    return v;
}

/// Lexicographic comparison with element 0 most significant.
inline bool bits_less(const BinVector& a, const BinVector& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline int hamming_distance(const BinVector& a, const BinVector& b) {
    int d = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// Bits of a basis-state index; bit i of the index is element i (qubit 0 is
/// the least-significant index bit).
inline BinVector index_to_bits(std::uint64_t index, int n) {
    BinVector v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>((index >> i) & 1);
    return v;
}

inline std::uint64_t bits_to_index(const BinVector& v) {
    std::uint64_t idx = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i]) idx |= std::uint64_t{1} << i;
    return idx;
}

} // namespace fdeq
