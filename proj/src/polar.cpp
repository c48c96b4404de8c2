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

#include "fdeq/polar.hpp"

#include "fdeq/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fdeq {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

PolarCodeConfig PolarCodeConfig::make(int n, int k) {
    if (!is_power_of_two(n)) throw ConfigError("polar: N must be a power of two");
    if (k < 1 || k > n) throw ConfigError("polar: K must be in [1, N]");
    PolarCodeConfig cfg;
    cfg.block_length = n;
    cfg.data_bits = k;
    cfg.reliability_order = polar_reliability_order(n);
    cfg.frozen.assign(cfg.reliability_order.begin(), cfg.reliability_order.begin() + (n - k));
    std::sort(cfg.frozen.begin(), cfg.frozen.end());
    return cfg;
}

bool PolarCodeConfig::is_frozen(int pos) const {
    return std::binary_search(frozen.begin(), frozen.end(), pos);
}

std::vector<int> PolarCodeConfig::data_positions() const {
    std::vector<int> pos;
    pos.reserve(static_cast<std::size_t>(data_bits));
    for (int i = 0; i < block_length; ++i)
        if (!is_frozen(i)) pos.push_back(i);
    return pos;
}

BinMatrix polar_generator(int depth, int max_depth) {
    if (depth < 1) throw ConfigError("polar_generator: depth must be >= 1");
    if (depth > max_depth) throw SizeLimit("polar_generator: depth exceeds configured limit");
    BinMatrix g2(2, 2);
    g2 << 1, 0, 1, 1;
    BinMatrix g = g2;
    for (int d = 1; d < depth; ++d) {
        const Eigen::Index m = g.rows();
        BinMatrix next = BinMatrix::Zero(2 * m, 2 * m);
        // Kronecker product G2 (x) G.
        next.topLeftCorner(m, m) = g;
        next.bottomLeftCorner(m, m) = g;
        next.bottomRightCorner(m, m) = g;
        g = std::move(next);
    }
    return g;
}

std::vector<double> polar_bhattacharyya(int n) {
    if (!is_power_of_two(n)) throw ConfigError("polar_bhattacharyya: N must be a power of two");
    std::vector<double> z{0.5};
    while (static_cast<int>(z.size()) < n) {
        std::vector<double> next(z.size() * 2);
        for (std::size_t i = 0; i < z.size(); ++i) {
            next[2 * i] = 2.0 * z[i] - z[i] * z[i];
            next[2 * i + 1] = z[i] * z[i];
        }
        z = std::move(next);
    }
    return z;
}

std::vector<int> polar_reliability_order(int n) {
    const std::vector<double> z = polar_bhattacharyya(n);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return z[static_cast<std::size_t>(a)] > z[static_cast<std::size_t>(b)];
    });
    return order;
}

BinVector polar_transform(BinVector e) {
    const int n = static_cast<int>(e.size());
    if (!is_power_of_two(n)) throw LengthMismatch("polar_transform: length must be a power of two");
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len / 2;
        for (int blk = 0; blk < n; blk += len)
            for (int j = 0; j < half; ++j) e[blk + j] ^= e[blk + half + j];
    }
    return e;
}

BinVector polar_input_vector(const PolarCodeConfig& cfg, const BinVector& u) {
    if (u.size() != cfg.data_bits) throw LengthMismatch("polar_encode: len(u) != K");
    BinVector e = BinVector::Zero(cfg.block_length);
    const std::vector<int> pos = cfg.data_positions();
    for (int j = 0; j < cfg.data_bits; ++j) e[pos[static_cast<std::size_t>(j)]] = u[j];
    return e;
}

BinVector polar_encode(const PolarCodeConfig& cfg, const BinVector& u) {
    return polar_transform(polar_input_vector(cfg, u));
}

} // namespace fdeq
