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

#include <algorithm>
#include <cmath>
#include <vector>

namespace fdeq {

namespace {

/// softplus(-t) = log(1 + e^{-t}), stable for large |t|.
double metric_penalty(double lambda, std::uint8_t u) {
    const double t = (1.0 - 2.0 * static_cast<double>(u)) * lambda;
    if (t > 0) return std::log1p(std::exp(-t));
    return -t + std::log1p(std::exp(t));
}

/// Exact boxplus in stable log form.
double boxplus(double a, double b) {
    const double sign = (a < 0) == (b < 0) ? 1.0 : -1.0;
    const double aa = std::abs(a);
    const double ab = std::abs(b);
    return sign * std::min(aa, ab) + std::log1p(std::exp(-(aa + ab))) -
           std::log1p(std::exp(-std::abs(aa - ab)));
}

/// Successive-cancellation LLR of leaf `target` given earlier leaf decisions
/// within this subtree. Recomputed from scratch per leaf; fine at N <= 32.
double leaf_llr(const std::vector<double>& llr, const std::vector<std::uint8_t>& decided,
                int target) {
    const int len = static_cast<int>(llr.size());
    if (len == 1) return llr[0];
    const int half = len / 2;
    if (target < half) {
        std::vector<double> left(static_cast<std::size_t>(half));
        for (int j = 0; j < half; ++j)
            left[static_cast<std::size_t>(j)] = boxplus(llr[static_cast<std::size_t>(j)],
                                                        llr[static_cast<std::size_t>(j + half)]);
        return leaf_llr(left, decided, target);
    }
    // Left subtree fully decided: re-encode its leaves to the codeword seen
    // at this node, then g-combine.
    BinVector left_leaves(half);
    for (int j = 0; j < half; ++j) left_leaves[j] = decided[static_cast<std::size_t>(j)];
    const BinVector a_hat = polar_transform(left_leaves);
    std::vector<double> right(static_cast<std::size_t>(half));
    std::vector<std::uint8_t> decided_right(decided.begin() + half, decided.end());
    for (int j = 0; j < half; ++j)
        right[static_cast<std::size_t>(j)] =
            llr[static_cast<std::size_t>(j + half)] +
            (1.0 - 2.0 * static_cast<double>(a_hat[j])) * llr[static_cast<std::size_t>(j)];
    return leaf_llr(right, decided_right, target - half);
}

struct Path {
    std::vector<std::uint8_t> leaves;
    double pm = 0.0;
};

bool path_less(const Path& a, const Path& b) {
    if (a.pm != b.pm) return a.pm < b.pm;
    return a.leaves < b.leaves;
}

} // namespace

BinVector scl_decode(const PolarCodeConfig& cfg, const Eigen::VectorXd& llrs,
                     const SclConfig& scl) {
    const int n = cfg.block_length;
    if (llrs.size() != n) throw LengthMismatch("scl_decode: len(llrs) != N");
    if (scl.list_size < 1) throw ConfigError("scl_decode: list size must be >= 1");

    std::vector<double> channel(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) channel[static_cast<std::size_t>(i)] = llrs[i];

    std::vector<Path> paths{Path{}};
    for (int leaf = 0; leaf < n; ++leaf) {
        std::vector<Path> next;
        next.reserve(paths.size() * 2);
        for (const Path& p : paths) {
            const double lam = leaf_llr(channel, p.leaves, leaf);
            if (cfg.is_frozen(leaf)) {
                Path q = p;
                q.leaves.push_back(0);
                q.pm += metric_penalty(lam, 0);
                next.push_back(std::move(q));
            } else {
                for (std::uint8_t u : {std::uint8_t{0}, std::uint8_t{1}}) {
                    Path q = p;
                    q.leaves.push_back(u);
                    q.pm += metric_penalty(lam, u);
                    next.push_back(std::move(q));
                }
            }
        }
        std::sort(next.begin(), next.end(), path_less);
        if (static_cast<int>(next.size()) > scl.list_size)
            next.resize(static_cast<std::size_t>(scl.list_size));
        paths = std::move(next);
    }

    const Path& best = *std::min_element(paths.begin(), paths.end(), path_less);
    BinVector data(cfg.data_bits);
    int j = 0;
    for (int i = 0; i < n; ++i)
        if (!cfg.is_frozen(i)) data[j++] = best.leaves[static_cast<std::size_t>(i)];
    return data;
}

} // namespace fdeq
