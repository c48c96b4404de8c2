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

#include <vector>

namespace fdeq {

/// Polar code of block length N = 2^d with K data bits. Frozen positions are
/// the N-K least reliable input channels under the Bhattacharyya ordering;
/// data bits occupy the remaining positions in increasing index order.
struct PolarCodeConfig {
    int block_length = 0;               // N, power of two
    int data_bits = 0;                  // K
    std::vector<int> frozen;            // sorted, size N-K
    std::vector<int> reliability_order; // least -> most reliable

    static PolarCodeConfig make(int n, int k);

    bool is_frozen(int pos) const;
    /// Non-frozen input positions in increasing order; data bit j goes to
    /// data_positions()[j].
    std::vector<int> data_positions() const;
};

/// d-fold Kronecker power of [[1,0],[1,1]]. Throws SizeLimit beyond max_depth.
BinMatrix polar_generator(int depth, int max_depth = 12);

/// Bhattacharyya parameters of the N synthesized channels,
/// z_root = 0.5, z_{2i} = 2 z_i - z_i^2, z_{2i+1} = z_i^2.
std::vector<double> polar_bhattacharyya(int n);

/// Input positions sorted least reliable first (largest z; ties by lower
/// index first).
std::vector<int> polar_reliability_order(int n);

/// In-place butterfly transform x = e G_N evaluated as the bottom-up tree,
/// each node mapping [L | R] to [L xor R, R].
BinVector polar_transform(BinVector e);

/// Scatter data bits into the non-frozen positions of e (frozen = 0).
BinVector polar_input_vector(const PolarCodeConfig& cfg, const BinVector& u);

/// Full encode: e construction followed by the tree transform.
BinVector polar_encode(const PolarCodeConfig& cfg, const BinVector& u);

} // namespace fdeq
