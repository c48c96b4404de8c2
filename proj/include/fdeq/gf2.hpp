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

/// Matrix product over GF(2).
BinMatrix gf2_mul(const BinMatrix& a, const BinMatrix& b);

/// Row vector times matrix over GF(2): (1xK) * (KxN) -> (1xN) as a vector.
BinVector gf2_vec_mul(const BinVector& u, const BinMatrix& m);

/// In-place reduction to reduced row echelon form with lowest-index pivots.
/// Returns the pivot column of each pivot row, in row order.
std::vector<int> gf2_rref(BinMatrix& m);

int gf2_rank(BinMatrix m);

} // namespace fdeq
