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

namespace fdeq {

MlResult ml_decode_full(const Code& code, const Eigen::VectorXd& llrs, int k_cap) {
    const int k = data_length(code);
    const int n = block_length(code);
    if (llrs.size() != n) throw LengthMismatch("ml_decode: len(llrs) != N");
    if (k > k_cap) throw SizeLimit("ml_decode: K exceeds cap");

    MlResult res;
    const std::uint64_t total = std::uint64_t{1} << k;
    // Enumerate data words in lexicographic order (bit 0 most significant)
    // so the first strict minimum is the smallest tied word.
    for (std::uint64_t m = 0; m < total; ++m) {
        BinVector u(k);
        for (int j = 0; j < k; ++j) u[j] = static_cast<std::uint8_t>((m >> (k - 1 - j)) & 1);
        const BinVector x = encode(code, u);
        double score = 0.0;
        for (int i = 0; i < n; ++i)
            if (x[i]) score += llrs[i];
        ++res.candidates;
        if (m == 0 || score < res.score) {
            res.score = score;
            res.data = std::move(u);
        }
    }
    return res;
}

BinVector ml_decode(const Code& code, const Eigen::VectorXd& llrs, int k_cap) {
    return ml_decode_full(code, llrs, k_cap).data;
}

} // namespace fdeq
