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

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fdeq {

/// One received code block. SNR is Es/N0 per BPSK symbol (Es = 1), in dB.
/// `truth` carries the transmitted data word for preamble blocks only.
struct ReceivedBlock {
    std::int64_t block_id = 0;
    double snr_db = 0.0;
    Eigen::VectorXd symbols;
    Eigen::VectorXd llrs;
    std::optional<BinVector> truth;
};

/// Blocks sharing one quantized SNR bin. Blocks carrying truth form the
/// preamble; temporal initialization requires a non-empty preamble.
struct Frame {
    double snr_db = 0.0;
    std::vector<ReceivedBlock> preamble;
    std::vector<ReceivedBlock> payload;
};

/// bit 0 -> +1.0, bit 1 -> -1.0.
Eigen::VectorXd bpsk_modulate(const BinVector& x);

/// Noise variance sigma^2 = 10^(-snr_db/10); 0 for the +inf sentinel.
double noise_variance(double snr_db);

/// y = s + n, n iid N(0, sigma^2), deterministic given seed. A +inf SNR is
/// the noise-disabled sentinel (returns s unchanged).
Eigen::VectorXd awgn_apply(const Eigen::VectorXd& s, double snr_db, std::uint64_t seed);

/// L_i = 2 y_i / sigma^2; positive favors bit 0. Requires sigma^2 > 0.
Eigen::VectorXd llr_compute(const Eigen::VectorXd& y, double snr_db);

/// Partition blocks into frames by SNR quantized with round-half-up to the
/// given step. Blocks with truth go to the preamble. Throws EmptyInput.
std::vector<Frame> group_by_snr(const std::vector<ReceivedBlock>& blocks, double step_db = 1.0);

double quantize_snr(double snr_db, double step_db);

/// CSV schema: block_id, snr_db, symbol_0.., llr_0.., truth_bits (optional,
/// empty when absent). Floats at 9 significant digits.
void write_blocks_csv(std::ostream& out, const std::vector<ReceivedBlock>& blocks);
void write_blocks_csv_file(const std::string& path, const std::vector<ReceivedBlock>& blocks);
std::vector<ReceivedBlock> read_blocks_csv(std::istream& in);
std::vector<ReceivedBlock> read_blocks_csv_file(const std::string& path);

} // namespace fdeq
