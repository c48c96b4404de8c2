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

#include "fdeq/channel.hpp"

#include "fdeq/errors.hpp"
#include "fdeq/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fdeq {

Eigen::VectorXd bpsk_modulate(const BinVector& x) {
    return 1.0 - 2.0 * x.cast<double>().array();
}

double noise_variance(double snr_db) {
    if (std::isinf(snr_db) && snr_db > 0) return 0.0;
    return std::pow(10.0, -snr_db / 10.0);
}

Eigen::VectorXd awgn_apply(const Eigen::VectorXd& s, double snr_db, std::uint64_t seed) {
    if (std::isnan(snr_db)) throw ConfigError("awgn_apply: snr_db must not be NaN");
    const double var = noise_variance(snr_db);
    if (var == 0.0) return s;
    const double sigma = std::sqrt(var);
    Rng rng(seed);
    Eigen::VectorXd y(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) y[i] = s[i] + sigma * rng.gaussian();
    return y;
}

Eigen::VectorXd llr_compute(const Eigen::VectorXd& y, double snr_db) {
    const double var = noise_variance(snr_db);
    if (var <= 0.0) throw ConfigError("llr_compute: needs sigma^2 > 0 (finite SNR)");
    return (2.0 / var) * y;
}

double quantize_snr(double snr_db, double step_db) {
    if (step_db <= 0.0) throw ConfigError("quantize_snr: step must be positive");
    return std::floor(snr_db / step_db + 0.5) * step_db;
}

std::vector<Frame> group_by_snr(const std::vector<ReceivedBlock>& blocks, double step_db) {
    if (blocks.empty()) throw EmptyInput("group_by_snr: no blocks");
    std::map<double, Frame> frames;
    for (const auto& b : blocks) {
        const double bin = quantize_snr(b.snr_db, step_db);
        Frame& f = frames[bin];
        f.snr_db = bin;
        if (b.truth.has_value())
            f.preamble.push_back(b);
        else
            f.payload.push_back(b);
    }
    std::vector<Frame> out;
    out.reserve(frames.size());
    for (auto& [bin, f] : frames) out.push_back(std::move(f));
    return out;
}

namespace {

std::string fmt9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

void write_blocks_csv(std::ostream& out, const std::vector<ReceivedBlock>& blocks) {
    if (blocks.empty()) throw EmptyInput("write_blocks_csv: no blocks");
    const Eigen::Index n = blocks.front().symbols.size();
    out << "block_id,snr_db";
    for (Eigen::Index i = 0; i < n; ++i) out << ",symbol_" << i;
    for (Eigen::Index i = 0; i < n; ++i) out << ",llr_" << i;
    out << ",truth_bits\n";
    for (const auto& b : blocks) {
        if (b.symbols.size() != n || b.llrs.size() != n)
            throw LengthMismatch("write_blocks_csv: inconsistent block lengths");
        out << b.block_id << ',' << fmt9(b.snr_db);
        for (Eigen::Index i = 0; i < n; ++i) out << ',' << fmt9(b.symbols[i]);
        for (Eigen::Index i = 0; i < n; ++i) out << ',' << fmt9(b.llrs[i]);
        out << ',' << (b.truth ? bits_to_string(*b.truth) : std::string{}) << '\n';
    }
}

void write_blocks_csv_file(const std::string& path, const std::vector<ReceivedBlock>& blocks) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    write_blocks_csv(out, blocks);
}

std::vector<ReceivedBlock> read_blocks_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("blocks csv: missing header");
    const auto header = split_csv_line(line);
    Eigen::Index n = 0;
    for (const auto& h : header)
        if (h.rfind("symbol_", 0) == 0) ++n;
    if (n == 0 || header.size() != static_cast<std::size_t>(3 + 2 * n))
        throw ConfigError("blocks csv: unexpected header layout");
    std::vector<ReceivedBlock> blocks;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != header.size()) throw ConfigError("blocks csv: bad field count");
        ReceivedBlock b;
        b.block_id = std::stoll(f[0]);
        b.snr_db = std::stod(f[1]);
        b.symbols.resize(n);
        b.llrs.resize(n);
        for (Eigen::Index i = 0; i < n; ++i) b.symbols[i] = std::stod(f[static_cast<std::size_t>(2 + i)]);
        for (Eigen::Index i = 0; i < n; ++i) b.llrs[i] = std::stod(f[static_cast<std::size_t>(2 + n + i)]);
        if (!f.back().empty()) b.truth = bits_from_string(f.back());
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::vector<ReceivedBlock> read_blocks_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open blocks csv: " + path);
    return read_blocks_csv(in);
}

} // namespace fdeq
