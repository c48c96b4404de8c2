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

#include "fdeq/code.hpp"
#include "fdeq/optimize.hpp"
#include "fdeq/qaoa.hpp"
#include "fdeq/resources.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace fdeq {

struct CodeConfig {
    std::string family = "polar"; // "polar" | "ldpc"
    int n = 4;
    int k = 2;
    std::string h_file; // LDPC only; empty = shipped benchmark H
};

struct BackendSpec {
    enum class Kind { Exact, Sampled, Noisy };
    Kind kind = Kind::Exact;
    int n_shots = 1024; // sampled
    double p1 = 0.0;    // noisy
    double p2 = 0.0;
};

enum class RunMode { Tuned, OneIteration };

struct ExperimentSpec {
    CodeConfig code;
    std::vector<double> snr_list_db{0.0, 2.0, 4.0, 6.0};
    int problems_per_snr = 500;
    int p_layers = 4;
    std::vector<std::string> init_strategies{"temporal", "random", "zero"};
    RunMode mode = RunMode::Tuned;
    BackendSpec backend;
    std::vector<std::string> baselines;
    std::uint64_t master_seed = 1;
    std::string output_dir = "out";

    double snr_step_db = 1.0;
    int top_m = 128;
    OptimizerConfig optimizer;
    int warm_start_iterations = 500;
    double w_s = std::numeric_limits<double>::quiet_NaN(); // NaN = sum|L|+1
    std::vector<double> noise_error_rates{1.0, 1e-1, 1e-2, 1e-3, 1e-4};
    int threads = 0; // 0 = hardware concurrency
};

struct ResultRow {
    std::int64_t block_id = 0;
    double snr_db = 0.0;
    std::string strategy;
    int p = 0;
    int iterations = 0;
    double energy = 0.0;
    double normalized_energy = 0.0;
    int bit_errors = 0;
    int codeword_bit_errors = 0;
    double wall_time_us = 0.0;
};

struct GroupAggregate {
    double snr_db = 0.0;
    std::string strategy;
    int problems = 0;
    double mean_energy = 0.0;
    double energy_variance = 0.0;
    double mean_normalized_energy = 0.0;
    double normalized_energy_variance = 0.0;
    double mean_bit_errors = 0.0;
    double mean_codeword_bit_errors = 0.0;
    double ber = 0.0;
};

struct RunRecord {
    std::vector<ResultRow> rows;
    std::vector<GroupAggregate> aggregates;
    int data_bits_per_block = 0;
};

/// Raised when decode jobs fail mid-run; carries the rows completed so far
/// (failed rows keep a "!failed" strategy marker) so callers can flush them.
struct RunError : std::runtime_error {
    RunError(const std::string& msg, RunRecord partial_record)
        : std::runtime_error(msg), partial(std::move(partial_record)) {}
    RunRecord partial;
};

/// Seed of block (snr_index, problem_index); problem 0 is the preamble.
std::uint64_t block_seed(std::uint64_t master_seed, int snr_index, int problem_index);

Code make_code(const CodeConfig& cfg);

/// Deterministic block generation: data bits, BPSK, AWGN and LLRs from
/// derived seeds. Block 0 of each SNR carries the truth (preamble); payload
/// blocks follow. Returned blocks are ordered by (snr_index, problem_index).
std::vector<ReceivedBlock> generate_blocks(const ExperimentSpec& spec, const Code& code,
                                           std::vector<BinVector>* truth_out = nullptr);

/// End-to-end run: generation, per-SNR warm start, decoding of every payload
/// block under each strategy and baseline, rows and per-(SNR, strategy)
/// aggregates in deterministic order.
RunRecord run_experiment(const ExperimentSpec& spec);

/// Decode blocks coming from a CSV file (grouped into frames first); blocks
/// carrying truth act as the preamble and are excluded from the rows.
RunRecord decode_blocks(const ExperimentSpec& spec, const std::vector<ReceivedBlock>& blocks);

struct NoiseSweepCell {
    double snr_db = 0.0;
    double error_rate = 0.0;
    int problems = 0;
    double mean_energy = 0.0;
    double stderr_energy = 0.0;
};

struct NoiseSweepRecord {
    std::vector<NoiseSweepCell> cells;
};

/// One-iteration temporal deployment under depolarizing noise (p1 = p2 =
/// rate): mean expected ansatz energy per (SNR, rate) cell.
NoiseSweepRecord noise_sweep(const ExperimentSpec& spec, const std::vector<double>& error_rates);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);
std::string format_g9(double v);

CsvTable results_table(const RunRecord& record);
CsvTable aggregates_table(const RunRecord& record);
CsvTable sweep_table(const NoiseSweepRecord& record);

/// Concatenate rows/aggregates (used to merge tuned and one-iteration runs).
RunRecord merge_records(const RunRecord& a, const RunRecord& b);

enum class FigureId { F6, F7, F8, F9, F11 };

/// Plot-ready pivots. F6/F7: per-(SNR, strategy) normalized energy and bit
/// errors. F8: temporal tuned vs one-iteration bit errors. Throws
/// MissingColumns when the record lacks what the figure needs.
CsvTable figure_table(const RunRecord& record, FigureId figure);
CsvTable figure_table(const NoiseSweepRecord& record, FigureId figure);

struct ResourceTableSpec {
    std::vector<int> subblocks{2, 4, 8, 16, 32, 64, 128};
    std::vector<double> budgets_us{50, 40, 30, 20, 10, 1};
    int block_length = 128;
    CodeFamily family = CodeFamily::Polar;
};

struct PpsEntry {
    double bandwidth_mhz = 0.0;
    int antennas = 0;
    double pps = 0.0;
    double qubits_per_problem = 0.0;
};

/// {subblock, n_v, budget_us, required_gd_ns} grid (the F9 layout).
CsvTable gate_duration_table(const ResourceTableSpec& spec);
/// {bandwidth_mhz, antennas, pps, qubits} at a fixed run-time budget.
CsvTable qubit_table(const std::vector<PpsEntry>& entries, double t_run_s);

struct ResourcesConfig {
    ResourceTableSpec table;
    double t_run_us = 50.0;
    std::vector<PpsEntry> pps_table;
};

struct FullConfig {
    ExperimentSpec experiment;
    ResourcesConfig resources;
    std::string input_blocks;  // decode subcommand input
    int noise_problems = 100;  // problems per SNR for the noise sweep
};

/// JSON config mirroring ExperimentSpec (see README). Unknown keys are
/// rejected. Throws ConfigError.
FullConfig load_config_json(const std::string& path);

} // namespace fdeq
