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

#include "fdeq/experiment.hpp"

#include "fdeq/decoders.hpp"
#include "fdeq/errors.hpp"
#include "fdeq/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace fdeq {

namespace {

using json = nlohmann::json;

void parallel_for(int n_tasks, int threads, const std::function<void(int)>& fn) {
    if (n_tasks <= 0) return;
    int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    t = std::max(1, std::min(t, n_tasks));
    if (t == 1) {
        for (int i = 0; i < n_tasks; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < n_tasks;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

bool is_qaoa_strategy(const std::string& s) {
    return s.rfind("temporal", 0) == 0 || s.rfind("random", 0) == 0 || s.rfind("zero", 0) == 0;
}

} // namespace

std::uint64_t block_seed(std::uint64_t master_seed, int snr_index, int problem_index) {
    return derive_seed(master_seed, static_cast<std::uint64_t>(snr_index),
                       static_cast<std::uint64_t>(problem_index));
}

Code make_code(const CodeConfig& cfg) {
    if (cfg.family == "polar") {
        if (!cfg.h_file.empty()) throw ConfigError("code: h_file applies to LDPC only");
        return PolarCodeConfig::make(cfg.n, cfg.k);
    }
    if (cfg.family == "ldpc") {
        const ParityCheckMatrix h =
            cfg.h_file.empty() ? benchmark_ldpc_h() : ParityCheckMatrix::load_file(cfg.h_file);
        LdpcCode code = LdpcCode::from_h(h);
        if (cfg.n != 0 && cfg.n != code.n())
            throw ConfigError("code: configured n does not match the H matrix");
        if (cfg.k != 0 && cfg.k != code.k())
            throw ConfigError("code: configured k does not match the H matrix");
        return code;
    }
    throw ConfigError("code: family must be \"polar\" or \"ldpc\"");
}

std::vector<ReceivedBlock> generate_blocks(const ExperimentSpec& spec, const Code& code,
                                           std::vector<BinVector>* truth_out) {
    if (spec.problems_per_snr < 1) throw ConfigError("problems_per_snr must be >= 1");
    if (spec.snr_list_db.empty()) throw ConfigError("snr_list_db must not be empty");
    const int k = data_length(code);
    const int per_snr = spec.problems_per_snr + 1; // preamble + payload
    std::vector<ReceivedBlock> blocks;
    blocks.reserve(static_cast<std::size_t>(per_snr) * spec.snr_list_db.size());
    if (truth_out) truth_out->clear();
    for (std::size_t s = 0; s < spec.snr_list_db.size(); ++s) {
        const double snr = spec.snr_list_db[s];
        for (int j = 0; j < per_snr; ++j) {
            const std::uint64_t base = block_seed(spec.master_seed, static_cast<int>(s), j);
            Rng data_rng(derive_seed(base, 1, 0));
            BinVector u(k);
            for (int b = 0; b < k; ++b) u[b] = static_cast<std::uint8_t>(data_rng.bit());
            const BinVector x = encode(code, u);
            ReceivedBlock blk;
            blk.block_id = static_cast<std::int64_t>(s) * per_snr + j;
            blk.snr_db = snr;
            blk.symbols = awgn_apply(bpsk_modulate(x), snr, derive_seed(base, 2, 0));
            blk.llrs = llr_compute(blk.symbols, snr);
            if (j == 0) blk.truth = u;
            if (truth_out) truth_out->push_back(u);
            blocks.push_back(std::move(blk));
        }
    }
    return blocks;
}

namespace {

struct DecodeContext {
    const ExperimentSpec* spec = nullptr;
    const Code* code = nullptr;
    int n = 0;
    int k = 0;
    const LdpcCode* ldpc = nullptr;       // set for LDPC codes
    const PolarCodeConfig* polar = nullptr; // set for Polar codes
};

ResultRow qaoa_row(const DecodeContext& ctx, const ReceivedBlock& block, const BinVector* truth,
                   const std::string& strategy, const AnsatzParams* warm, std::uint64_t base_seed,
                   double w_s) {
    const ExperimentSpec& spec = *ctx.spec;
    InitStrategy init{ZeroInit{}};
    if (strategy == "temporal") {
        if (warm == nullptr) throw NoPreamble("temporal strategy without warm-start parameters");
        init = TemporalInit{*warm};
    } else if (strategy == "random") {
        init = RandomInit{derive_seed(base_seed, 3, 0)};
    } else if (strategy != "zero") {
        throw ConfigError("unknown init strategy: " + strategy);
    }

    OptimizerConfig cfg = spec.optimizer;
    if (spec.mode == RunMode::OneIteration) cfg.max_iterations = 1;

    Extraction extraction{ExactExtraction{spec.top_m}};
    ObjectiveBackend objective{ExactBackend{}};
    std::optional<NoiseModel> noise;
    if (spec.backend.kind == BackendSpec::Kind::Sampled) {
        extraction = SampledExtraction{spec.backend.n_shots, derive_seed(base_seed, 4, 0)};
        objective = SampledBackend{spec.backend.n_shots, derive_seed(base_seed, 5, 0)};
    } else if (spec.backend.kind == BackendSpec::Kind::Noisy) {
        noise = NoiseModel{spec.backend.p1, spec.backend.p2};
    }

    const auto t0 = std::chrono::steady_clock::now();
    const DecodeResult dec =
        decode_block(block, *ctx.code, spec.p_layers, init, cfg, extraction, noise, w_s, objective);
    const auto t1 = std::chrono::steady_clock::now();

    ResultRow row;
    row.block_id = block.block_id;
    row.snr_db = block.snr_db;
    row.strategy = strategy + (spec.mode == RunMode::OneIteration ? "-1it" : "");
    row.p = spec.p_layers;
    row.iterations = dec.iterations_used;
    row.energy = dec.energy;
    row.normalized_energy = dec.normalized_energy;
    row.wall_time_us = std::chrono::duration<double, std::micro>(t1 - t0).count();
    if (truth) {
        row.bit_errors = hamming_distance(dec.data_bits, *truth);
        row.codeword_bit_errors = hamming_distance(dec.codeword_bits, encode(*ctx.code, *truth));
    } else {
        row.bit_errors = -1;
        row.codeword_bit_errors = -1;
    }
    return row;
}

ResultRow baseline_row(const DecodeContext& ctx, const ReceivedBlock& block, const BinVector* truth,
                       const std::string& which, double w_s) {
    const auto t0 = std::chrono::steady_clock::now();
    BinVector data, codeword;
    std::string label = which;
    if (which == "bp") {
        if (!ctx.ldpc) throw ConfigError("bp baseline requires an LDPC code");
        codeword = bp_decode(ctx.ldpc->h, block.llrs, BpConfig{});
        data.resize(ctx.k);
        for (int j = 0; j < ctx.k; ++j)
            data[j] = codeword[ctx.ldpc->data_positions[static_cast<std::size_t>(j)]];
        label = "BP";
    } else if (which == "scl") {
        if (!ctx.polar) throw ConfigError("scl baseline requires a Polar code");
        const int list = 1 << ctx.k;
        data = scl_decode(*ctx.polar, block.llrs, SclConfig{list});
        codeword = polar_encode(*ctx.polar, data);
        label = "SCL-" + std::to_string(list);
    } else if (which == "ml") {
        data = ml_decode(*ctx.code, block.llrs);
        codeword = encode(*ctx.code, data);
        label = "ML";
    } else {
        throw ConfigError("unknown baseline: " + which);
    }
    const auto t1 = std::chrono::steady_clock::now();

    ResultRow row;
    row.block_id = block.block_id;
    row.snr_db = block.snr_db;
    row.strategy = label;
    row.p = 0;
    row.iterations = 0;
    // Baseline energies are the distance term of the decoded codeword, which
    // equals the QUBO cost of the matching optimal-ancilla assignment.
    double energy = 0.0;
    for (int i = 0; i < ctx.n; ++i)
        if (codeword[i]) energy += block.llrs[i];
    row.energy = energy;
    const Qubo q = build_decoding_qubo(*ctx.code, block.llrs, w_s);
    if (q.n_vars <= 16) {
        const BruteForceResult bf = brute_force_extrema(q);
        const double span = bf.max_cost - bf.min_cost;
        row.normalized_energy = span > 0 ? (energy - bf.min_cost) / span : 0.0;
    } else {
        row.normalized_energy = std::numeric_limits<double>::quiet_NaN();
    }
    row.wall_time_us = std::chrono::duration<double, std::micro>(t1 - t0).count();
    if (truth) {
        row.bit_errors = hamming_distance(data, *truth);
        row.codeword_bit_errors = hamming_distance(codeword, encode(*ctx.code, *truth));
    } else {
        row.bit_errors = -1;
        row.codeword_bit_errors = -1;
    }
    return row;
}

void fill_aggregates(RunRecord& record, int data_bits_per_block) {
    record.data_bits_per_block = data_bits_per_block;
    struct Key {
        double snr;
        std::string strategy;
        bool operator<(const Key& o) const {
            if (snr != o.snr) return snr < o.snr;
            return strategy < o.strategy;
        }
    };
    // Group in first-appearance order (deterministic because rows are).
    std::vector<Key> order;
    std::map<Key, std::vector<const ResultRow*>> groups;
    for (const auto& row : record.rows) {
        Key key{row.snr_db, row.strategy};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(&row);
    }
    record.aggregates.clear();
    for (const Key& key : order) {
        const auto& rows = groups[key];
        GroupAggregate agg;
        agg.snr_db = key.snr;
        agg.strategy = key.strategy;
        agg.problems = static_cast<int>(rows.size());
        double se = 0, se2 = 0, sn = 0, sn2 = 0, sbe = 0, sce = 0;
        bool have_errors = true;
        for (const ResultRow* r : rows) {
            se += r->energy;
            se2 += r->energy * r->energy;
            sn += r->normalized_energy;
            sn2 += r->normalized_energy * r->normalized_energy;
            if (r->bit_errors < 0) have_errors = false;
            sbe += r->bit_errors;
            sce += r->codeword_bit_errors;
        }
        const double n = agg.problems;
        agg.mean_energy = se / n;
        agg.energy_variance = se2 / n - agg.mean_energy * agg.mean_energy;
        agg.mean_normalized_energy = sn / n;
        agg.normalized_energy_variance = sn2 / n - agg.mean_normalized_energy * agg.mean_normalized_energy;
        if (have_errors) {
            agg.mean_bit_errors = sbe / n;
            agg.mean_codeword_bit_errors = sce / n;
            agg.ber = sbe / (n * data_bits_per_block);
        } else {
            agg.mean_bit_errors = std::numeric_limits<double>::quiet_NaN();
            agg.mean_codeword_bit_errors = std::numeric_limits<double>::quiet_NaN();
            agg.ber = std::numeric_limits<double>::quiet_NaN();
        }
        record.aggregates.push_back(std::move(agg));
    }
}

DecodeContext make_context(const ExperimentSpec& spec, const Code& code) {
    DecodeContext ctx;
    ctx.spec = &spec;
    ctx.code = &code;
    ctx.n = block_length(code);
    ctx.k = data_length(code);
    ctx.ldpc = std::get_if<LdpcCode>(&code);
    ctx.polar = std::get_if<PolarCodeConfig>(&code);
    return ctx;
}

void validate_strategies(const ExperimentSpec& spec, const DecodeContext& ctx) {
    for (const auto& s : spec.init_strategies)
        if (s != "temporal" && s != "random" && s != "zero")
            throw ConfigError("init_strategies: unknown strategy " + s);
    for (const auto& b : spec.baselines) {
        if (b != "bp" && b != "scl" && b != "ml") throw ConfigError("baselines: unknown " + b);
        if (b == "bp" && !ctx.ldpc) throw ConfigError("bp baseline requires an LDPC code");
        if (b == "scl" && !ctx.polar) throw ConfigError("scl baseline requires a Polar code");
    }
    if (spec.p_layers < 1) throw ConfigError("p_layers must be >= 1");
}

/// Shared decode core over frames whose payload order is fixed by caller.
struct FrameJobs {
    std::vector<const ReceivedBlock*> payload;
    std::vector<const BinVector*> truth; // nullptr when unknown
    std::vector<std::uint64_t> base_seeds;
    const AnsatzParams* warm = nullptr;
    double w_s = std::numeric_limits<double>::quiet_NaN();
};

/// Frame-level satisfier weight: the smallest value valid for every block of
/// the frame. Sharing one weight keeps the QUBO off-diagonals identical
/// across the frame's problems, which is what temporal transfer relies on.
double frame_weight(const ExperimentSpec& spec, const std::vector<const ReceivedBlock*>& blocks) {
    if (!std::isnan(spec.w_s)) return spec.w_s;
    double max_sum = 0.0;
    for (const ReceivedBlock* b : blocks) max_sum = std::max(max_sum, b->llrs.cwiseAbs().sum());
    return max_sum + 1.0;
}

RunRecord decode_frames(const ExperimentSpec& spec, const DecodeContext& ctx,
                        const std::vector<FrameJobs>& frames) {
    const int n_strat = static_cast<int>(spec.init_strategies.size());
    const int n_base = static_cast<int>(spec.baselines.size());
    const int per_block = n_strat + n_base;

    struct Task {
        const FrameJobs* frame;
        std::size_t block_idx;
        int which; // < n_strat: QAOA strategy; else baseline
    };
    std::vector<Task> tasks;
    for (const auto& f : frames)
        for (std::size_t b = 0; b < f.payload.size(); ++b)
            for (int w = 0; w < per_block; ++w) tasks.push_back({&f, b, w});

    RunRecord record;
    record.rows.resize(tasks.size());
    std::atomic<bool> failed{false};
    std::string first_failure;
    std::mutex failure_mutex;

    parallel_for(static_cast<int>(tasks.size()), spec.threads, [&](int ti) {
        const Task& t = tasks[static_cast<std::size_t>(ti)];
        const ReceivedBlock& block = *t.frame->payload[t.block_idx];
        const BinVector* truth = t.frame->truth[t.block_idx];
        try {
            if (t.which < n_strat) {
                record.rows[static_cast<std::size_t>(ti)] =
                    qaoa_row(ctx, block, truth, spec.init_strategies[static_cast<std::size_t>(t.which)],
                             t.frame->warm, t.frame->base_seeds[t.block_idx], t.frame->w_s);
            } else {
                record.rows[static_cast<std::size_t>(ti)] = baseline_row(
                    ctx, block, truth, spec.baselines[static_cast<std::size_t>(t.which - n_strat)],
                    t.frame->w_s);
            }
        } catch (const std::exception& e) {
            ResultRow row;
            row.block_id = block.block_id;
            row.snr_db = block.snr_db;
            row.strategy =
                (t.which < n_strat ? spec.init_strategies[static_cast<std::size_t>(t.which)]
                                   : spec.baselines[static_cast<std::size_t>(t.which - n_strat)]) +
                "!failed";
            row.energy = std::numeric_limits<double>::quiet_NaN();
            row.normalized_energy = std::numeric_limits<double>::quiet_NaN();
            row.bit_errors = -1;
            row.codeword_bit_errors = -1;
            record.rows[static_cast<std::size_t>(ti)] = std::move(row);
            failed = true;
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (first_failure.empty()) first_failure = e.what();
        }
    });

    fill_aggregates(record, ctx.k);
    if (failed) throw RunError("decode failed: " + first_failure, std::move(record));
    return record;
}

} // namespace

RunRecord run_experiment(const ExperimentSpec& spec) {
    const Code code = make_code(spec.code);
    const DecodeContext ctx = make_context(spec, code);
    validate_strategies(spec, ctx);
    if (spec.backend.kind == BackendSpec::Kind::Noisy) {
        Eigen::VectorXd probe = Eigen::VectorXd::Zero(ctx.n);
        if (build_decoding_qubo(code, probe, spec.w_s).n_vars > kDensityQubitCap)
            throw SizeLimit("noisy backend requires the QUBO to fit the density cap");
    }

    std::vector<BinVector> truths;
    const std::vector<ReceivedBlock> blocks = generate_blocks(spec, code, &truths);
    const int per_snr = spec.problems_per_snr + 1;

    const bool want_temporal =
        std::find(spec.init_strategies.begin(), spec.init_strategies.end(), "temporal") !=
        spec.init_strategies.end();

    std::vector<FrameJobs> frames(spec.snr_list_db.size());
    for (std::size_t s = 0; s < spec.snr_list_db.size(); ++s) {
        FrameJobs& f = frames[s];
        std::vector<const ReceivedBlock*> all;
        for (int j = 0; j < per_snr; ++j) {
            const std::size_t idx = s * static_cast<std::size_t>(per_snr) + static_cast<std::size_t>(j);
            all.push_back(&blocks[idx]);
            if (j == 0) continue;
            f.payload.push_back(&blocks[idx]);
            f.truth.push_back(&truths[idx]);
            f.base_seeds.push_back(block_seed(spec.master_seed, static_cast<int>(s), j));
        }
        f.w_s = frame_weight(spec, all);
    }

    // Offline warm start, one frame per SNR.
    std::vector<AnsatzParams> warm(spec.snr_list_db.size());
    if (want_temporal) {
        parallel_for(static_cast<int>(spec.snr_list_db.size()), spec.threads, [&](int s) {
            Frame frame;
            frame.snr_db = spec.snr_list_db[static_cast<std::size_t>(s)];
            frame.preamble.push_back(blocks[static_cast<std::size_t>(s) * per_snr]);
            const double w_s = frames[static_cast<std::size_t>(s)].w_s;
            QuboBuilder builder = [&code, w_s](const ReceivedBlock& b) {
                return build_decoding_qubo(code, b.llrs, w_s);
            };
            warm[static_cast<std::size_t>(s)] = warm_start_from_preamble(
                frame, builder, spec.p_layers,
                OptimizerConfig{.max_iterations = spec.warm_start_iterations,
                                .convergence_tol = spec.optimizer.convergence_tol,
                                .initial_step = spec.optimizer.initial_step});
        });
        for (std::size_t s = 0; s < frames.size(); ++s) frames[s].warm = &warm[s];
    }
    return decode_frames(spec, ctx, frames);
}

RunRecord decode_blocks(const ExperimentSpec& spec, const std::vector<ReceivedBlock>& blocks) {
    const Code code = make_code(spec.code);
    const DecodeContext ctx = make_context(spec, code);
    validate_strategies(spec, ctx);

    const std::vector<Frame> grouped = group_by_snr(blocks, spec.snr_step_db);
    const bool want_temporal =
        std::find(spec.init_strategies.begin(), spec.init_strategies.end(), "temporal") !=
        spec.init_strategies.end();

    std::vector<FrameJobs> frames(grouped.size());
    for (std::size_t g = 0; g < grouped.size(); ++g) {
        FrameJobs& f = frames[g];
        std::vector<const ReceivedBlock*> all;
        for (const auto& b : grouped[g].preamble) all.push_back(&b);
        for (std::size_t j = 0; j < grouped[g].payload.size(); ++j) {
            const ReceivedBlock& b = grouped[g].payload[j];
            all.push_back(&b);
            f.payload.push_back(&b);
            f.truth.push_back(b.truth ? &*b.truth : nullptr);
            f.base_seeds.push_back(block_seed(spec.master_seed, static_cast<int>(g),
                                              static_cast<int>(j) + 1));
        }
        f.w_s = frame_weight(spec, all);
    }

    std::vector<AnsatzParams> warm(grouped.size());
    if (want_temporal) {
        parallel_for(static_cast<int>(grouped.size()), spec.threads, [&](int g) {
            const double w_s = frames[static_cast<std::size_t>(g)].w_s;
            QuboBuilder builder = [&code, w_s](const ReceivedBlock& b) {
                return build_decoding_qubo(code, b.llrs, w_s);
            };
            warm[static_cast<std::size_t>(g)] = warm_start_from_preamble(
                grouped[static_cast<std::size_t>(g)], builder, spec.p_layers,
                OptimizerConfig{.max_iterations = spec.warm_start_iterations,
                                .convergence_tol = spec.optimizer.convergence_tol,
                                .initial_step = spec.optimizer.initial_step});
        });
        for (std::size_t g = 0; g < frames.size(); ++g) frames[g].warm = &warm[g];
    }
    return decode_frames(spec, ctx, frames);
}

NoiseSweepRecord noise_sweep(const ExperimentSpec& spec, const std::vector<double>& error_rates) {
    if (error_rates.empty()) throw EmptyInput("noise_sweep: no error rates");
    const Code code = make_code(spec.code);
    const DecodeContext ctx = make_context(spec, code);
    {
        Eigen::VectorXd probe = Eigen::VectorXd::Zero(ctx.n);
        if (build_decoding_qubo(code, probe, spec.w_s).n_vars > kDensityQubitCap)
            throw SizeLimit("noise_sweep: QUBO exceeds the density-matrix cap");
    }

    std::vector<BinVector> truths;
    const std::vector<ReceivedBlock> blocks = generate_blocks(spec, code, &truths);
    const int per_snr = spec.problems_per_snr + 1;

    std::vector<double> frame_ws(spec.snr_list_db.size());
    for (std::size_t s = 0; s < spec.snr_list_db.size(); ++s) {
        std::vector<const ReceivedBlock*> all;
        for (int j = 0; j < per_snr; ++j)
            all.push_back(&blocks[s * static_cast<std::size_t>(per_snr) + static_cast<std::size_t>(j)]);
        frame_ws[s] = frame_weight(spec, all);
    }

    std::vector<AnsatzParams> warm(spec.snr_list_db.size());
    parallel_for(static_cast<int>(spec.snr_list_db.size()), spec.threads, [&](int s) {
        Frame frame;
        frame.snr_db = spec.snr_list_db[static_cast<std::size_t>(s)];
        frame.preamble.push_back(blocks[static_cast<std::size_t>(s) * per_snr]);
        const double w_s = frame_ws[static_cast<std::size_t>(s)];
        QuboBuilder builder = [&code, w_s](const ReceivedBlock& b) {
            return build_decoding_qubo(code, b.llrs, w_s);
        };
        warm[static_cast<std::size_t>(s)] = warm_start_from_preamble(
            frame, builder, spec.p_layers,
            OptimizerConfig{.max_iterations = spec.warm_start_iterations,
                            .convergence_tol = spec.optimizer.convergence_tol,
                            .initial_step = spec.optimizer.initial_step});
    });

    struct Cell {
        std::vector<double> energies;
    };
    const std::size_t n_snr = spec.snr_list_db.size();
    std::vector<Cell> cells(n_snr * error_rates.size());
    for (auto& c : cells) c.energies.resize(static_cast<std::size_t>(spec.problems_per_snr));

    struct Task {
        std::size_t snr_idx, rate_idx;
        int problem; // 1-based payload index
    };
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < n_snr; ++s)
        for (std::size_t r = 0; r < error_rates.size(); ++r)
            for (int j = 1; j <= spec.problems_per_snr; ++j) tasks.push_back({s, r, j});

    parallel_for(static_cast<int>(tasks.size()), spec.threads, [&](int ti) {
        const Task& t = tasks[static_cast<std::size_t>(ti)];
        const ReceivedBlock& block =
            blocks[t.snr_idx * static_cast<std::size_t>(per_snr) + static_cast<std::size_t>(t.problem)];
        const double rate = error_rates[t.rate_idx];
        const NoiseModel noise{rate, rate};
        const Qubo q = build_decoding_qubo(code, block.llrs, frame_ws[t.snr_idx]);
        const IsingModel ising = qubo_to_ising(q);
        const std::vector<double> table = qubo_cost_table(q);
        // One-iteration deployment: a single improvement step from the warm
        // start; the best objective seen is the reported expected energy.
        OptimizerConfig cfg;
        cfg.max_iterations = 1;
        cfg.convergence_tol = spec.optimizer.convergence_tol;
        cfg.initial_step = spec.optimizer.initial_step;
        auto objective = [&](const AnsatzParams& p) {
            const Circuit c = build_ansatz_circuit(ising, p);
            const Eigen::VectorXd probs = probabilities(run_density(c, noise));
            double e = 0.0;
            for (Eigen::Index x = 0; x < probs.size(); ++x)
                e += probs[x] * table[static_cast<std::size_t>(x)];
            return e;
        };
        const OptimizeOutcome r = minimize_over_angles(objective, warm[t.snr_idx], cfg, 1.0);
        cells[t.snr_idx * error_rates.size() + t.rate_idx]
            .energies[static_cast<std::size_t>(t.problem - 1)] = r.objective;
    });

    NoiseSweepRecord record;
    for (std::size_t s = 0; s < n_snr; ++s) {
        for (std::size_t r = 0; r < error_rates.size(); ++r) {
            const auto& e = cells[s * error_rates.size() + r].energies;
            NoiseSweepCell cell;
            cell.snr_db = spec.snr_list_db[s];
            cell.error_rate = error_rates[r];
            cell.problems = static_cast<int>(e.size());
            double mean = 0.0;
            for (double v : e) mean += v;
            mean /= static_cast<double>(e.size());
            double var = 0.0;
            for (double v : e) var += (v - mean) * (v - mean);
            var = e.size() > 1 ? var / static_cast<double>(e.size() - 1) : 0.0;
            cell.mean_energy = mean;
            cell.stderr_energy = std::sqrt(var / static_cast<double>(e.size()));
            record.cells.push_back(cell);
        }
    }
    return record;
}

std::string format_g9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_csv(std::ostream& out, const CsvTable& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const CsvTable& table) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    write_csv(out, table);
}

CsvTable results_table(const RunRecord& record) {
    CsvTable t;
    t.header = {"block_id",          "snr_db",     "init_strategy",
                "p",                 "iterations_used", "energy",
                "normalized_energy", "bit_errors", "codeword_bit_errors",
                "wall_time_us"};
    for (const auto& r : record.rows) {
        t.rows.push_back({std::to_string(r.block_id), format_g9(r.snr_db), r.strategy,
                          std::to_string(r.p), std::to_string(r.iterations), format_g9(r.energy),
                          format_g9(r.normalized_energy),
                          r.bit_errors < 0 ? std::string{} : std::to_string(r.bit_errors),
                          r.codeword_bit_errors < 0 ? std::string{}
                                                    : std::to_string(r.codeword_bit_errors),
                          format_g9(r.wall_time_us)});
    }
    return t;
}

CsvTable aggregates_table(const RunRecord& record) {
    CsvTable t;
    t.header = {"snr_db",        "strategy",        "problems",
                "mean_energy",   "energy_variance", "mean_normalized_energy",
                "normalized_energy_variance", "mean_bit_errors", "mean_codeword_bit_errors",
                "ber"};
    for (const auto& a : record.aggregates) {
        t.rows.push_back({format_g9(a.snr_db), a.strategy, std::to_string(a.problems),
                          format_g9(a.mean_energy), format_g9(a.energy_variance),
                          format_g9(a.mean_normalized_energy),
                          format_g9(a.normalized_energy_variance), format_g9(a.mean_bit_errors),
                          format_g9(a.mean_codeword_bit_errors), format_g9(a.ber)});
    }
    return t;
}

CsvTable sweep_table(const NoiseSweepRecord& record) {
    CsvTable t;
    t.header = {"snr_db", "error_rate", "problems", "mean_energy", "stderr_energy"};
    for (const auto& c : record.cells) {
        t.rows.push_back({format_g9(c.snr_db), format_g9(c.error_rate), std::to_string(c.problems),
                          format_g9(c.mean_energy), format_g9(c.stderr_energy)});
    }
    return t;
}

RunRecord merge_records(const RunRecord& a, const RunRecord& b) {
    if (a.data_bits_per_block != b.data_bits_per_block && !a.rows.empty() && !b.rows.empty())
        throw MissingColumns("merge_records: incompatible records");
    RunRecord out;
    out.rows = a.rows;
    out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
    fill_aggregates(out, a.rows.empty() ? b.data_bits_per_block : a.data_bits_per_block);
    return out;
}

CsvTable figure_table(const RunRecord& record, FigureId figure) {
    if (figure == FigureId::F9)
        throw MissingColumns("figure_table: F9 comes from the resources table");
    if (figure == FigureId::F11)
        throw MissingColumns("figure_table: F11 comes from a noise-sweep record");
    if (record.aggregates.empty()) throw MissingColumns("figure_table: empty record");
    CsvTable t;
    if (figure == FigureId::F6 || figure == FigureId::F7) {
        t.header = {"snr_db", "strategy", "mean_normalized_energy", "normalized_energy_variance",
                    "mean_bit_errors"};
        for (const auto& a : record.aggregates) {
            if (!is_qaoa_strategy(a.strategy)) continue;
            t.rows.push_back({format_g9(a.snr_db), a.strategy,
                              format_g9(a.mean_normalized_energy),
                              format_g9(a.normalized_energy_variance),
                              format_g9(a.mean_bit_errors)});
        }
        if (t.rows.empty()) throw MissingColumns("figure_table: no QAOA strategy rows");
        return t;
    }
    // F8: temporal tuned vs one-iteration.
    bool have_tuned = false, have_oneit = false;
    t.header = {"snr_db", "strategy", "mean_bit_errors"};
    for (const auto& a : record.aggregates) {
        if (a.strategy.rfind("temporal", 0) != 0) continue;
        have_tuned |= a.strategy == "temporal";
        have_oneit |= a.strategy == "temporal-1it";
        t.rows.push_back({format_g9(a.snr_db), a.strategy, format_g9(a.mean_bit_errors)});
    }
    if (!have_tuned || !have_oneit)
        throw MissingColumns("figure_table: F8 needs temporal and temporal-1it rows");
    return t;
}

CsvTable figure_table(const NoiseSweepRecord& record, FigureId figure) {
    if (figure != FigureId::F11) throw MissingColumns("figure_table: sweep records render F11 only");
    if (record.cells.empty()) throw MissingColumns("figure_table: empty sweep record");
    return sweep_table(record);
}

CsvTable gate_duration_table(const ResourceTableSpec& spec) {
    CsvTable t;
    t.header = {"subblock", "n_v", "budget_us", "required_gd_ns"};
    for (int sub : spec.subblocks) {
        const std::int64_t n_v = qubo_vars_for_subblock(spec.family, sub);
        for (double budget_us : spec.budgets_us) {
            ResourceParams p;
            p.block_length = spec.block_length;
            p.n_sub = std::max(1, spec.block_length / sub);
            p.t_run_budget = budget_us * 1e-6;
            p.family = spec.family;
            const double gd = required_gate_duration(p);
            t.rows.push_back({std::to_string(sub), std::to_string(n_v), format_g9(budget_us),
                              format_g9(gd * 1e9)});
        }
    }
    return t;
}

CsvTable qubit_table(const std::vector<PpsEntry>& entries, double t_run_s) {
    CsvTable t;
    t.header = {"bandwidth_mhz", "antennas", "pps", "qubits"};
    for (const auto& e : entries) {
        ResourceParams p;
        p.n_pps = e.pps;
        p.qubits_per_problem = e.qubits_per_problem;
        p.t_run_budget = t_run_s;
        t.rows.push_back({format_g9(e.bandwidth_mhz), std::to_string(e.antennas), format_g9(e.pps),
                          std::to_string(qubit_count(p))});
    }
    return t;
}

namespace {

void check_keys(const json& j, const std::vector<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError("config: unknown key \"" + key + "\" in " + where);
    }
}

} // namespace

FullConfig load_config_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    try {
        check_keys(j, {"code", "snr_list_db", "problems_per_snr", "p_layers", "init_strategies",
                       "mode", "backend", "baselines", "master_seed", "output_dir", "snr_step_db",
                       "top_m", "optimizer", "warm_start_iterations", "w_s", "noise", "threads",
                       "resources", "input_blocks"},
                   "top level");
        FullConfig cfg;
        ExperimentSpec& s = cfg.experiment;
        if (j.contains("code")) {
            const json& c = j["code"];
            check_keys(c, {"family", "n", "k", "h_file"}, "code");
            s.code.family = c.value("family", s.code.family);
            s.code.n = c.value("n", s.code.family == "ldpc" ? 0 : s.code.n);
            s.code.k = c.value("k", s.code.family == "ldpc" ? 0 : s.code.k);
            s.code.h_file = c.value("h_file", std::string{});
        }
        if (j.contains("snr_list_db")) s.snr_list_db = j["snr_list_db"].get<std::vector<double>>();
        s.problems_per_snr = j.value("problems_per_snr", s.problems_per_snr);
        s.p_layers = j.value("p_layers", s.p_layers);
        if (j.contains("init_strategies"))
            s.init_strategies = j["init_strategies"].get<std::vector<std::string>>();
        if (j.contains("mode")) {
            const std::string m = j["mode"].get<std::string>();
            if (m == "tuned")
                s.mode = RunMode::Tuned;
            else if (m == "one-iteration")
                s.mode = RunMode::OneIteration;
            else
                throw ConfigError("config: mode must be \"tuned\" or \"one-iteration\"");
        }
        if (j.contains("backend")) {
            const json& b = j["backend"];
            check_keys(b, {"kind", "n_shots", "p1", "p2"}, "backend");
            const std::string kind = b.value("kind", std::string{"exact"});
            if (kind == "exact")
                s.backend.kind = BackendSpec::Kind::Exact;
            else if (kind == "sampled")
                s.backend.kind = BackendSpec::Kind::Sampled;
            else if (kind == "noisy")
                s.backend.kind = BackendSpec::Kind::Noisy;
            else
                throw ConfigError("config: backend.kind must be exact|sampled|noisy");
            s.backend.n_shots = b.value("n_shots", s.backend.n_shots);
            s.backend.p1 = b.value("p1", s.backend.p1);
            s.backend.p2 = b.value("p2", s.backend.p2);
        }
        if (j.contains("baselines")) s.baselines = j["baselines"].get<std::vector<std::string>>();
        s.master_seed = j.value("master_seed", s.master_seed);
        s.output_dir = j.value("output_dir", s.output_dir);
        s.snr_step_db = j.value("snr_step_db", s.snr_step_db);
        s.top_m = j.value("top_m", s.top_m);
        if (j.contains("optimizer")) {
            const json& o = j["optimizer"];
            check_keys(o, {"max_iterations", "convergence_tol", "initial_step"}, "optimizer");
            s.optimizer.max_iterations = o.value("max_iterations", s.optimizer.max_iterations);
            s.optimizer.convergence_tol = o.value("convergence_tol", s.optimizer.convergence_tol);
            s.optimizer.initial_step = o.value("initial_step", s.optimizer.initial_step);
        }
        s.warm_start_iterations = j.value("warm_start_iterations", s.warm_start_iterations);
        if (j.contains("w_s")) s.w_s = j["w_s"].get<double>();
        if (j.contains("noise")) {
            const json& noise = j["noise"];
            check_keys(noise, {"error_rates", "problems_per_snr"}, "noise");
            if (noise.contains("error_rates"))
                s.noise_error_rates = noise["error_rates"].get<std::vector<double>>();
            cfg.noise_problems = noise.value("problems_per_snr", cfg.noise_problems);
        }
        s.threads = j.value("threads", s.threads);
        cfg.input_blocks = j.value("input_blocks", std::string{});
        if (j.contains("resources")) {
            const json& r = j["resources"];
            check_keys(r, {"subblocks", "budgets_us", "block_length", "family", "t_run_us",
                           "pps_table"},
                       "resources");
            if (r.contains("subblocks"))
                cfg.resources.table.subblocks = r["subblocks"].get<std::vector<int>>();
            if (r.contains("budgets_us"))
                cfg.resources.table.budgets_us = r["budgets_us"].get<std::vector<double>>();
            cfg.resources.table.block_length =
                r.value("block_length", cfg.resources.table.block_length);
            if (r.contains("family")) {
                const std::string fam = r["family"].get<std::string>();
                if (fam == "polar")
                    cfg.resources.table.family = CodeFamily::Polar;
                else if (fam == "ldpc")
                    cfg.resources.table.family = CodeFamily::Ldpc;
                else
                    throw ConfigError("config: resources.family must be polar|ldpc");
            }
            cfg.resources.t_run_us = r.value("t_run_us", cfg.resources.t_run_us);
            if (r.contains("pps_table")) {
                for (const json& e : r["pps_table"]) {
                    check_keys(e, {"bandwidth_mhz", "antennas", "pps", "qubits_per_problem"},
                               "pps_table entry");
                    PpsEntry entry;
                    entry.bandwidth_mhz = e.value("bandwidth_mhz", 0.0);
                    entry.antennas = e.value("antennas", 0);
                    entry.pps = e.value("pps", 0.0);
                    entry.qubits_per_problem = e.value("qubits_per_problem", 0.0);
                    cfg.resources.pps_table.push_back(entry);
                }
            }
        }
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

} // namespace fdeq
