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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdeq/errors.hpp"
#include "fdeq/experiment.hpp"

#include <filesystem>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

using namespace fdeq;

namespace {

ExperimentSpec tiny_spec() {
    ExperimentSpec spec;
    spec.code = CodeConfig{"polar", 2, 1, ""};
    spec.snr_list_db = {2.0, 4.0};
    spec.problems_per_snr = 3;
    spec.p_layers = 2;
    spec.init_strategies = {"temporal", "zero"};
    spec.baselines = {"ml"};
    spec.master_seed = 11;
    spec.optimizer.max_iterations = 12;
    spec.warm_start_iterations = 40;
    return spec;
}

std::string table_to_string_without_last_column(const CsvTable& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i + 1 < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    return os.str();
}

} // namespace

TEST_CASE("counting: 1 SNR, 1 problem, ml-only gives 1 data row + 1 aggregate") {
    ExperimentSpec spec;
    spec.code = CodeConfig{"polar", 2, 1, ""};
    spec.snr_list_db = {3.0};
    spec.problems_per_snr = 1;
    spec.init_strategies = {};
    spec.baselines = {"ml"};
    const RunRecord record = run_experiment(spec);
    CHECK(record.rows.size() == 1);
    CHECK(record.aggregates.size() == 1);
    CHECK(record.rows[0].strategy == "ML");
}

TEST_CASE("determinism: identical spec gives identical scientific bytes") {
    const ExperimentSpec spec = tiny_spec();
    const RunRecord a = run_experiment(spec);
    const RunRecord b = run_experiment(spec);
    CHECK(table_to_string_without_last_column(results_table(a)) ==
          table_to_string_without_last_column(results_table(b)));
    std::ostringstream aggs_a, aggs_b;
    write_csv(aggs_a, aggregates_table(a));
    write_csv(aggs_b, aggregates_table(b));
    CHECK(aggs_a.str() == aggs_b.str());
}

TEST_CASE("conservation and preamble exclusion") {
    const ExperimentSpec spec = tiny_spec();
    const RunRecord record = run_experiment(spec);
    const std::size_t strategies = spec.init_strategies.size() + spec.baselines.size();
    CHECK(record.rows.size() ==
          strategies * spec.snr_list_db.size() * static_cast<std::size_t>(spec.problems_per_snr));
    // Preamble blocks have block_id 0 mod (problems_per_snr + 1).
    for (const auto& row : record.rows) CHECK(row.block_id % (spec.problems_per_snr + 1) != 0);
    // Per-strategy problem counts.
    std::map<std::string, int> counts;
    for (const auto& row : record.rows) ++counts[row.strategy];
    for (const auto& [strategy, count] : counts)
        CHECK(count == spec.problems_per_snr * static_cast<int>(spec.snr_list_db.size()));
}

TEST_CASE("figure tables: row counts and missing-column errors") {
    const ExperimentSpec spec = tiny_spec();
    const RunRecord tuned = run_experiment(spec);

    const CsvTable f7 = figure_table(tuned, FigureId::F7);
    CHECK(f7.rows.size() == spec.init_strategies.size() * spec.snr_list_db.size());

    ExperimentSpec one_it = spec;
    one_it.mode = RunMode::OneIteration;
    one_it.init_strategies = {"temporal"};
    one_it.baselines = {};
    const RunRecord merged = merge_records(tuned, run_experiment(one_it));
    const CsvTable f8 = figure_table(merged, FigureId::F8);
    CHECK(f8.rows.size() == 2 * spec.snr_list_db.size());

    CHECK_THROWS_AS(figure_table(RunRecord{}, FigureId::F6), MissingColumns);
    CHECK_THROWS_AS(figure_table(tuned, FigureId::F8), MissingColumns);
    CHECK_THROWS_AS(figure_table(tuned, FigureId::F9), MissingColumns);
    CHECK_THROWS_AS(figure_table(NoiseSweepRecord{}, FigureId::F11), MissingColumns);
}

TEST_CASE("decode_blocks consumes the encode CSV (round trip through frames)") {
    ExperimentSpec spec = tiny_spec();
    const Code code = make_code(spec.code);
    const auto blocks = generate_blocks(spec, code);
    const auto dir = std::filesystem::temp_directory_path() / "fdeq_harness_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "blocks.csv").string();
    write_blocks_csv_file(path, blocks);
    const auto back = read_blocks_csv_file(path);
    REQUIRE(back.size() == blocks.size());

    const RunRecord record = decode_blocks(spec, back);
    // Payload rows only; truth is unknown for payload blocks from CSV.
    CHECK(record.rows.size() ==
          (spec.init_strategies.size() + spec.baselines.size()) * spec.snr_list_db.size() *
              static_cast<std::size_t>(spec.problems_per_snr));
    for (const auto& row : record.rows) CHECK(row.bit_errors == -1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("noise sweep: rate-1 equals the maximally mixed mean; rate-0 the exact path") {
    ExperimentSpec spec = tiny_spec();
    spec.init_strategies = {"temporal"};
    spec.baselines = {};
    spec.problems_per_snr = 3;
    spec.snr_list_db = {2.0};

    const NoiseSweepRecord sweep = noise_sweep(spec, {1.0, 0.0});
    REQUIRE(sweep.cells.size() == 2);

    // Oracle for rate 1: the fully mixed state averages the cost table.
    const Code code = make_code(spec.code);
    std::vector<BinVector> truths;
    const auto blocks = generate_blocks(spec, code, &truths);
    // The harness shares one satisfier weight per frame: the smallest value
    // valid for all of the frame's blocks.
    double ws = 0.0;
    for (int j = 0; j <= spec.problems_per_snr; ++j)
        ws = std::max(ws, blocks[static_cast<std::size_t>(j)].llrs.cwiseAbs().sum());
    ws += 1.0;
    double mixed_mean = 0.0;
    for (int j = 1; j <= spec.problems_per_snr; ++j) {
        const Qubo q = build_decoding_qubo(code, blocks[static_cast<std::size_t>(j)].llrs, ws);
        const auto table = qubo_cost_table(q);
        double m = 0.0;
        for (double v : table) m += v;
        mixed_mean += m / static_cast<double>(table.size());
    }
    mixed_mean /= spec.problems_per_snr;
    CHECK(sweep.cells[0].error_rate == 1.0);
    CHECK(sweep.cells[0].mean_energy == doctest::Approx(mixed_mean).epsilon(1e-6));

    // Oracle for rate 0: identical one-iteration optimization on the exact
    // evaluator.
    Frame frame;
    frame.snr_db = 2.0;
    frame.preamble.push_back(blocks[0]);
    QuboBuilder builder = [&code, ws](const ReceivedBlock& b) {
        return build_decoding_qubo(code, b.llrs, ws);
    };
    const AnsatzParams warm = warm_start_from_preamble(
        frame, builder, spec.p_layers,
        OptimizerConfig{.max_iterations = spec.warm_start_iterations,
                        .convergence_tol = spec.optimizer.convergence_tol,
                        .initial_step = spec.optimizer.initial_step});
    double exact_mean = 0.0;
    for (int j = 1; j <= spec.problems_per_snr; ++j) {
        const Qubo q = build_decoding_qubo(code, blocks[static_cast<std::size_t>(j)].llrs, ws);
        OptimizerConfig cfg;
        cfg.max_iterations = 1;
        cfg.convergence_tol = spec.optimizer.convergence_tol;
        cfg.initial_step = spec.optimizer.initial_step;
        exact_mean += optimize_params(q, warm, cfg).objective;
    }
    exact_mean /= spec.problems_per_snr;
    CHECK(sweep.cells[1].error_rate == 0.0);
    CHECK(sweep.cells[1].mean_energy == doctest::Approx(exact_mean).epsilon(1e-8));
}

TEST_CASE("gate duration and qubit tables") {
    ResourceTableSpec rt;
    const CsvTable gates = gate_duration_table(rt);
    CHECK(gates.rows.size() == rt.subblocks.size() * rt.budgets_us.size());
    CHECK(gates.header == std::vector<std::string>{"subblock", "n_v", "budget_us",
                                                   "required_gd_ns"});
    const CsvTable qubits =
        qubit_table({PpsEntry{10.0, 32, 3.0e6, 20.0}, PpsEntry{100.0, 64, 6.1e7, 20.0}}, 50e-6);
    REQUIRE(qubits.rows.size() == 2);
    CHECK(qubits.rows[0][3] == "3000");
    CHECK(qubits.rows[1][3] == "61000");
}

TEST_CASE("config json: defaults, strictness, errors") {
    const auto dir = std::filesystem::temp_directory_path() / "fdeq_cfg_test";
    std::filesystem::create_directories(dir);
    const auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream out(dir / name);
        out << text;
        return (dir / name).string();
    };

    const std::string good = write("good.json", R"({
        "code": {"family": "polar", "n": 4, "k": 2},
        "snr_list_db": [0, 2],
        "problems_per_snr": 5,
        "p_layers": 3,
        "init_strategies": ["random"],
        "mode": "one-iteration",
        "backend": {"kind": "sampled", "n_shots": 256},
        "baselines": ["ml", "scl"],
        "master_seed": 99,
        "output_dir": "outdir",
        "noise": {"error_rates": [0.1, 0.01], "problems_per_snr": 7},
        "resources": {"subblocks": [8, 128], "budgets_us": [50],
                      "pps_table": [{"bandwidth_mhz": 10, "antennas": 32,
                                     "pps": 1e6, "qubits_per_problem": 20}]}
    })");
    const FullConfig cfg = load_config_json(good);
    CHECK(cfg.experiment.code.n == 4);
    CHECK(cfg.experiment.problems_per_snr == 5);
    CHECK(cfg.experiment.mode == RunMode::OneIteration);
    CHECK(cfg.experiment.backend.kind == BackendSpec::Kind::Sampled);
    CHECK(cfg.experiment.backend.n_shots == 256);
    CHECK(cfg.experiment.noise_error_rates == std::vector<double>{0.1, 0.01});
    CHECK(cfg.noise_problems == 7);
    CHECK(cfg.resources.table.subblocks == std::vector<int>{8, 128});
    CHECK(cfg.resources.pps_table.size() == 1);

    CHECK_THROWS_AS(load_config_json(write("bad_key.json", R"({"no_such_key": 1})")), ConfigError);
    CHECK_THROWS_AS(load_config_json(write("bad_mode.json", R"({"mode": "fast"})")), ConfigError);
    CHECK_THROWS_AS(load_config_json(write("bad_json.json", "{")), ConfigError);
    CHECK_THROWS_AS(load_config_json((dir / "missing.json").string()), ConfigError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("spec validation errors") {
    ExperimentSpec spec = tiny_spec();
    spec.init_strategies = {"bogus"};
    CHECK_THROWS_AS(run_experiment(spec), ConfigError);
    spec = tiny_spec();
    spec.baselines = {"bp"}; // polar code
    CHECK_THROWS_AS(run_experiment(spec), ConfigError);
    spec = tiny_spec();
    spec.code.family = "turbo";
    CHECK_THROWS_AS(run_experiment(spec), ConfigError);
}
