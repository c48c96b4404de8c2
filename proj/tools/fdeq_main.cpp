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

#include "fdeq/errors.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct CliArgs {
    std::string config_path;
    std::string out_dir;
    std::string in_blocks;
    std::string dump_qubo;
    std::string dump_circuit;
};

fs::path ensure_out_dir(const fdeq::FullConfig& cfg, const CliArgs& args) {
    const fs::path dir = args.out_dir.empty() ? fs::path(cfg.experiment.output_dir)
                                              : fs::path(args.out_dir);
    fs::create_directories(dir);
    return dir;
}

void write_run_outputs(const fs::path& dir, const fdeq::RunRecord& record) {
    fdeq::write_csv_file((dir / "results.csv").string(), fdeq::results_table(record));
    fdeq::write_csv_file((dir / "aggregates.csv").string(), fdeq::aggregates_table(record));
}

void try_write_figures(const fs::path& dir, const fdeq::RunRecord& record,
                       const std::string& family) {
    const auto fig = family == "ldpc" ? fdeq::FigureId::F6 : fdeq::FigureId::F7;
    const char* name = family == "ldpc" ? "figure_f6.csv" : "figure_f7.csv";
    try {
        fdeq::write_csv_file((dir / name).string(), fdeq::figure_table(record, fig));
    } catch (const fdeq::MissingColumns&) {
    }
    try {
        fdeq::write_csv_file((dir / "figure_f8.csv").string(),
                             fdeq::figure_table(record, fdeq::FigureId::F8));
    } catch (const fdeq::MissingColumns&) {
    }
}

int cmd_encode(const fdeq::FullConfig& cfg, const CliArgs& args) {
    const fs::path dir = ensure_out_dir(cfg, args);
    const fdeq::Code code = fdeq::make_code(cfg.experiment.code);
    const auto blocks = fdeq::generate_blocks(cfg.experiment, code);
    fdeq::write_blocks_csv_file((dir / "blocks.csv").string(), blocks);
    std::cout << "wrote " << (dir / "blocks.csv").string() << " (" << blocks.size()
              << " blocks)\n";
    return kExitOk;
}

int cmd_decode(const fdeq::FullConfig& cfg, const CliArgs& args) {
    const fs::path dir = ensure_out_dir(cfg, args);
    const std::string input = !args.in_blocks.empty() ? args.in_blocks : cfg.input_blocks;
    if (input.empty())
        throw fdeq::ConfigError("decode: provide --in or config key \"input_blocks\"");
    const auto blocks = fdeq::read_blocks_csv_file(input);
    if (blocks.empty()) throw fdeq::ConfigError("decode: no blocks in " + input);

    if (!args.dump_qubo.empty() || !args.dump_circuit.empty()) {
        const fdeq::Code code = fdeq::make_code(cfg.experiment.code);
        const fdeq::Qubo q =
            fdeq::build_decoding_qubo(code, blocks.front().llrs, cfg.experiment.w_s);
        if (!args.dump_qubo.empty()) fdeq::save_qubo_file(args.dump_qubo, q);
        if (!args.dump_circuit.empty()) {
            const auto params = fdeq::linear_ramp_params(cfg.experiment.p_layers);
            std::ofstream out(args.dump_circuit);
            if (!out) throw fdeq::ConfigError("cannot open " + args.dump_circuit);
            fdeq::dump_circuit(out, fdeq::build_ansatz_circuit(fdeq::qubo_to_ising(q), params));
        }
    }

    const fdeq::RunRecord record = fdeq::decode_blocks(cfg.experiment, blocks);
    write_run_outputs(dir, record);
    std::cout << "wrote " << (dir / "results.csv").string() << " (" << record.rows.size()
              << " rows)\n";
    return kExitOk;
}

int cmd_bench(const fdeq::FullConfig& cfg, const CliArgs& args) {
    const fs::path dir = ensure_out_dir(cfg, args);
    const fdeq::RunRecord record = fdeq::run_experiment(cfg.experiment);
    write_run_outputs(dir, record);
    try_write_figures(dir, record, cfg.experiment.code.family);
    std::cout << "wrote " << (dir / "results.csv").string() << " (" << record.rows.size()
              << " rows)\n";
    return kExitOk;
}

int cmd_noise_sweep(fdeq::FullConfig cfg, const CliArgs& args) {
    const fs::path dir = ensure_out_dir(cfg, args);
    cfg.experiment.problems_per_snr = cfg.noise_problems;
    const fdeq::NoiseSweepRecord record =
        fdeq::noise_sweep(cfg.experiment, cfg.experiment.noise_error_rates);
    fdeq::write_csv_file((dir / "sweep.csv").string(), fdeq::sweep_table(record));
    fdeq::write_csv_file((dir / "figure_f11.csv").string(),
                         fdeq::figure_table(record, fdeq::FigureId::F11));
    std::cout << "wrote " << (dir / "sweep.csv").string() << " (" << record.cells.size()
              << " cells)\n";
    return kExitOk;
}

int cmd_resources(const fdeq::FullConfig& cfg, const CliArgs& args) {
    const fs::path dir = ensure_out_dir(cfg, args);
    const fdeq::CsvTable gates = fdeq::gate_duration_table(cfg.resources.table);
    fdeq::write_csv_file((dir / "gate_duration.csv").string(), gates);
    fdeq::write_csv_file((dir / "figure_f9.csv").string(), gates);
    if (!cfg.resources.pps_table.empty()) {
        fdeq::write_csv_file(
            (dir / "qubits.csv").string(),
            fdeq::qubit_table(cfg.resources.pps_table, cfg.resources.t_run_us * 1e-6));
    }
    std::cout << "wrote " << (dir / "gate_duration.csv").string() << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fdeq: QAOA-based LDPC/Polar decoding workbench"};
    app.require_subcommand(1);

    CliArgs args;
    std::string mode;
    for (const char* name : {"encode", "decode", "bench", "noise-sweep", "resources"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", args.config_path, "JSON config file")->required();
        sub->add_option("--out", args.out_dir, "output directory (default: config output_dir)");
        if (std::string(name) == "decode") {
            sub->add_option("--in", args.in_blocks, "input blocks CSV");
            sub->add_option("--dump-qubo", args.dump_qubo, "write the first block's QUBO");
            sub->add_option("--dump-circuit", args.dump_circuit,
                            "write the first block's ansatz gate list");
        }
        sub->callback([&mode, name] { mode = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        const fdeq::FullConfig cfg = fdeq::load_config_json(args.config_path);
        if (mode == "encode") return cmd_encode(cfg, args);
        if (mode == "decode") return cmd_decode(cfg, args);
        if (mode == "bench") return cmd_bench(cfg, args);
        if (mode == "noise-sweep") return cmd_noise_sweep(cfg, args);
        if (mode == "resources") return cmd_resources(cfg, args);
        std::cerr << "error: no subcommand\n";
        return kExitConfig;
    } catch (const fdeq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const fdeq::RunError& e) {
        // Flush whatever completed, plus a failure marker.
        try {
            const fdeq::FullConfig cfg = fdeq::load_config_json(args.config_path);
            const fs::path dir = ensure_out_dir(cfg, args);
            write_run_outputs(dir, e.partial);
            std::ofstream marker(dir / "FAILED");
            marker << e.what() << '\n';
        } catch (...) {
        }
        std::cerr << "runtime error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
