// Copyright 2026 The qsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: `qsim run` simulates one circuit and prints the
// resulting state (or a sampled measurement), `qsim bench` times backends
// against each other over a range of qubit counts.
//
// Exit codes: 0 success, 2 usage error (unknown circuit/backend, bad flags),
// 3 simulation refused by a memory guard (rerun with --force to override).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsim/bench.hpp"
#include "qsim/circuit_library.hpp"
#include "qsim/circuit_text.hpp"
#include "qsim/errors.hpp"
#include "qsim/simulator.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunArgs {
    std::string circuit;
    std::string circuit_file;
    std::size_t qubits = 0;
    std::string backend;
    std::string output = "text";
    std::string oracle;
    bool do_collapse = false;
    std::uint64_t seed = 0;
    bool force = false;
    double threshold = 1e-9;
};

struct BenchArgs {
    std::vector<std::string> circuits;
    std::string qubit_range;
    std::vector<std::string> backends;
    std::size_t warmup = 40;
    std::size_t samples = 11;
    std::uint64_t seed = 0;
    std::string oracle;
    std::string format = "table";
};

std::pair<std::size_t, std::size_t> parse_qubit_range(const std::string& text) {
    std::size_t from = 0, to = 0;
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            from = to = std::stoul(text);
        } else {
            from = std::stoul(text.substr(0, colon));
            to = std::stoul(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw qsim::ArgumentError("cannot parse qubit range '" + text +
                                  "' (expected N or FROM:TO)");
    }
    return {from, to};
}

qsim::GeneratedCircuit load_circuit(const RunArgs& args) {
    if (!args.circuit_file.empty()) {
        std::ifstream in(args.circuit_file);
        if (!in) {
            throw qsim::ArgumentError("cannot open circuit file '" + args.circuit_file + "'");
        }
        std::stringstream text;
        text << in.rdbuf();
        return {qsim::circuit_from_text(text.str(), args.qubits), {}};
    }
    return qsim::make_named_circuit(args.circuit, args.qubits, args.oracle);
}

int run_command(const RunArgs& args) {
    const qsim::GeneratedCircuit gen = load_circuit(args);

    qsim::SimulatorOptions options;
    if (args.force) {
        options.qubit_guard = args.qubits;
    }
    const auto sim = qsim::make_simulator(args.backend, options);

    if (args.do_collapse) {
        const qsim::CollapsedState outcome =
            sim->simulate_and_collapse(gen.circuit, gen.registry, args.seed);
        if (args.output == "json") {
            std::cout << qsim::collapsed_to_json(outcome, args.seed) << "\n";
        } else {
            std::cout << outcome.bitstring() << "\n";
        }
        return 0;
    }

    const qsim::StateVector state = sim->simulate_full_state(gen.circuit, gen.registry);
    if (args.output == "json") {
        std::cout << qsim::state_to_json(state) << "\n";
    } else {
        std::cout << qsim::format_state(state, args.threshold) << "\n";
    }
    return 0;
}

int bench_command(const BenchArgs& args) {
    qsim::BenchConfig config;
    config.circuits = args.circuits;
    std::tie(config.qubits_from, config.qubits_to) = parse_qubit_range(args.qubit_range);
    config.backends = args.backends;
    config.warmup_iters = args.warmup;
    config.sample_iters = args.samples;
    config.seed = args.seed;
    config.oracle_spec = args.oracle;

    const auto records = qsim::run_bench(config, &std::cerr);

    qsim::ReportFormat format = qsim::ReportFormat::Table;
    if (args.format == "csv") {
        format = qsim::ReportFormat::Csv;
    } else if (args.format == "json") {
        format = qsim::ReportFormat::Json;
    }
    std::cout << qsim::report(records, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsim: quantum circuit simulator with interchangeable backends"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Simulate a circuit and print the result");
    auto* circuit_opt =
        run->add_option("--circuit", run_args.circuit,
                        "Circuit generator: bell, entangle, deutsch-jozsa, qft");
    auto* file_opt = run->add_option("--circuit-file", run_args.circuit_file,
                                     "Load a circuit from the line-oriented text format");
    circuit_opt->excludes(file_opt);
    run->add_option("--qubits", run_args.qubits, "Number of qubits")->required();
    run->add_option("--backend", run_args.backend, "Backend: unitary, unitary-parallel, fsv")
        ->required();
    run->add_option("--output", run_args.output, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_flag("--collapse", run_args.do_collapse,
                  "Sample one measurement outcome instead of printing the state");
    run->add_option("--seed", run_args.seed, "Collapse RNG seed");
    run->add_option("--oracle", run_args.oracle,
                    "Deutsch-Jozsa oracle: constant0, constant1, balanced-bit:<k>, "
                    "balanced-mask:<hex>");
    run->add_flag("--force", run_args.force, "Override the backend memory guard");
    run->add_option("--threshold", run_args.threshold,
                    "Hide amplitudes at or below this magnitude in text output");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Time backends against each other");
    bench->add_option("--circuit", bench_args.circuits, "Circuit generator (repeatable)")
        ->required();
    bench->add_option("--qubits", bench_args.qubit_range, "Qubit count or range FROM:TO")
        ->required();
    bench->add_option("--backend", bench_args.backends,
                      "Backend id (repeatable; first one is the speedup baseline)")
        ->required();
    bench->add_option("--warmup", bench_args.warmup, "Untimed warm-up iterations");
    bench->add_option("--samples", bench_args.samples, "Timed iterations per combination");
    bench->add_option("--seed", bench_args.seed, "Seed recorded with the run");
    bench->add_option("--oracle", bench_args.oracle, "Deutsch-Jozsa oracle");
    bench->add_option("--format", bench_args.format, "Report format")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (run_args.circuit.empty() && run_args.circuit_file.empty()) {
                std::cerr << "error: one of --circuit or --circuit-file is required\n";
                return kExitUsage;
            }
            return run_command(run_args);
        }
        return bench_command(bench_args);
    } catch (const qsim::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "(use --force to run anyway)\n";
        return kExitResource;
    } catch (const qsim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
