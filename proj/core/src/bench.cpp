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

#include "qsim/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "qsim/circuit_library.hpp"
#include "qsim/errors.hpp"
#include "qsim/simulator.hpp"

namespace qsim {

namespace {

constexpr double kCrossCheckTol = 1e-9;

double elapsed_ns(const std::chrono::steady_clock::time_point& t0,
                  const std::chrono::steady_clock::time_point& t1) {
    return static_cast<double>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* warnings) {
    if (config.circuits.empty() || config.backends.empty()) {
        throw ArgumentError("bench: need at least one circuit and one backend");
    }
    if (config.qubits_from < 1 || config.qubits_from > config.qubits_to) {
        throw ArgumentError("bench: empty qubit range");
    }
    if (config.sample_iters < 1) {
        throw ArgumentError("bench: sample_iters must be at least 1");
    }

    std::vector<std::unique_ptr<Simulator>> sims;
    for (const std::string& id : config.backends) {
        sims.push_back(make_simulator(id));
    }

    std::vector<BenchRecord> records;
    for (const std::string& circuit_name : config.circuits) {
        for (std::size_t q = config.qubits_from; q <= config.qubits_to; ++q) {
            const GeneratedCircuit gen =
                make_named_circuit(circuit_name, q, config.oracle_spec);

            // Agreement check across all runnable backends before any timing.
            bool have_reference = false;
            StateVector reference;
            std::vector<bool> runnable(sims.size(), false);
            for (std::size_t b = 0; b < sims.size(); ++b) {
                if (q > sims[b]->qubit_guard()) {
                    if (warnings) {
                        *warnings << "warning: skipping " << circuit_name << "/" << q
                                  << " qubits on " << config.backends[b]
                                  << " (guard " << sims[b]->qubit_guard() << ")\n";
                    }
                    continue;
                }
                runnable[b] = true;
                StateVector out = sims[b]->simulate_full_state(gen.circuit, gen.registry);
                if (!have_reference) {
                    reference = std::move(out);
                    have_reference = true;
                } else if (max_entry_diff(reference.amplitudes, out.amplitudes) >
                           kCrossCheckTol) {
                    throw ValidationError("bench: backends '" + config.backends[0] +
                                          "' and '" + config.backends[b] +
                                          "' disagree on " + circuit_name + "/" +
                                          std::to_string(q) + " qubits");
                }
            }

            double baseline_mean = 0.0;
            for (std::size_t b = 0; b < sims.size(); ++b) {
                if (!runnable[b]) {
                    continue;
                }
                for (std::size_t i = 0; i < config.warmup_iters; ++i) {
                    sims[b]->simulate_full_state(gen.circuit, gen.registry);
                }
                std::vector<double> samples(config.sample_iters);
                for (double& sample : samples) {
                    const auto t0 = std::chrono::steady_clock::now();
                    sims[b]->simulate_full_state(gen.circuit, gen.registry);
                    const auto t1 = std::chrono::steady_clock::now();
                    sample = elapsed_ns(t0, t1);
                }
                double mean = 0.0;
                for (double sample : samples) {
                    mean += sample;
                }
                mean /= static_cast<double>(samples.size());
                double variance = 0.0;
                for (double sample : samples) {
                    variance += (sample - mean) * (sample - mean);
                }
                const double stddev =
                    samples.size() > 1
                        ? std::sqrt(variance / static_cast<double>(samples.size() - 1))
                        : 0.0;

                if (baseline_mean == 0.0) {
                    baseline_mean = mean;
                }
                records.push_back({circuit_name, q, config.backends[b], mean, stddev,
                                   baseline_mean / mean});
            }
        }
    }
    return records;
}

std::string report(const std::vector<BenchRecord>& records, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out = "circuit,qubits,backend,mean_ns,stddev_ns,speedup\n";
        char buf[128];
        for (const BenchRecord& r : records) {
            std::snprintf(buf, sizeof buf, "%s,%zu,%s,%.0f,%.0f,%.3f\n",
                          r.circuit.c_str(), r.qubits, r.backend.c_str(), r.mean_ns,
                          r.stddev_ns, r.speedup);
            out += buf;
        }
        return out;
    }
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const BenchRecord& r : records) {
            arr.push_back({{"circuit", r.circuit},
                           {"qubits", r.qubits},
                           {"backend", r.backend},
                           {"mean_ns", r.mean_ns},
                           {"stddev_ns", r.stddev_ns},
                           {"speedup", r.speedup}});
        }
        return arr.dump(2);
    }

    std::size_t circuit_w = 7, backend_w = 7;
    for (const BenchRecord& r : records) {
        circuit_w = std::max(circuit_w, r.circuit.size());
        backend_w = std::max(backend_w, r.backend.size());
    }
    char buf[192];
    std::snprintf(buf, sizeof buf, "%-*s %6s %-*s %15s %12s %8s\n",
                  static_cast<int>(circuit_w), "circuit", "qubits",
                  static_cast<int>(backend_w), "backend", "mean_ns", "stddev_ns",
                  "speedup");
    std::string out = buf;
    for (const BenchRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%-*s %6zu %-*s %15.0f %12.0f %8.3f\n",
                      static_cast<int>(circuit_w), r.circuit.c_str(), r.qubits,
                      static_cast<int>(backend_w), r.backend.c_str(), r.mean_ns,
                      r.stddev_ns, r.speedup);
        out += buf;
    }
    return out;
}

std::vector<BenchRecord> records_from_json(const std::string& json_text) {
    const auto parsed = nlohmann::json::parse(json_text);
    std::vector<BenchRecord> records;
    for (const auto& item : parsed) {
        records.push_back({item.at("circuit").get<std::string>(),
                           item.at("qubits").get<std::size_t>(),
                           item.at("backend").get<std::string>(),
                           item.at("mean_ns").get<double>(),
                           item.at("stddev_ns").get<double>(),
                           item.at("speedup").get<double>()});
    }
    return records;
}

} // namespace qsim
