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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qsim {

/// Benchmark plan: every (circuit, qubits, backend) combination is measured
/// with `warmup_iters` untimed simulations followed by `sample_iters` timed
/// ones, reporting the mean of the samples.
struct BenchConfig {
    std::vector<std::string> circuits;
    std::size_t qubits_from = 0;
    std::size_t qubits_to = 0; // inclusive
    std::vector<std::string> backends;
    std::size_t warmup_iters = 40;
    std::size_t sample_iters = 11;
    std::uint64_t seed = 0;
    std::string oracle_spec; // deutsch-jozsa only; empty selects the default
};

struct BenchRecord {
    std::string circuit;
    std::size_t qubits = 0;
    std::string backend;
    double mean_ns = 0.0;
    double stddev_ns = 0.0;
    /// Relative to the first-listed backend at the same (circuit, qubits);
    /// the baseline row reports 1.0.
    double speedup = 1.0;
};

/// Runs the benchmark plan. Timing covers simulate_full_state only; circuit
/// construction and reporting are excluded. Before timing a configuration,
/// all backends' outputs are cross-checked entrywise at 1e-9 and a mismatch
/// aborts with ValidationError. Combinations whose qubit count exceeds a
/// backend's guard are skipped with a warning on `warnings` and produce no
/// record. Configurations never run concurrently.
std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* warnings = nullptr);

enum class ReportFormat { Table, Csv, Json };

/// Formats records. CSV columns are exactly
/// circuit,qubits,backend,mean_ns,stddev_ns,speedup and the output is
/// byte-stable for identical records.
std::string report(const std::vector<BenchRecord>& records, ReportFormat format);

/// Parses records back from report(..., ReportFormat::Json).
std::vector<BenchRecord> records_from_json(const std::string& json_text);

} // namespace qsim
