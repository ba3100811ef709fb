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

#include "qsim/simulator.hpp"

namespace qsim {

enum class BackendKind { Unitary, Fsv };

/// Memory needed to simulate n qubits, in the accounting that counts each
/// complex number as 8 bytes: the unitary technique stores a 2^n x 2^n step
/// matrix plus the 2^n-amplitude state, the full-state-vector technique only
/// the state. At 20 qubits this gives about 8.8 TB and 8.4 MB respectively.
std::uint64_t memory_estimate(std::size_t n_qubits, BackendKind kind);

/// Memory this engine actually allocates (16 bytes per complex entry; the
/// unitary backend holds the accumulator, the step matrix and the product
/// temporary at once).
std::uint64_t engine_memory_estimate(std::size_t n_qubits, BackendKind kind);

/// Decimal-unit rendering ("8.80 TB", "8.39 MB").
std::string format_bytes(std::uint64_t bytes);

/// The matrices whose Kronecker fold forms the step unitary, ordered from
/// qubit 0 downward: identity(2) for untouched qubits and instructions, the
/// gate matrix for single-qubit gates, a controlled_unitary over the full
/// contiguous control..target span for control gates, and the registered
/// matrix for functions. Throws ValidationError if two operations' spans
/// overlap (possible when an operation sits between a non-adjacent
/// control/target pair; step_unitary handles that case by factoring the step
/// into commuting layers).
std::vector<ComplexMatrix> step_operand_list(const Step& step, std::size_t n_qubits,
                                             const GateRegistry& registry);

/// The 2^n x 2^n unitary of one step.
ComplexMatrix step_unitary(const Step& step, std::size_t n_qubits,
                           const GateRegistry& registry);

inline constexpr std::size_t kUnitaryQubitGuard = 14;

/// Unitary-matrix backend: folds every step into a step unitary, accumulates
/// the circuit unitary by matrix multiplication, and applies it to |0...0>.
class UnitarySimulator final : public Simulator {
public:
    explicit UnitarySimulator(ExecMode mode = ExecMode::Serial,
                              std::size_t qubit_guard = kUnitaryQubitGuard)
        : mode_(mode), guard_(qubit_guard) {}

    std::string name() const override {
        return mode_ == ExecMode::Parallel ? "unitary-parallel" : "unitary";
    }
    std::size_t qubit_guard() const override { return guard_; }

    StateVector simulate_full_state(const Circuit& circuit,
                                    const GateRegistry& registry) const override;

private:
    ExecMode mode_;
    std::size_t guard_;
};

} // namespace qsim
