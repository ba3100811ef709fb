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

/// Applies a 2x2 unitary to one qubit by updating the amplitude pairs that
/// differ only in that qubit's bit. Each pair (i0, i1 = i0 | bit) becomes
///   new[i0] = u00 * old[i0] + u01 * old[i1]
///   new[i1] = u10 * old[i0] + u11 * old[i1]
StateVector apply_gate(StateVector s, const ComplexMatrix& u, std::size_t target);

/// Same pair update, applied only where the control qubit's bit is 1.
StateVector apply_control_gate(StateVector s, const ComplexMatrix& u,
                               std::size_t control, std::size_t target);

/// Applies a 2^k x 2^k unitary to the contiguous qubit range
/// [first_qubit, first_qubit + qubit_count): for every setting of the bits
/// outside the range, the 2^k amplitudes indexed by the range's bits are
/// multiplied by m.
StateVector apply_function(StateVector s, const ComplexMatrix& m,
                           std::size_t first_qubit, std::size_t qubit_count);

inline constexpr std::size_t kFsvQubitGuard = 24;

/// Full-state-vector backend: applies each operation in place on the state,
/// never materializing step matrices. Single-threaded.
class FsvSimulator final : public Simulator {
public:
    explicit FsvSimulator(std::size_t qubit_guard = kFsvQubitGuard) : guard_(qubit_guard) {}

    std::string name() const override { return "fsv"; }
    std::size_t qubit_guard() const override { return guard_; }

    StateVector simulate_full_state(const Circuit& circuit,
                                    const GateRegistry& registry) const override;

private:
    std::size_t guard_;
};

} // namespace qsim
