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

#include "qsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsim/errors.hpp"
#include "qsim/gates.hpp"

namespace qsim {

GateType GateType::r(double phi) {
    if (!std::isfinite(phi)) {
        throw ArgumentError("phase gate: phi must be finite");
    }
    return {GateTag::R, phi};
}

std::string GateType::name() const {
    switch (tag) {
    case GateTag::H: return "H";
    case GateTag::X: return "X";
    case GateTag::Y: return "Y";
    case GateTag::Z: return "Z";
    case GateTag::S: return "S";
    case GateTag::T: return "T";
    case GateTag::R: return "R";
    }
    return "?";
}

std::vector<std::size_t> touched_qubits(const Operation& op) {
    return std::visit(
        [](const auto& o) -> std::vector<std::size_t> {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Gate> || std::is_same_v<T, Instruction>) {
                return {o.target};
            } else if constexpr (std::is_same_v<T, ControlGate>) {
                std::vector<std::size_t> q{o.control, o.target};
                std::sort(q.begin(), q.end());
                return q;
            } else {
                std::vector<std::size_t> q(o.qubit_count);
                std::iota(q.begin(), q.end(), o.first_qubit);
                return q;
            }
        },
        op);
}

Circuit::Circuit(std::size_t n_qubits, std::size_t qubit_cap) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > qubit_cap) {
        throw ArgumentError("circuit qubit count must be in [1, " +
                            std::to_string(qubit_cap) + "], got " +
                            std::to_string(n_qubits));
    }
}

void Circuit::check_qubit(std::size_t q) const {
    if (q >= n_qubits_) {
        throw ArgumentError("qubit index " + std::to_string(q) +
                            " out of range for a " + std::to_string(n_qubits_) +
                            "-qubit circuit");
    }
}

void Circuit::append(Operation op) {
    const auto qubits = touched_qubits(op);
    if (!steps_.empty()) {
        bool free_in_last = true;
        for (const Operation& existing : steps_.back().operations) {
            const auto used = touched_qubits(existing);
            for (std::size_t q : qubits) {
                if (std::binary_search(used.begin(), used.end(), q)) {
                    free_in_last = false;
                    break;
                }
            }
            if (!free_in_last) {
                break;
            }
        }
        if (free_in_last) {
            steps_.back().operations.push_back(std::move(op));
            return;
        }
    }
    steps_.push_back(Step{{std::move(op)}});
}

Circuit& Circuit::add_gate(GateType g, std::size_t target) {
    check_qubit(target);
    append(Gate{g, target});
    return *this;
}

Circuit& Circuit::add_control_gate(GateType g, std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ArgumentError("control gate: control and target must differ");
    }
    append(ControlGate{g, control, target});
    return *this;
}

Circuit& Circuit::add_function(const std::string& name, std::size_t first_qubit,
                               std::size_t qubit_count, const GateRegistry& registry) {
    if (qubit_count < 1) {
        throw ArgumentError("function must span at least one qubit");
    }
    check_qubit(first_qubit);
    if (first_qubit + qubit_count > n_qubits_) {
        throw ArgumentError("function range [" + std::to_string(first_qubit) + ", " +
                            std::to_string(first_qubit + qubit_count) +
                            ") exceeds circuit size");
    }
    const ComplexMatrix& m = registry.lookup(name);
    const std::size_t want = std::size_t{1} << qubit_count;
    if (m.rows() != want) {
        throw ValidationError("function '" + name + "' is registered with dimension " +
                              std::to_string(m.rows()) + ", expected " +
                              std::to_string(want) + " for " +
                              std::to_string(qubit_count) + " qubits");
    }
    append(FunctionOp{name, first_qubit, qubit_count});
    return *this;
}

Circuit& Circuit::add_instruction(InstructionKind kind, std::size_t target) {
    check_qubit(target);
    append(Instruction{kind, target});
    return *this;
}

std::vector<Operation> Circuit::flatten() const {
    std::vector<Operation> ops;
    for (const Step& step : steps_) {
        ops.insert(ops.end(), step.operations.begin(), step.operations.end());
    }
    return ops;
}

} // namespace qsim
