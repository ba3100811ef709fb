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

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace qsim {

class GateRegistry;

/// Standard single-qubit gate set: Pauli gates, Hadamard, the fixed phase
/// gates S and T, and the arbitrary phase gate R(phi).
enum class GateTag { H, X, Y, Z, S, T, R };

struct GateType {
    GateTag tag = GateTag::H;
    double phi = 0.0; // meaningful only when tag == GateTag::R

    static GateType h() { return {GateTag::H}; }
    static GateType x() { return {GateTag::X}; }
    static GateType y() { return {GateTag::Y}; }
    static GateType z() { return {GateTag::Z}; }
    static GateType s() { return {GateTag::S}; }
    static GateType t() { return {GateTag::T}; }
    /// Phase gate; throws ArgumentError if phi is not finite.
    static GateType r(double phi);

    /// "H", "X", ..., "R".
    std::string name() const;

    bool operator==(const GateType&) const = default;
};

enum class InstructionKind { Measure, Reset };

struct Gate {
    GateType gate;
    std::size_t target = 0;
    bool operator==(const Gate&) const = default;
};

struct ControlGate {
    GateType gate;
    std::size_t control = 0;
    std::size_t target = 0;
    bool operator==(const ControlGate&) const = default;
};

/// Custom unitary registered under `name`, applied to the contiguous qubit
/// range [first_qubit, first_qubit + qubit_count).
struct FunctionOp {
    std::string name;
    std::size_t first_qubit = 0;
    std::size_t qubit_count = 0;
    bool operator==(const FunctionOp&) const = default;
};

struct Instruction {
    InstructionKind kind = InstructionKind::Measure;
    std::size_t target = 0;
    bool operator==(const Instruction&) const = default;
};

using Operation = std::variant<Gate, ControlGate, FunctionOp, Instruction>;

/// Sorted list of the qubits an operation acts on.
std::vector<std::size_t> touched_qubits(const Operation& op);

/// One time slice of a circuit; the qubit sets of the operations within a
/// step are pairwise disjoint.
struct Step {
    std::vector<Operation> operations;
};

inline constexpr std::size_t kDefaultQubitCap = 24;

/// Ordered sequence of steps over a fixed qubit count. Operations are added
/// through the builder methods, which pack each new operation into the last
/// step when its qubits are free there and open a new step otherwise.
class Circuit {
public:
    explicit Circuit(std::size_t n_qubits, std::size_t qubit_cap = kDefaultQubitCap);

    std::size_t qubit_count() const { return n_qubits_; }
    const std::vector<Step>& steps() const { return steps_; }

    Circuit& add_gate(GateType g, std::size_t target);
    Circuit& add_control_gate(GateType g, std::size_t control, std::size_t target);
    /// Validates at insertion time that `name` is registered with a matrix of
    /// dimension 2^qubit_count.
    Circuit& add_function(const std::string& name, std::size_t first_qubit,
                          std::size_t qubit_count, const GateRegistry& registry);
    Circuit& add_instruction(InstructionKind kind, std::size_t target);

    Circuit& h(std::size_t q) { return add_gate(GateType::h(), q); }
    Circuit& x(std::size_t q) { return add_gate(GateType::x(), q); }
    Circuit& y(std::size_t q) { return add_gate(GateType::y(), q); }
    Circuit& z(std::size_t q) { return add_gate(GateType::z(), q); }
    Circuit& s(std::size_t q) { return add_gate(GateType::s(), q); }
    Circuit& t(std::size_t q) { return add_gate(GateType::t(), q); }
    Circuit& r(double phi, std::size_t q) { return add_gate(GateType::r(phi), q); }
    Circuit& cnot(std::size_t c, std::size_t t) { return add_control_gate(GateType::x(), c, t); }
    Circuit& cr(double phi, std::size_t c, std::size_t t) {
        return add_control_gate(GateType::r(phi), c, t);
    }
    Circuit& measure(std::size_t q) { return add_instruction(InstructionKind::Measure, q); }
    Circuit& reset(std::size_t q) { return add_instruction(InstructionKind::Reset, q); }

    /// All operations in step order, insertion order within each step.
    std::vector<Operation> flatten() const;

private:
    void check_qubit(std::size_t q) const;
    void append(Operation op);

    std::size_t n_qubits_;
    std::vector<Step> steps_;
};

} // namespace qsim
