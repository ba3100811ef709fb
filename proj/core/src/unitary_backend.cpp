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

#include "qsim/unitary_backend.hpp"

#include <algorithm>
#include <cstdio>

#include "backend_util.hpp"
#include "qsim/errors.hpp"

namespace qsim {

namespace {

// One operation expanded to the contiguous qubit interval it occupies in the
// Kronecker fold. Control gates claim the whole control..target interval
// because their expanded matrix covers the in-between qubits (acting on them
// as identity).
struct SpanOperand {
    std::size_t first = 0;
    std::size_t span = 0;
    ComplexMatrix matrix;
};

SpanOperand make_operand(const Operation& op, const GateRegistry& registry) {
    if (const auto* g = std::get_if<Gate>(&op)) {
        return {g->target, 1, gate_matrix(g->gate)};
    }
    if (const auto* cg = std::get_if<ControlGate>(&op)) {
        const std::size_t first = std::min(cg->control, cg->target);
        const std::size_t span = std::max(cg->control, cg->target) - first + 1;
        return {first, span,
                controlled_unitary(gate_matrix(cg->gate), cg->control - first,
                                   cg->target - first, span)};
    }
    if (const auto* fn = std::get_if<FunctionOp>(&op)) {
        const ComplexMatrix& m = registry.lookup(fn->name);
        if (m.rows() != (std::size_t{1} << fn->qubit_count)) {
            throw ValidationError("function '" + fn->name +
                                  "' no longer matches its registered dimension");
        }
        return {fn->first_qubit, fn->qubit_count, m};
    }
    const auto& instr = std::get<Instruction>(op);
    return {instr.target, 1, ComplexMatrix::identity(2)};
}

// Greedy partition of a step's operations into layers with non-overlapping
// qubit intervals. Operations within one step act on disjoint qubit sets, so
// they commute and the step unitary is the product of the layer unitaries.
std::vector<std::vector<SpanOperand>> layered_operands(const Step& step,
                                                       const GateRegistry& registry) {
    std::vector<std::vector<SpanOperand>> layers;
    for (const Operation& op : step.operations) {
        SpanOperand operand = make_operand(op, registry);
        auto fits = [&](const std::vector<SpanOperand>& layer) {
            for (const SpanOperand& other : layer) {
                const bool disjoint = operand.first + operand.span <= other.first ||
                                      other.first + other.span <= operand.first;
                if (!disjoint) {
                    return false;
                }
            }
            return true;
        };
        bool placed = false;
        for (auto& layer : layers) {
            if (fits(layer)) {
                layer.push_back(std::move(operand));
                placed = true;
                break;
            }
        }
        if (!placed) {
            layers.push_back({std::move(operand)});
        }
    }
    return layers;
}

// Identity-fills one layer to full coverage and returns the operand list
// ordered from qubit 0 downward.
std::vector<ComplexMatrix> fill_layer(std::vector<SpanOperand> layer,
                                      std::size_t n_qubits) {
    std::sort(layer.begin(), layer.end(),
              [](const SpanOperand& a, const SpanOperand& b) { return a.first < b.first; });
    std::vector<ComplexMatrix> list;
    std::size_t cursor = 0;
    for (SpanOperand& operand : layer) {
        if (operand.first < cursor) {
            throw ValidationError("step operands overlap on qubit " +
                                  std::to_string(operand.first));
        }
        for (; cursor < operand.first; ++cursor) {
            list.push_back(ComplexMatrix::identity(2));
        }
        cursor += operand.span;
        list.push_back(std::move(operand.matrix));
    }
    for (; cursor < n_qubits; ++cursor) {
        list.push_back(ComplexMatrix::identity(2));
    }
    return list;
}

// Left fold of the Kronecker product over the operand list.
ComplexMatrix kronecker_fold(const std::vector<ComplexMatrix>& operands) {
    ComplexMatrix result = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i) {
        result = kronecker(result, operands[i]);
    }
    return result;
}

} // namespace

std::vector<ComplexMatrix> step_operand_list(const Step& step, std::size_t n_qubits,
                                             const GateRegistry& registry) {
    auto layers = layered_operands(step, registry);
    if (layers.empty()) {
        layers.push_back({});
    }
    if (layers.size() > 1) {
        throw ValidationError("step operands overlap; use step_unitary for such steps");
    }
    return fill_layer(std::move(layers.front()), n_qubits);
}

ComplexMatrix step_unitary(const Step& step, std::size_t n_qubits,
                           const GateRegistry& registry) {
    auto layers = layered_operands(step, registry);
    if (layers.empty()) {
        return ComplexMatrix::identity(std::size_t{1} << n_qubits);
    }
    ComplexMatrix result = kronecker_fold(fill_layer(std::move(layers[0]), n_qubits));
    for (std::size_t l = 1; l < layers.size(); ++l) {
        const ComplexMatrix layer =
            kronecker_fold(fill_layer(std::move(layers[l]), n_qubits));
        result = matmul(layer, result);
    }
    return result;
}

std::uint64_t memory_estimate(std::size_t n_qubits, BackendKind kind) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw ArgumentError("memory_estimate: qubit count must be in [1, 30]");
    }
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    const std::uint64_t per_complex = 8;
    if (kind == BackendKind::Unitary) {
        return dim * dim * per_complex + dim * per_complex;
    }
    return dim * per_complex;
}

std::uint64_t engine_memory_estimate(std::size_t n_qubits, BackendKind kind) {
    // 3 * (2^n)^2 * 16 overflows 64 bits beyond n = 29.
    if (n_qubits < 1 || n_qubits > 29) {
        throw ArgumentError("engine_memory_estimate: qubit count must be in [1, 29]");
    }
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    const std::uint64_t per_complex = 16;
    if (kind == BackendKind::Unitary) {
        return 3 * dim * dim * per_complex + dim * per_complex;
    }
    return dim * per_complex;
}

std::string format_bytes(std::uint64_t bytes) {
    static constexpr const char* units[] = {"B", "kB", "MB", "GB", "TB", "PB"};
    double value = static_cast<double>(bytes);
    std::size_t unit = 0;
    while (value >= 1000.0 && unit + 1 < std::size(units)) {
        value /= 1000.0;
        ++unit;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, unit == 0 ? "%.0f %s" : "%.2f %s", value, units[unit]);
    return buf;
}

StateVector UnitarySimulator::simulate_full_state(const Circuit& circuit,
                                                  const GateRegistry& registry) const {
    const std::size_t n = circuit.qubit_count();
    if (n > guard_) {
        throw ResourceError(
            name() + " backend refuses " + std::to_string(n) + " qubits (guard " +
            std::to_string(guard_) + "): estimated memory " +
            std::to_string(memory_estimate(n, BackendKind::Unitary)) + " bytes (" +
            format_bytes(memory_estimate(n, BackendKind::Unitary)) +
            " at 8 bytes per complex; engine-accurate " +
            format_bytes(engine_memory_estimate(n, BackendKind::Unitary)) + ")");
    }
    detail::validate_instruction_placement(circuit);

    ComplexMatrix result = ComplexMatrix::identity(std::size_t{1} << n);
    for (const Step& step : circuit.steps()) {
        const ComplexMatrix a = step_unitary(step, n, registry);
        result = matmul(a, result, mode_);
    }
    const StateVector initial = zero_state(n);
    return {n, matvec(result, initial.amplitudes)};
}

} // namespace qsim
