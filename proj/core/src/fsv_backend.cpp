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

#include "qsim/fsv_backend.hpp"

#include "backend_util.hpp"
#include "qsim/errors.hpp"

namespace qsim {

namespace {

void check_target(const StateVector& s, std::size_t target) {
    if (target >= s.n_qubits) {
        throw ArgumentError("qubit index " + std::to_string(target) +
                            " out of range for a " + std::to_string(s.n_qubits) +
                            "-qubit state");
    }
}

void check_single_qubit_unitary(const ComplexMatrix& u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw ShapeError("apply_gate: gate matrix must be 2x2");
    }
}

// Pair update on amplitudes i and i | target_mask. Pairs are enumerated once
// by visiting only indices whose target bit is clear.
void update_pairs(ComplexVector& amps, const ComplexMatrix& u, std::size_t target_mask,
                  std::size_t control_mask) {
    const double u00r = u.re(0, 0), u00i = u.im(0, 0);
    const double u01r = u.re(0, 1), u01i = u.im(0, 1);
    const double u10r = u.re(1, 0), u10i = u.im(1, 0);
    const double u11r = u.re(1, 1), u11i = u.im(1, 1);
    const std::size_t dim = amps.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & target_mask) != 0 || (i & control_mask) != control_mask) {
            continue;
        }
        const std::size_t j = i | target_mask;
        const double a0r = amps.re[i], a0i = amps.im[i];
        const double a1r = amps.re[j], a1i = amps.im[j];
        amps.re[i] = u00r * a0r - u00i * a0i + u01r * a1r - u01i * a1i;
        amps.im[i] = u00r * a0i + u00i * a0r + u01r * a1i + u01i * a1r;
        amps.re[j] = u10r * a0r - u10i * a0i + u11r * a1r - u11i * a1i;
        amps.im[j] = u10r * a0i + u10i * a0r + u11r * a1i + u11i * a1r;
    }
}

} // namespace

StateVector apply_gate(StateVector s, const ComplexMatrix& u, std::size_t target) {
    check_target(s, target);
    check_single_qubit_unitary(u);
    const std::size_t mask = std::size_t{1} << (s.n_qubits - 1 - target);
    update_pairs(s.amplitudes, u, mask, 0);
    return s;
}

StateVector apply_control_gate(StateVector s, const ComplexMatrix& u,
                               std::size_t control, std::size_t target) {
    check_target(s, control);
    check_target(s, target);
    if (control == target) {
        throw ArgumentError("apply_control_gate: control and target must differ");
    }
    check_single_qubit_unitary(u);
    const std::size_t target_mask = std::size_t{1} << (s.n_qubits - 1 - target);
    const std::size_t control_mask = std::size_t{1} << (s.n_qubits - 1 - control);
    update_pairs(s.amplitudes, u, target_mask, control_mask);
    return s;
}

StateVector apply_function(StateVector s, const ComplexMatrix& m,
                           std::size_t first_qubit, std::size_t qubit_count) {
    check_target(s, first_qubit);
    if (qubit_count < 1 || first_qubit + qubit_count > s.n_qubits) {
        throw ArgumentError("apply_function: qubit range out of bounds");
    }
    const std::size_t block = std::size_t{1} << qubit_count;
    if (m.rows() != block || m.cols() != block) {
        throw ValidationError("apply_function: matrix dimension " +
                              std::to_string(m.rows()) + " does not match 2^" +
                              std::to_string(qubit_count));
    }

    // The range occupies `qubit_count` contiguous bits starting `shift` bits
    // above the least significant end; `outer` enumerates all settings of the
    // remaining bits.
    const std::size_t shift = s.n_qubits - first_qubit - qubit_count;
    const std::size_t low_mask = (std::size_t{1} << shift) - 1;
    const std::size_t outer_count = std::size_t{1} << (s.n_qubits - qubit_count);

    ComplexVector in(block);
    ComplexVector out(block);
    for (std::size_t outer = 0; outer < outer_count; ++outer) {
        const std::size_t base = ((outer & ~low_mask) << qubit_count) | (outer & low_mask);
        for (std::size_t j = 0; j < block; ++j) {
            const std::size_t idx = base | (j << shift);
            in.re[j] = s.amplitudes.re[idx];
            in.im[j] = s.amplitudes.im[idx];
        }
        for (std::size_t row = 0; row < block; ++row) {
            double sum_re = 0.0;
            double sum_im = 0.0;
            for (std::size_t k = 0; k < block; ++k) {
                sum_re += m.re(row, k) * in.re[k] - m.im(row, k) * in.im[k];
                sum_im += m.re(row, k) * in.im[k] + m.im(row, k) * in.re[k];
            }
            out.re[row] = sum_re;
            out.im[row] = sum_im;
        }
        for (std::size_t j = 0; j < block; ++j) {
            const std::size_t idx = base | (j << shift);
            s.amplitudes.re[idx] = out.re[j];
            s.amplitudes.im[idx] = out.im[j];
        }
    }
    return s;
}

StateVector FsvSimulator::simulate_full_state(const Circuit& circuit,
                                              const GateRegistry& registry) const {
    const std::size_t n = circuit.qubit_count();
    if (n > guard_) {
        throw ResourceError("fsv backend refuses " + std::to_string(n) +
                            " qubits (guard " + std::to_string(guard_) + ")");
    }
    detail::validate_instruction_placement(circuit);

    StateVector state = zero_state(n);
    for (const Step& step : circuit.steps()) {
        for (const Operation& op : step.operations) {
            if (const auto* g = std::get_if<Gate>(&op)) {
                state = apply_gate(std::move(state), gate_matrix(g->gate), g->target);
            } else if (const auto* cg = std::get_if<ControlGate>(&op)) {
                state = apply_control_gate(std::move(state), gate_matrix(cg->gate),
                                           cg->control, cg->target);
            } else if (const auto* fn = std::get_if<FunctionOp>(&op)) {
                state = apply_function(std::move(state), registry.lookup(fn->name),
                                       fn->first_qubit, fn->qubit_count);
            }
            // Instructions do not change the full state.
        }
    }
    return state;
}

} // namespace qsim
