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

#include <complex>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

#include "qsim/circuit.hpp"
#include "qsim/gates.hpp"
#include "qsim/linalg.hpp"
#include "qsim/state.hpp"
#include "qsim/unitary_backend.hpp"

namespace qsim::test {

/// Builds a matrix from row-major complex literals.
inline ComplexMatrix mat(std::size_t rows, std::size_t cols,
                         std::initializer_list<std::complex<double>> entries) {
    ComplexMatrix m(rows, cols);
    std::size_t i = 0;
    for (const auto& e : entries) {
        m.re(i / cols, i % cols) = e.real();
        m.im(i / cols, i % cols) = e.imag();
        ++i;
    }
    return m;
}

/// Reference matrix product straight from the definition, accumulated with
/// std::complex; shares no code with the library kernel.
inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::complex<double> sum = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                sum += std::complex{a.re(i, k), a.im(i, k)} *
                       std::complex{b.re(k, j), b.im(k, j)};
            }
            c.re(i, j) = sum.real();
            c.im(i, j) = sum.imag();
        }
    }
    return c;
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                   std::size_t cols) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.re(i, j) = dist(rng);
            m.im(i, j) = dist(rng);
        }
    }
    return m;
}

inline StateVector random_state(std::mt19937_64& rng, std::size_t n_qubits) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    StateVector s = zero_state(n_qubits);
    double norm = 0.0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        s.amplitudes.re[i] = dist(rng);
        s.amplitudes.im[i] = dist(rng);
        norm += s.amplitudes.re[i] * s.amplitudes.re[i] +
                s.amplitudes.im[i] * s.amplitudes.im[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        s.amplitudes.re[i] /= norm;
        s.amplitudes.im[i] /= norm;
    }
    return s;
}

/// Random circuit over the full gate set {H, X, Y, Z, S, T, R(phi), CNOT,
/// CR(phi)} with uniformly chosen (possibly non-adjacent) qubit pairs.
inline Circuit random_circuit(std::mt19937_64& rng, std::size_t n_qubits,
                              std::size_t n_ops) {
    std::uniform_int_distribution<int> gate_pick(0, 8);
    std::uniform_int_distribution<std::size_t> qubit_pick(0, n_qubits - 1);
    std::uniform_real_distribution<double> phi_pick(0.0, 2.0 * std::numbers::pi);

    Circuit c(n_qubits);
    for (std::size_t i = 0; i < n_ops; ++i) {
        const int g = gate_pick(rng);
        const std::size_t target = qubit_pick(rng);
        switch (g) {
        case 0: c.h(target); break;
        case 1: c.x(target); break;
        case 2: c.y(target); break;
        case 3: c.z(target); break;
        case 4: c.s(target); break;
        case 5: c.t(target); break;
        case 6: c.r(phi_pick(rng), target); break;
        default: {
            if (n_qubits < 2) {
                c.h(target);
                break;
            }
            std::size_t control = qubit_pick(rng);
            while (control == target) {
                control = qubit_pick(rng);
            }
            if (g == 7) {
                c.cnot(control, target);
            } else {
                c.cr(phi_pick(rng), control, target);
            }
            break;
        }
        }
    }
    return c;
}

/// The full circuit unitary: fold of the step unitaries in application order.
inline ComplexMatrix circuit_unitary(const Circuit& c, const GateRegistry& registry,
                                     ExecMode mode = ExecMode::Serial) {
    ComplexMatrix result = ComplexMatrix::identity(std::size_t{1} << c.qubit_count());
    for (const Step& step : c.steps()) {
        result = matmul(step_unitary(step, c.qubit_count(), registry), result, mode);
    }
    return result;
}

/// DFT matrix on 2^n points: entry (j, k) = omega^(j*k) / sqrt(2^n) with
/// omega = e^(2*pi*i / 2^n). Computed directly from the definition.
inline ComplexMatrix dft_matrix(std::size_t n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    ComplexMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>((j * k) % dim) /
                                 static_cast<double>(dim);
            m.re(j, k) = std::cos(angle) * scale;
            m.im(j, k) = std::sin(angle) * scale;
        }
    }
    return m;
}

} // namespace qsim::test
