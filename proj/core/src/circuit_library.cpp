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

#include "qsim/circuit_library.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>

#include "qsim/errors.hpp"
#include "qsim/state.hpp"

namespace qsim {

Circuit bell() {
    Circuit c(2);
    c.h(0).cnot(0, 1);
    return c;
}

Circuit fully_entangled(std::size_t n_qubits) {
    if (n_qubits < 2) {
        throw ArgumentError("fully entangled circuit needs at least 2 qubits");
    }
    Circuit c(n_qubits);
    c.h(0);
    for (std::size_t target = n_qubits - 1; target >= 1; --target) {
        c.cnot(0, target);
    }
    return c;
}

ComplexMatrix oracle_matrix(std::size_t n_inputs, const BoolFunction& f) {
    if (n_inputs < 1) {
        throw ArgumentError("oracle needs at least one input bit");
    }
    const std::size_t dim = std::size_t{1} << (n_inputs + 1);
    ComplexMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const std::uint64_t x = col >> 1;
        const std::uint64_t y = col & 1;
        const std::size_t row = (x << 1) | (y ^ (f(x) ? 1 : 0));
        m.re(row, col) = 1.0;
    }
    return m;
}

DeutschJozsaProgram deutsch_jozsa(std::size_t n_inputs, const BoolFunction& f) {
    const std::size_t n = n_inputs + 1;
    const std::size_t ancilla = n_inputs;

    GateRegistry registry;
    registry.register_function("oracle", oracle_matrix(n_inputs, f));

    Circuit c(n);
    c.x(ancilla);
    for (std::size_t q = 0; q < n; ++q) {
        c.h(q);
    }
    c.add_function("oracle", 0, n, registry);
    for (std::size_t q = 0; q < n_inputs; ++q) {
        c.h(q);
    }
    for (std::size_t q = 0; q < n_inputs; ++q) {
        c.measure(q);
    }
    return {std::move(c), std::move(registry)};
}

double all_zero_input_probability(const StateVector& s, std::size_t n_inputs) {
    if (n_inputs + 1 != s.n_qubits) {
        throw ArgumentError("state does not match the oracle's qubit count");
    }
    // All input bits zero leaves only the ancilla free: indices 0 and 1.
    const auto p = probabilities(s);
    return p[0] + p[1];
}

Circuit qft(std::size_t n_qubits) {
    if (n_qubits < 1) {
        throw ArgumentError("qft needs at least one qubit");
    }
    Circuit c(n_qubits);
    for (std::size_t k = 0; k < n_qubits; ++k) {
        c.h(k);
        for (std::size_t j = 1; j + k < n_qubits; ++j) {
            c.cr(std::ldexp(std::numbers::pi, -static_cast<int>(j)), k + j, k);
        }
    }
    for (std::size_t q = 0; q < n_qubits / 2; ++q) {
        const std::size_t p = n_qubits - 1 - q;
        c.cnot(q, p).cnot(p, q).cnot(q, p);
    }
    return c;
}

Oracle parse_oracle_spec(std::string_view spec, std::size_t n_inputs) {
    if (n_inputs < 1 || n_inputs > 63) {
        throw ArgumentError("oracle input count must be in [1, 63]");
    }
    if (spec == "constant0") {
        return {"constant0", [](std::uint64_t) { return false; }};
    }
    if (spec == "constant1") {
        return {"constant1", [](std::uint64_t) { return true; }};
    }
    if (spec.starts_with("balanced-bit:")) {
        const std::string_view arg = spec.substr(13);
        std::size_t bit = 0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), bit);
        if (ec != std::errc{} || ptr != arg.data() + arg.size() || bit >= n_inputs) {
            throw ArgumentError("balanced-bit oracle: bit index must be below " +
                                std::to_string(n_inputs));
        }
        const std::size_t shift = n_inputs - 1 - bit;
        return {std::string(spec),
                [shift](std::uint64_t x) { return ((x >> shift) & 1) != 0; }};
    }
    if (spec.starts_with("balanced-mask:")) {
        const std::string_view arg = spec.substr(14);
        std::uint64_t mask = 0;
        const auto [ptr, ec] =
            std::from_chars(arg.data(), arg.data() + arg.size(), mask, 16);
        if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
            throw ArgumentError("balanced-mask oracle: expected a hex mask");
        }
        if (mask == 0 || (n_inputs < 64 && mask >= (std::uint64_t{1} << n_inputs))) {
            throw ArgumentError("balanced-mask oracle: mask must be nonzero and fit " +
                                std::to_string(n_inputs) + " bits");
        }
        return {std::string(spec), [mask](std::uint64_t x) {
                    return (std::popcount(x & mask) & 1) != 0;
                }};
    }
    throw ValidationError("unknown oracle spec '" + std::string(spec) +
                          "' (expected constant0, constant1, balanced-bit:<k> or "
                          "balanced-mask:<hex>)");
}

GeneratedCircuit make_named_circuit(std::string_view name, std::size_t qubits,
                                    std::string_view oracle_spec) {
    if (name == "bell") {
        if (qubits != 2) {
            throw ArgumentError("bell is a 2-qubit circuit");
        }
        return {bell(), {}};
    }
    if (name == "entangle") {
        return {fully_entangled(qubits), {}};
    }
    if (name == "deutsch-jozsa") {
        if (qubits < 2) {
            throw ArgumentError("deutsch-jozsa needs at least 2 qubits");
        }
        const std::size_t n_inputs = qubits - 1;
        const Oracle oracle =
            parse_oracle_spec(oracle_spec.empty() ? "balanced-bit:0" : oracle_spec,
                              n_inputs);
        auto program = deutsch_jozsa(n_inputs, oracle.fn);
        return {std::move(program.circuit), std::move(program.registry)};
    }
    if (name == "qft") {
        return {qft(qubits), {}};
    }
    throw LookupError("unknown circuit '" + std::string(name) +
                      "' (expected bell, entangle, deutsch-jozsa or qft)");
}

} // namespace qsim
