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
#include <functional>
#include <string>
#include <string_view>

#include "qsim/circuit.hpp"
#include "qsim/gates.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Boolean function over an n_inputs-bit argument. Input qubit 0 is the most
/// significant bit of the argument.
using BoolFunction = std::function<bool(std::uint64_t)>;

/// H(0) then CNOT(0, 1): two steps producing (|00> + |11>) / sqrt(2).
Circuit bell();

/// H(0) then CNOT(0, n-1), CNOT(0, n-2), ..., CNOT(0, 1), each in its own
/// step; produces the n-qubit GHZ state.
Circuit fully_entangled(std::size_t n_qubits);

/// Permutation matrix of the oracle |x, y> -> |x, y ^ f(x)> on
/// 2^(n_inputs + 1) basis states. The input bits x occupy qubits
/// 0..n_inputs-1 and the ancilla y is the last qubit.
ComplexMatrix oracle_matrix(std::size_t n_inputs, const BoolFunction& f);

struct DeutschJozsaProgram {
    Circuit circuit;
    GateRegistry registry;
};

/// Deutsch-Jozsa circuit on n_inputs + 1 qubits: X on the ancilla, H on all
/// qubits, the oracle (registered as function "oracle" spanning all qubits),
/// H on the input qubits, and measure instructions on the input qubits.
/// After simulation the input qubits read all-zero with probability 1 when f
/// is constant and probability 0 when f is balanced.
DeutschJozsaProgram deutsch_jozsa(std::size_t n_inputs, const BoolFunction& f);

/// Probability that every input qubit of a Deutsch-Jozsa final state
/// measures 0 (the classification statistic).
double all_zero_input_probability(const StateVector& s, std::size_t n_inputs);

/// Quantum Fourier transform network: for each qubit k an H followed by
/// controlled phase rotations R(pi/2^j) from qubit k+j, then qubit-reversal
/// swaps, each realized as three CNOTs. The circuit unitary is the DFT
/// matrix with entries omega^(j*k) / sqrt(2^n), omega = e^(2*pi*i/2^n).
Circuit qft(std::size_t n_qubits);

struct Oracle {
    std::string name;
    BoolFunction fn;
};

/// Parses an oracle selector: "constant0", "constant1", "balanced-bit:<k>"
/// (f(x) = input bit k), or "balanced-mask:<hex>" (f(x) = parity of x AND
/// mask, mask nonzero and within n_inputs bits).
Oracle parse_oracle_spec(std::string_view spec, std::size_t n_inputs);

struct GeneratedCircuit {
    Circuit circuit;
    GateRegistry registry;
};

/// Builds one of the named generator circuits: "bell" (2 qubits), "entangle",
/// "deutsch-jozsa" (oracle selected by `oracle_spec`, default balanced-bit:0)
/// or "qft". Throws LookupError for unknown names and ArgumentError for
/// invalid qubit counts.
GeneratedCircuit make_named_circuit(std::string_view name, std::size_t qubits,
                                    std::string_view oracle_spec = {});

} // namespace qsim
