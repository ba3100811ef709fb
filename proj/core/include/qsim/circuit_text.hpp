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

#include <string>
#include <string_view>

#include "qsim/circuit.hpp"
#include "qsim/gates.hpp"

namespace qsim {

// Line-oriented circuit text format, one operation per line:
//
//   H 0             single-qubit gate (H, X, Y, Z, S, T)
//   R 1.5707963 2   phase gate: phi, target
//   CNOT 0 3        controlled X: control, target
//   CR 0.7853981 0 2   controlled phase: phi, control, target
//   CH 0 1          other controlled gates: CH, CY, CZ, CS, CT
//   FN oracle 0 4   registered function: name, first qubit, qubit count
//   MEASURE 0       instructions: MEASURE, RESET
//
// Blank lines and lines starting with '#' are ignored. The format carries no
// step boundaries; they are recomputed by the builder on load.

/// Serializes the circuit's operations in step order.
std::string circuit_to_text(const Circuit& circuit);

/// Rebuilds a circuit from the text format. Function lines are validated
/// against `registry`. Throws ValidationError on malformed input.
Circuit circuit_from_text(std::string_view text, std::size_t n_qubits,
                          const GateRegistry& registry = {});

} // namespace qsim
