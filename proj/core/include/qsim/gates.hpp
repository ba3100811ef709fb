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

#include <map>
#include <string>
#include <string_view>

#include "qsim/circuit.hpp"
#include "qsim/linalg.hpp"

// Qubit-ordering convention used throughout: qubit 0 is the MOST significant
// bit of a basis index. In an n-qubit register the bit of qubit q in basis
// index i is (i >> (n - 1 - q)) & 1, so a gate on qubit 0 of a 2-qubit system
// acts as gate (x) I.

namespace qsim {

/// Unitarity tolerance applied when registering custom functions.
inline constexpr double kRegistryUnitaryTol = 1e-9;

/// The 2x2 unitary for a standard gate. S and T are the phase gates R(pi/2)
/// and R(pi/4).
ComplexMatrix gate_matrix(const GateType& g);

/// Expands a single-qubit unitary u into a controlled gate over `span`
/// qubits: 2^span x 2^span matrix applying u to the qubit at target_pos
/// whenever the qubit at control_pos is 1, identity otherwise. Positions
/// index qubits within the span (position 0 = most significant bit), and
/// qubits at other positions are left untouched, so non-adjacent
/// control/target pairs are built directly.
ComplexMatrix controlled_unitary(const ComplexMatrix& u, std::size_t control_pos,
                                 std::size_t target_pos, std::size_t span);

/// Named store of unitary matrices for user-defined circuit functions.
/// Matrices must be square with a power-of-two dimension of at least 2 and
/// unitary within kRegistryUnitaryTol; registering an existing name replaces
/// the entry.
class GateRegistry {
public:
    void register_function(const std::string& name, ComplexMatrix m);

    /// Throws LookupError for unknown names.
    const ComplexMatrix& lookup(std::string_view name) const;

    bool contains(std::string_view name) const;

private:
    std::map<std::string, ComplexMatrix, std::less<>> entries_;
};

} // namespace qsim
