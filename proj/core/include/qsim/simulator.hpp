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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/circuit.hpp"
#include "qsim/gates.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Common interface of all simulation backends.
class Simulator {
public:
    virtual ~Simulator() = default;

    /// Backend identifier ("unitary", "unitary-parallel", "fsv", ...).
    virtual std::string name() const = 0;

    /// Largest qubit count this backend accepts before raising ResourceError.
    virtual std::size_t qubit_guard() const = 0;

    /// Simulates the circuit from |0...0> and returns the full state.
    virtual StateVector simulate_full_state(const Circuit& circuit,
                                            const GateRegistry& registry) const = 0;

    /// Simulates the circuit, then samples one basis state from the final
    /// probabilities with the given seed.
    virtual CollapsedState simulate_and_collapse(const Circuit& circuit,
                                                 const GateRegistry& registry,
                                                 std::uint64_t seed) const;
};

struct SimulatorOptions {
    /// Overrides the backend's default qubit guard.
    std::optional<std::size_t> qubit_guard;
};

using SimulatorFactory = std::function<std::unique_ptr<Simulator>(const SimulatorOptions&)>;

/// Creates a backend by identifier. Throws LookupError for unknown names.
std::unique_ptr<Simulator> make_simulator(std::string_view backend_id,
                                          const SimulatorOptions& options = {});

/// Adds (or replaces) a backend constructor under the given identifier.
void register_backend(const std::string& backend_id, SimulatorFactory factory);

/// Registered backend identifiers, sorted.
std::vector<std::string> backend_names();

} // namespace qsim
