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

#include "qsim/simulator.hpp"

#include <map>
#include <mutex>

#include "qsim/errors.hpp"
#include "qsim/fsv_backend.hpp"
#include "qsim/unitary_backend.hpp"

namespace qsim {

CollapsedState Simulator::simulate_and_collapse(const Circuit& circuit,
                                                const GateRegistry& registry,
                                                std::uint64_t seed) const {
    return collapse(simulate_full_state(circuit, registry), seed);
}

namespace {

using FactoryMap = std::map<std::string, SimulatorFactory, std::less<>>;

std::mutex g_mutex;

FactoryMap& factories() {
    static FactoryMap map = [] {
        FactoryMap m;
        m["unitary"] = [](const SimulatorOptions& o) -> std::unique_ptr<Simulator> {
            return std::make_unique<UnitarySimulator>(
                ExecMode::Serial, o.qubit_guard.value_or(kUnitaryQubitGuard));
        };
        m["unitary-parallel"] = [](const SimulatorOptions& o) -> std::unique_ptr<Simulator> {
            return std::make_unique<UnitarySimulator>(
                ExecMode::Parallel, o.qubit_guard.value_or(kUnitaryQubitGuard));
        };
        m["fsv"] = [](const SimulatorOptions& o) -> std::unique_ptr<Simulator> {
            return std::make_unique<FsvSimulator>(o.qubit_guard.value_or(kFsvQubitGuard));
        };
        return m;
    }();
    return map;
}

} // namespace

std::unique_ptr<Simulator> make_simulator(std::string_view backend_id,
                                          const SimulatorOptions& options) {
    std::lock_guard lock(g_mutex);
    const FactoryMap& map = factories();
    const auto it = map.find(backend_id);
    if (it == map.end()) {
        throw LookupError("unknown backend '" + std::string(backend_id) + "'");
    }
    return it->second(options);
}

void register_backend(const std::string& backend_id, SimulatorFactory factory) {
    std::lock_guard lock(g_mutex);
    factories().insert_or_assign(backend_id, std::move(factory));
}

std::vector<std::string> backend_names() {
    std::lock_guard lock(g_mutex);
    std::vector<std::string> names;
    for (const auto& [name, factory] : factories()) {
        names.push_back(name);
    }
    return names;
}

} // namespace qsim
