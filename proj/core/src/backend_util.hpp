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

#include "qsim/circuit.hpp"

namespace qsim::detail {

// Rejects reset instructions anywhere but the final step: mid-circuit
// collapse is not defined by the backends. Measure instructions are recorded
// in the circuit and honored only by simulate_and_collapse at circuit end.
void validate_instruction_placement(const Circuit& circuit);

} // namespace qsim::detail
