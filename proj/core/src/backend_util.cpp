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

#include "backend_util.hpp"

#include "qsim/errors.hpp"

namespace qsim::detail {

void validate_instruction_placement(const Circuit& circuit) {
    const auto& steps = circuit.steps();
    for (std::size_t s = 0; s + 1 < steps.size(); ++s) {
        for (const Operation& op : steps[s].operations) {
            if (const auto* instr = std::get_if<Instruction>(&op)) {
                if (instr->kind == InstructionKind::Reset) {
                    throw ValidationError("reset is only supported in the final step");
                }
            }
        }
    }
}

} // namespace qsim::detail
