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

#include "qsim/circuit_text.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

std::string format_phi(double phi) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", phi);
    return buf;
}

std::optional<GateTag> tag_from_name(std::string_view name) {
    if (name == "H") return GateTag::H;
    if (name == "X") return GateTag::X;
    if (name == "Y") return GateTag::Y;
    if (name == "Z") return GateTag::Z;
    if (name == "S") return GateTag::S;
    if (name == "T") return GateTag::T;
    if (name == "R") return GateTag::R;
    return std::nullopt;
}

void write_operation(std::string& out, const Operation& op) {
    if (const auto* g = std::get_if<Gate>(&op)) {
        if (g->gate.tag == GateTag::R) {
            out += "R " + format_phi(g->gate.phi) + " " + std::to_string(g->target);
        } else {
            out += g->gate.name() + " " + std::to_string(g->target);
        }
    } else if (const auto* cg = std::get_if<ControlGate>(&op)) {
        const std::string ct = std::to_string(cg->control) + " " + std::to_string(cg->target);
        if (cg->gate.tag == GateTag::X) {
            out += "CNOT " + ct;
        } else if (cg->gate.tag == GateTag::R) {
            out += "CR " + format_phi(cg->gate.phi) + " " + ct;
        } else {
            out += "C" + cg->gate.name() + " " + ct;
        }
    } else if (const auto* fn = std::get_if<FunctionOp>(&op)) {
        out += "FN " + fn->name + " " + std::to_string(fn->first_qubit) + " " +
               std::to_string(fn->qubit_count);
    } else {
        const auto& instr = std::get<Instruction>(op);
        out += (instr.kind == InstructionKind::Measure ? "MEASURE " : "RESET ") +
               std::to_string(instr.target);
    }
    out += '\n';
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& line) {
    throw ValidationError("circuit text line " + std::to_string(line_no) +
                          ": cannot parse '" + line + "'");
}

} // namespace

std::string circuit_to_text(const Circuit& circuit) {
    std::string out;
    for (const Operation& op : circuit.flatten()) {
        write_operation(out, op);
    }
    return out;
}

Circuit circuit_from_text(std::string_view text, std::size_t n_qubits,
                          const GateRegistry& registry) {
    Circuit circuit(n_qubits);
    std::istringstream lines{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream in(line);
        std::string keyword;
        if (!(in >> keyword) || keyword.front() == '#') {
            continue;
        }

        if (keyword == "FN") {
            std::string name;
            std::size_t first = 0, count = 0;
            if (!(in >> name >> first >> count)) {
                bad_line(line_no, line);
            }
            circuit.add_function(name, first, count, registry);
        } else if (keyword == "MEASURE" || keyword == "RESET") {
            std::size_t target = 0;
            if (!(in >> target)) {
                bad_line(line_no, line);
            }
            circuit.add_instruction(keyword == "MEASURE" ? InstructionKind::Measure
                                                         : InstructionKind::Reset,
                                    target);
        } else if (keyword == "CNOT" || keyword == "CX") {
            std::size_t control = 0, target = 0;
            if (!(in >> control >> target)) {
                bad_line(line_no, line);
            }
            circuit.cnot(control, target);
        } else if (keyword == "CR") {
            double phi = 0.0;
            std::size_t control = 0, target = 0;
            if (!(in >> phi >> control >> target)) {
                bad_line(line_no, line);
            }
            circuit.cr(phi, control, target);
        } else if (keyword.size() == 2 && keyword.front() == 'C' &&
                   tag_from_name(keyword.substr(1))) {
            std::size_t control = 0, target = 0;
            if (!(in >> control >> target)) {
                bad_line(line_no, line);
            }
            circuit.add_control_gate({*tag_from_name(keyword.substr(1))}, control, target);
        } else if (keyword == "R") {
            double phi = 0.0;
            std::size_t target = 0;
            if (!(in >> phi >> target)) {
                bad_line(line_no, line);
            }
            circuit.r(phi, target);
        } else if (const auto tag = tag_from_name(keyword)) {
            std::size_t target = 0;
            if (!(in >> target)) {
                bad_line(line_no, line);
            }
            circuit.add_gate({*tag}, target);
        } else {
            bad_line(line_no, line);
        }

        std::string extra;
        if (in >> extra) {
            bad_line(line_no, line);
        }
    }
    return circuit;
}

} // namespace qsim
