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

#include "qsim/gates.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

ComplexMatrix phase_matrix(double phi) {
    if (!std::isfinite(phi)) {
        throw ArgumentError("phase gate: phi must be finite");
    }
    ComplexMatrix m(2, 2);
    m.re(0, 0) = 1.0;
    m.re(1, 1) = std::cos(phi);
    m.im(1, 1) = std::sin(phi);
    return m;
}

} // namespace

ComplexMatrix gate_matrix(const GateType& g) {
    switch (g.tag) {
    case GateTag::H: {
        const double s = std::sqrt(0.5);
        ComplexMatrix m(2, 2);
        m.re(0, 0) = s;
        m.re(0, 1) = s;
        m.re(1, 0) = s;
        m.re(1, 1) = -s;
        return m;
    }
    case GateTag::X: {
        ComplexMatrix m(2, 2);
        m.re(0, 1) = 1.0;
        m.re(1, 0) = 1.0;
        return m;
    }
    case GateTag::Y: {
        ComplexMatrix m(2, 2);
        m.im(0, 1) = -1.0;
        m.im(1, 0) = 1.0;
        return m;
    }
    case GateTag::Z: {
        ComplexMatrix m(2, 2);
        m.re(0, 0) = 1.0;
        m.re(1, 1) = -1.0;
        return m;
    }
    case GateTag::S:
        return phase_matrix(std::numbers::pi / 2.0);
    case GateTag::T:
        return phase_matrix(std::numbers::pi / 4.0);
    case GateTag::R:
        return phase_matrix(g.phi);
    }
    throw ArgumentError("unknown gate tag");
}

ComplexMatrix controlled_unitary(const ComplexMatrix& u, std::size_t control_pos,
                                 std::size_t target_pos, std::size_t span) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw ShapeError("controlled_unitary: u must be 2x2");
    }
    if (span < 2 || span > 30) {
        throw ArgumentError("controlled_unitary: span must be in [2, 30]");
    }
    if (control_pos == target_pos || control_pos >= span || target_pos >= span) {
        throw ArgumentError("controlled_unitary: invalid control/target positions");
    }
    const std::size_t dim = std::size_t{1} << span;
    const std::size_t control_mask = std::size_t{1} << (span - 1 - control_pos);
    const std::size_t target_mask = std::size_t{1} << (span - 1 - target_pos);

    ComplexMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        if ((col & control_mask) == 0) {
            m.re(col, col) = 1.0;
            continue;
        }
        // Control is set: column is u applied to the target bit's subspace.
        const std::size_t tbit = (col & target_mask) ? 1 : 0;
        const std::size_t row0 = col & ~target_mask;
        const std::size_t row1 = col | target_mask;
        m.re(row0, col) = u.re(0, tbit);
        m.im(row0, col) = u.im(0, tbit);
        m.re(row1, col) = u.re(1, tbit);
        m.im(row1, col) = u.im(1, tbit);
    }
    return m;
}

void GateRegistry::register_function(const std::string& name, ComplexMatrix m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("registry: matrix for '" + name + "' is not square");
    }
    if (m.rows() < 2 || !std::has_single_bit(m.rows())) {
        throw ValidationError("registry: matrix dimension for '" + name +
                              "' must be a power of two >= 2, got " +
                              std::to_string(m.rows()));
    }
    if (!is_unitary(m, kRegistryUnitaryTol)) {
        throw ValidationError("registry: matrix for '" + name + "' is not unitary");
    }
    entries_.insert_or_assign(name, std::move(m));
}

const ComplexMatrix& GateRegistry::lookup(std::string_view name) const {
    const auto it = entries_.find(name);
    if (it == entries_.end()) {
        throw LookupError("registry: no function named '" + std::string(name) + "'");
    }
    return it->second;
}

bool GateRegistry::contains(std::string_view name) const {
    return entries_.find(name) != entries_.end();
}

} // namespace qsim
