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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "support/test_util.hpp"

using namespace qsim;
using test::mat;

namespace {

// Expands control/target positions within a span to the expected permutation
// action of a controlled-X: flip the target bit when the control bit is set.
std::size_t cx_permutation(std::size_t basis, std::size_t control_pos,
                           std::size_t target_pos, std::size_t span) {
    const std::size_t cmask = std::size_t{1} << (span - 1 - control_pos);
    const std::size_t tmask = std::size_t{1} << (span - 1 - target_pos);
    return (basis & cmask) ? (basis ^ tmask) : basis;
}

} // namespace

TEST_CASE("standard gate matrices match their definitions") {
    const double s = std::sqrt(0.5);
    CHECK(max_entry_diff(gate_matrix(GateType::h()), mat(2, 2, {s, s, s, -s})) == 0.0);
    CHECK(max_entry_diff(gate_matrix(GateType::x()), mat(2, 2, {0, 1, 1, 0})) == 0.0);
    CHECK(max_entry_diff(gate_matrix(GateType::y()),
                         mat(2, 2, {0, {0, -1}, {0, 1}, 0})) == 0.0);
    CHECK(max_entry_diff(gate_matrix(GateType::z()), mat(2, 2, {1, 0, 0, -1})) == 0.0);

    // R(0) is the identity, S = R(pi/2) has i in the corner.
    CHECK(max_entry_diff(gate_matrix(GateType::r(0.0)), ComplexMatrix::identity(2)) == 0.0);
    const auto s_gate = gate_matrix(GateType::s());
    CHECK(s_gate.re(1, 1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s_gate.im(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
    const auto t_gate = gate_matrix(GateType::t());
    CHECK(t_gate.re(1, 1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(t_gate.im(1, 1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("every standard gate is unitary at 1e-12") {
    for (const GateType g : {GateType::h(), GateType::x(), GateType::y(), GateType::z(),
                             GateType::s(), GateType::t(), GateType::r(0.3),
                             GateType::r(-2.5)}) {
        CAPTURE(g.name());
        CHECK(is_unitary(gate_matrix(g), 1e-12));
    }
}

TEST_CASE("non-finite phase is rejected") {
    CHECK_THROWS_AS(GateType::r(std::numeric_limits<double>::infinity()), ArgumentError);
    CHECK_THROWS_AS(GateType::r(std::nan("")), ArgumentError);
}

TEST_CASE("controlled_unitary builds CNOT") {
    const auto cx = controlled_unitary(gate_matrix(GateType::x()), 0, 1, 2);
    CHECK(max_entry_diff(cx, mat(4, 4,
                                 {1, 0, 0, 0,
                                  0, 1, 0, 0,
                                  0, 0, 0, 1,
                                  0, 0, 1, 0})) == 0.0);
}

TEST_CASE("controlled_unitary with control below target") {
    const auto m = controlled_unitary(gate_matrix(GateType::x()), 1, 0, 2);
    // Ones at (0,0), (3,1), (2,2), (1,3).
    CHECK(m.re(0, 0) == 1.0);
    CHECK(m.re(3, 1) == 1.0);
    CHECK(m.re(2, 2) == 1.0);
    CHECK(m.re(1, 3) == 1.0);
    double total = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            total += m.re(i, j) + m.im(i, j);
        }
    }
    CHECK(total == 4.0);
}

TEST_CASE("controlled_unitary spans a non-adjacent pair") {
    const auto m = controlled_unitary(gate_matrix(GateType::x()), 0, 2, 3);
    for (std::size_t col = 0; col < 8; ++col) {
        const std::size_t row = cx_permutation(col, 0, 2, 3);
        CHECK(m.re(row, col) == 1.0);
    }
    // Fixes 0-3, swaps 4<->5 and 6<->7.
    CHECK(m.re(0, 0) == 1.0);
    CHECK(m.re(5, 4) == 1.0);
    CHECK(m.re(7, 6) == 1.0);
}

TEST_CASE("controlled identity is the identity") {
    for (std::size_t span : {2, 3, 4}) {
        const auto m = controlled_unitary(ComplexMatrix::identity(2), 0, span - 1, span);
        CHECK(max_entry_diff(m, ComplexMatrix::identity(std::size_t{1} << span)) == 0.0);
    }
}

TEST_CASE("controlled_unitary stays unitary for arbitrary u") {
    const auto u = gate_matrix(GateType::r(1.234));
    for (std::size_t span = 2; span <= 4; ++span) {
        for (std::size_t c = 0; c < span; ++c) {
            for (std::size_t t = 0; t < span; ++t) {
                if (c == t) {
                    continue;
                }
                CHECK(is_unitary(controlled_unitary(u, c, t, span), 1e-10));
            }
        }
    }
}

TEST_CASE("adjacent control above target equals the projector construction") {
    // P0 (x) I + P1 (x) u, with the control one position above the target.
    const auto u = gate_matrix(GateType::h());
    auto expect = ComplexMatrix(4, 4);
    const auto i2 = ComplexMatrix::identity(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            expect.re(i, j) = i2.re(i, j);
            expect.re(2 + i, 2 + j) = u.re(i, j);
            expect.im(2 + i, 2 + j) = u.im(i, j);
        }
    }
    CHECK(max_entry_diff(controlled_unitary(u, 0, 1, 2), expect) == 0.0);
}

TEST_CASE("controlled_unitary argument validation") {
    const auto x = gate_matrix(GateType::x());
    CHECK_THROWS_AS(controlled_unitary(x, 0, 0, 2), ArgumentError);
    CHECK_THROWS_AS(controlled_unitary(x, 0, 2, 2), ArgumentError);
    CHECK_THROWS_AS(controlled_unitary(x, 0, 1, 1), ArgumentError);
    CHECK_THROWS_AS(controlled_unitary(ComplexMatrix::identity(4), 0, 1, 2), ShapeError);
}

TEST_CASE("registry stores, replaces and validates") {
    GateRegistry reg;
    const auto cx = controlled_unitary(gate_matrix(GateType::x()), 0, 1, 2);
    reg.register_function("cx", cx);
    CHECK(reg.contains("cx"));
    CHECK(max_entry_diff(reg.lookup("cx"), cx) == 0.0);

    // Re-registration replaces.
    reg.register_function("cx", ComplexMatrix::identity(4));
    CHECK(max_entry_diff(reg.lookup("cx"), ComplexMatrix::identity(4)) == 0.0);

    CHECK_THROWS_AS(reg.lookup("missing"), LookupError);
    CHECK_THROWS_AS(reg.register_function("bad", ComplexMatrix::identity(3)),
                    ValidationError);
    CHECK_THROWS_AS(reg.register_function("bad", mat(2, 2, {1, 0, 0, 2})),
                    ValidationError);
    CHECK_FALSE(reg.contains("bad"));
}
