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
#include <string>
#include <vector>

#include "qsim/linalg.hpp"

namespace qsim {

/// Identifier of the collapse PRNG, recorded in output metadata so that
/// sampled outcomes are reproducible across platforms.
inline constexpr const char* kCollapseRng = "splitmix64";

/// SplitMix64 generator (Steele, Lea, Flood / Vigna). Fully specified by its
/// seed, with no platform-dependent behaviour.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1) built from the top 53 bits.
    double next_unit();

private:
    std::uint64_t state_;
};

/// Full quantum state of an n-qubit register: 2^n complex amplitudes, with
/// squared magnitudes summing to 1.
struct StateVector {
    std::size_t n_qubits = 0;
    ComplexVector amplitudes;

    std::size_t dimension() const { return amplitudes.size(); }
};

/// The |0...0> state.
StateVector zero_state(std::size_t n_qubits);

/// Sum of squared amplitude magnitudes (1 for a valid state).
double norm_squared(const StateVector& s);

/// Per-basis-state probabilities re^2 + im^2.
std::vector<double> probabilities(const StateVector& s);

/// Measurement outcome: a single basis state.
struct CollapsedState {
    std::size_t n_qubits = 0;
    std::uint64_t basis_index = 0;

    /// Qubit 0 leftmost.
    std::string bitstring() const;
};

/// Samples a basis state by inverse-CDF over probabilities(s): cumulative
/// sums are accumulated left to right in basis order and the draw selects the
/// first index whose cumulative probability strictly exceeds it. Identical
/// (state, seed) pairs give identical outcomes, and indices with exactly zero
/// probability are never returned.
CollapsedState collapse(const StateVector& s, std::uint64_t seed);

/// Bra-ket listing of the amplitudes with magnitude greater than threshold,
/// e.g. "0.7071|00> + 0.7071|11>" (with U+27E9 kets). Qubit 0 is printed
/// leftmost in each bitstring.
std::string format_state(const StateVector& s, double threshold);

/// {"qubits": n, "amplitudes": [{"re": r, "im": i}, ...]} in basis order.
std::string state_to_json(const StateVector& s);

/// Collapse outcome with RNG metadata:
/// {"qubits": n, "basis_index": i, "bitstring": "...", "rng": "splitmix64",
///  "seed": s}.
std::string collapsed_to_json(const CollapsedState& c, std::uint64_t seed);

/// Index formatted as n bits, qubit 0 leftmost.
std::string bitstring(std::size_t n_qubits, std::uint64_t index);

} // namespace qsim
