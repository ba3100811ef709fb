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

#include "qsim/state.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "qsim/errors.hpp"

namespace qsim {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

StateVector zero_state(std::size_t n_qubits) {
    if (n_qubits < 1) {
        throw ArgumentError("state must have at least one qubit");
    }
    if (n_qubits > 30) {
        throw ArgumentError("state vectors above 30 qubits are not supported");
    }
    StateVector s{n_qubits, ComplexVector(std::size_t{1} << n_qubits)};
    s.amplitudes.re[0] = 1.0;
    return s;
}

double norm_squared(const StateVector& s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        sum += s.amplitudes.re[i] * s.amplitudes.re[i] +
               s.amplitudes.im[i] * s.amplitudes.im[i];
    }
    return sum;
}

std::vector<double> probabilities(const StateVector& s) {
    std::vector<double> p(s.dimension());
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        p[i] = s.amplitudes.re[i] * s.amplitudes.re[i] +
               s.amplitudes.im[i] * s.amplitudes.im[i];
    }
    return p;
}

std::string bitstring(std::size_t n_qubits, std::uint64_t index) {
    std::string bits(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if ((index >> (n_qubits - 1 - q)) & 1) {
            bits[q] = '1';
        }
    }
    return bits;
}

std::string CollapsedState::bitstring() const {
    return qsim::bitstring(n_qubits, basis_index);
}

CollapsedState collapse(const StateVector& s, std::uint64_t seed) {
    const std::vector<double> p = probabilities(s);
    const double u = SplitMix64(seed).next_unit();

    double cumulative = 0.0;
    std::uint64_t fallback = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            fallback = i;
        }
        cumulative += p[i];
        if (cumulative > u) {
            return {s.n_qubits, i};
        }
    }
    // Floating-point shortfall: the cumulative sum ended below the draw.
    return {s.n_qubits, fallback};
}

std::string format_state(const StateVector& s, double threshold) {
    if (threshold < 0.0) {
        throw ArgumentError("format threshold must be non-negative");
    }
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        const double re = s.amplitudes.re[i];
        const double im = s.amplitudes.im[i];
        if (std::hypot(re, im) <= threshold) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (std::abs(im) < 1e-12) {
            std::snprintf(buf, sizeof buf, "%.4f", re);
        } else if (std::abs(re) < 1e-12) {
            std::snprintf(buf, sizeof buf, "%.4fi", im);
        } else {
            std::snprintf(buf, sizeof buf, "(%.4f%+.4fi)", re, im);
        }
        out += buf;
        out += "|" + bitstring(s.n_qubits, i) + "⟩";
    }
    return out;
}

std::string state_to_json(const StateVector& s) {
    nlohmann::ordered_json j;
    j["qubits"] = s.n_qubits;
    auto& amps = j["amplitudes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        amps.push_back({{"re", s.amplitudes.re[i]}, {"im", s.amplitudes.im[i]}});
    }
    return j.dump();
}

std::string collapsed_to_json(const CollapsedState& c, std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["qubits"] = c.n_qubits;
    j["basis_index"] = c.basis_index;
    j["bitstring"] = c.bitstring();
    j["rng"] = kCollapseRng;
    j["seed"] = seed;
    return j.dump();
}

} // namespace qsim
