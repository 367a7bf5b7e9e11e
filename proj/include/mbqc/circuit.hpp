// Copyright 2026 The mbqc-flow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/types.hpp"

namespace mbqc {

/// S(n, a): `input` measured at `angle`, entangled with every qubit of
/// `outputs` (sorted, n - 1 of them), X-corrected on `corrected`.
struct StarPattern {
    Vertex input;
    std::vector<Vertex> outputs;
    double angle;
    Vertex corrected;

    bool operator==(const StarPattern &) const = default;
};

struct StarDecomposition {
    std::vector<StarPattern> stars;
    /// Edges left between outputs once every measured qubit is removed.
    std::vector<Edge> residual;
};

/// Peels measured qubits off the graph in (level, id) order; each yields a
/// star over its neighbours in the shrinking graph. Throws
/// std::invalid_argument if `fl` is not a loop-free flow of `g` or the angle
/// map is not total on O^c.
StarDecomposition decompose_stars(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles);

enum class WireSource { input, plus };

struct Wire {
    int id;
    WireSource source;

    bool operator==(const Wire &) const = default;
};

struct GateCZ {
    int a;
    int b;
    bool operator==(const GateCZ &) const = default;
};

/// P(theta) = diag(1, e^{i theta}).
struct GatePhase {
    int wire;
    double theta;
    bool operator==(const GatePhase &) const = default;
};

struct GateH {
    int wire;
    bool operator==(const GateH &) const = default;
};

using Gate = std::variant<GateCZ, GatePhase, GateH>;

struct Circuit {
    /// Input wires first (ascending), then |+> ancillas (ascending).
    std::vector<Wire> wires;
    std::vector<Gate> gates;
    /// Wire carrying each output qubit, in sorted output order.
    std::vector<int> outputs;

    bool operator==(const Circuit &) const = default;

    std::size_t count_cz() const;
    std::size_t count_phase() const;
    std::size_t count_h() const;
};

/// Gates of one star acting on wire ids: CZ(in, w) per non-corrected output,
/// then P(-angle) and H on the input wire. `wire_of(v)` resolves qubits.
template <typename WireOf>
std::vector<Gate> star_to_gates(const StarPattern &s, WireOf wire_of) {
    std::vector<Gate> gates;
    const int in = wire_of(s.input);
    for (Vertex w : s.outputs) {
        if (w != s.corrected) {
            gates.push_back(GateCZ{in, wire_of(w)});
        }
    }
    gates.push_back(GatePhase{in, -s.angle});
    gates.push_back(GateH{in});
    return gates;
}

/// Star gates with each qubit id used as its own wire id.
std::vector<Gate> star_to_gates(const StarPattern &s);

/// Concatenates the star circuits. A star's corrected output continues on
/// the input's wire, so a wire is named after the first qubit of its chain
/// i, f(i), f(f(i)), ... and is an input wire iff that qubit is an input.
/// A residual output-output CZ is emitted as soon as both of its qubits
/// occupy their wires.
Circuit extract_circuit(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles);

inline constexpr std::size_t kMaxCircuitWires = 20;

/// Map from the input wires to the output wires (first listed = most
/// significant). Ancillas start in |+>. Throws std::length_error above
/// `max_wires`, std::invalid_argument for gates on undeclared wires.
Matrix simulate_circuit(const Circuit &c, std::size_t max_wires = kMaxCircuitWires);

}  // namespace mbqc
