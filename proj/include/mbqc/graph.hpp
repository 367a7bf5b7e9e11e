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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mbqc/types.hpp"

namespace mbqc {

/// Undirected edge. Construction through OpenGraphState stores u <= v.
struct Edge {
    Vertex u;
    Vertex v;

    bool operator==(const Edge &) const = default;
    auto operator<=>(const Edge &) const = default;
};

/// One broken rule. `code` is a stable machine-readable tag such as
/// "self-edge" or "F2"; `message` names the offending vertices.
struct Violation {
    std::string code;
    std::string message;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const {
        return violations.empty();
    }
    bool has(const std::string &code) const;
    std::string str() const;
};

/// An undirected graph with designated input and output vertex lists.
///
/// Construction never throws on malformed data: vertex, input and output
/// lists are sorted (duplicates kept) and each edge is stored with u <= v,
/// so that validate_graph can report what is wrong with the input. The
/// sorted input/output lists fix the tensor-factor order used by every
/// matrix produced downstream (first listed qubit = most significant bit).
class OpenGraphState {
   public:
    OpenGraphState() = default;
    OpenGraphState(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Vertex> inputs,
                   std::vector<Vertex> outputs);

    const std::vector<Vertex> &vertices() const {
        return vertices_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const std::vector<Vertex> &inputs() const {
        return inputs_;
    }
    const std::vector<Vertex> &outputs() const {
        return outputs_;
    }

    bool contains(Vertex v) const;
    bool is_input(Vertex v) const;
    bool is_output(Vertex v) const;
    bool adjacent(Vertex a, Vertex b) const;

    /// O^c, sorted.
    std::vector<Vertex> measured() const;
    /// I^c, sorted.
    std::vector<Vertex> prepared() const;

    /// G(v). Throws std::out_of_range for a vertex not in the graph.
    const std::vector<Vertex> &neighbors(Vertex v) const;

    /// (G, O, I): inputs and outputs swapped.
    OpenGraphState dual() const;

    bool operator==(const OpenGraphState &other) const;

   private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Vertex> inputs_;
    std::vector<Vertex> outputs_;
    std::map<Vertex, std::vector<Vertex>> adjacency_;
};

/// Free-function form of OpenGraphState::neighbors.
const std::vector<Vertex> &neighbors(const OpenGraphState &g, Vertex v);

ValidationResult validate_graph(const OpenGraphState &g);

/// A flow witness: the successor map f on O^c, a layering of all vertices
/// standing in for the partial order (u < v iff levels[u] < levels[v]), and
/// the vertices with f(i) = i (Pauli-Y loops).
struct Flow {
    std::map<Vertex, Vertex> f;
    std::map<Vertex, int> levels;
    std::set<Vertex> loops;

    /// Number of layers: 1 + max level, 0 when no levels are assigned.
    int depth() const;

    bool operator==(const Flow &) const = default;
};

/// Checks (F0)-(F2) of `fl` on `g` against `fl.levels`. With `allow_loops`,
/// a vertex listed in fl.loops may map to itself; (F1) is then waived for it
/// and (F2) requires every neighbour to sit strictly above it. Assumes
/// validate_graph(g) is ok.
ValidationResult validate_flow(const OpenGraphState &g, const Flow &fl, bool allow_loops = false);

}  // namespace mbqc
