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

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/types.hpp"

// Test-only enumeration helpers and reference implementations that share no
// code with the library routines they check.

namespace mbqc::support {

/// Calls `fn` for every graph on vertices 1..n (connected only, if asked)
/// and every choice of inputs and outputs.
void for_each_open_graph(int n, bool connected_only, const std::function<void(const OpenGraphState &)> &fn);

bool is_connected(const std::vector<Vertex> &vertices, const std::vector<Edge> &edges);

/// Erdos-Renyi graph on 1..n with uniformly random inputs and outputs.
OpenGraphState random_open_graph(std::mt19937_64 &rng, int n, double edge_probability = 0.5);

AngleMap random_angles(std::mt19937_64 &rng, const std::vector<Vertex> &vertices);

/// Haar-ish random unit vector (normalized complex Gaussian).
Vector random_state(std::mt19937_64 &rng, Eigen::Index dim);

/// Flow existence by enumerating every F0-compatible injective f (plus
/// loops when allowed) and testing the constraint relation for a cycle via
/// its transitive closure.
bool closure_flow_exists(const OpenGraphState &g, bool allow_loops);

/// Branch map computed over the full 2^|V| space with explicit Kronecker
/// products: measured qubits are mapped onto |0> by |0><bra| instead of being
/// removed, and the result is read off the all-zero measured subspace.
Matrix dense_branch_map(const Pattern &p, const std::string &outcomes);

/// H, CZ and friends as plain Eigen matrices.
Matrix hadamard_matrix();
Matrix cz_matrix();

}  // namespace mbqc::support
