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
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mbqc/graph.hpp"

namespace mbqc {

struct FlowSearchResult {
    bool found = false;
    Flow flow;      // meaningful only when found
    int depth = 0;  // 1 + max level; 0 when not found
};

/// Outcome of layering the constraint relation induced by a successor map.
/// Exactly one of `levels` / `cycle` is meaningful: when the relation has a
/// cycle, `cycle` lists it as v0 < v1 < ... < v0 (first vertex repeated).
struct DependencyOrder {
    std::map<Vertex, int> levels;
    std::vector<Vertex> cycle;

    bool acyclic() const {
        return cycle.empty();
    }
};

/// Coarsest layering satisfying (F1) and (F2) for the map `f`: every vertex
/// gets the length of the longest constraint chain ending at it. Vertices in
/// `loops` contribute no i < f(i) constraint.
DependencyOrder dependency_order(const OpenGraphState &g, const std::map<Vertex, Vertex> &f,
                                 const std::set<Vertex> &loops = {});

/// Backtracking flow search. Candidates for f(i) are tried in ascending id,
/// measured vertices are assigned in ascending id, and the first complete
/// assignment with an acyclic constraint relation wins. With `allow_loops`
/// every measured vertex may take f(i) = i, but a loop-free flow is returned
/// whenever one exists.
FlowSearchResult find_flow(const OpenGraphState &g, bool allow_loops = false);

/// As find_flow, restricting loop candidates to `loopable`.
FlowSearchResult find_flow(const OpenGraphState &g, const std::set<Vertex> &loopable);

/// Flow searches on (G, I, O) and on the dual (G, O, I).
struct BiflowResult {
    FlowSearchResult forward;
    FlowSearchResult reverse;

    bool exists() const {
        return forward.found && reverse.found;
    }
};

BiflowResult find_biflow(const OpenGraphState &g);

inline constexpr std::size_t kDefaultOracleBound = 7;

/// Exhaustive reference search: every injective map O^c -> I^c (plus f(i) = i
/// when `allow_loops`) that satisfies (F0) is layered with dependency_order.
/// Throws std::length_error when |V| exceeds `max_vertices`.
FlowSearchResult brute_force_flow_oracle(const OpenGraphState &g, bool allow_loops = false,
                                         std::size_t max_vertices = kDefaultOracleBound);

}  // namespace mbqc
