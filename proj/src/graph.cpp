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

#include "mbqc/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mbqc {

namespace {

bool sorted_contains(const std::vector<Vertex> &sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

void add_violation(ValidationResult &r, std::string code, std::string message) {
    r.violations.push_back({std::move(code), std::move(message)});
}

}  // namespace

bool ValidationResult::has(const std::string &code) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation &v) {
        return v.code == code;
    });
}

std::string ValidationResult::str() const {
    std::ostringstream out;
    for (const auto &v : violations) {
        out << v.code << ": " << v.message << "\n";
    }
    return out.str();
}

OpenGraphState::OpenGraphState(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Vertex> inputs,
                               std::vector<Vertex> outputs)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(inputs_.begin(), inputs_.end());
    std::sort(outputs_.begin(), outputs_.end());
    for (auto &e : edges_) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges_.begin(), edges_.end());

    for (Vertex v : vertices_) {
        adjacency_[v];
    }
    for (const auto &e : edges_) {
        if (e.u == e.v) {
            continue;
        }
        auto add = [&](Vertex a, Vertex b) {
            auto it = adjacency_.find(a);
            if (it != adjacency_.end() && !sorted_contains(it->second, b)) {
                it->second.insert(std::upper_bound(it->second.begin(), it->second.end(), b), b);
            }
        };
        add(e.u, e.v);
        add(e.v, e.u);
    }
}

bool OpenGraphState::contains(Vertex v) const {
    return sorted_contains(vertices_, v);
}

bool OpenGraphState::is_input(Vertex v) const {
    return sorted_contains(inputs_, v);
}

bool OpenGraphState::is_output(Vertex v) const {
    return sorted_contains(outputs_, v);
}

bool OpenGraphState::adjacent(Vertex a, Vertex b) const {
    auto it = adjacency_.find(a);
    return it != adjacency_.end() && sorted_contains(it->second, b);
}

std::vector<Vertex> OpenGraphState::measured() const {
    std::vector<Vertex> out;
    for (Vertex v : vertices_) {
        if (!is_output(v) && (out.empty() || out.back() != v)) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> OpenGraphState::prepared() const {
    std::vector<Vertex> out;
    for (Vertex v : vertices_) {
        if (!is_input(v) && (out.empty() || out.back() != v)) {
            out.push_back(v);
        }
    }
    return out;
}

const std::vector<Vertex> &OpenGraphState::neighbors(Vertex v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) {
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    }
    return it->second;
}

OpenGraphState OpenGraphState::dual() const {
    return OpenGraphState(vertices_, edges_, outputs_, inputs_);
}

bool OpenGraphState::operator==(const OpenGraphState &other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ && inputs_ == other.inputs_ &&
           outputs_ == other.outputs_;
}

const std::vector<Vertex> &neighbors(const OpenGraphState &g, Vertex v) {
    return g.neighbors(v);
}

ValidationResult validate_graph(const OpenGraphState &g) {
    ValidationResult r;
    const auto &vs = g.vertices();
    for (size_t k = 0; k < vs.size(); k++) {
        if (vs[k] < 0) {
            add_violation(r, "negative-vertex", "vertex " + std::to_string(vs[k]) + " is negative");
        }
        if (k > 0 && vs[k] == vs[k - 1]) {
            add_violation(r, "duplicate-vertex", "vertex " + std::to_string(vs[k]) + " listed twice");
        }
    }
    const auto &es = g.edges();
    for (size_t k = 0; k < es.size(); k++) {
        const auto &e = es[k];
        std::string name = "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
        if (e.u == e.v) {
            add_violation(r, "self-edge", "edge " + name + " is a self-edge");
        }
        if (!g.contains(e.u) || !g.contains(e.v)) {
            add_violation(r, "edge-endpoint-not-vertex", "edge " + name + " has an endpoint outside V");
        }
        if (k > 0 && es[k - 1] == e) {
            add_violation(r, "duplicate-edge", "edge " + name + " listed twice");
        }
    }
    auto check_subset = [&](const std::vector<Vertex> &list, const std::string &what) {
        for (size_t k = 0; k < list.size(); k++) {
            if (!g.contains(list[k])) {
                add_violation(r, what + "-not-vertex", what + " " + std::to_string(list[k]) + " is not a vertex");
            }
            if (k > 0 && list[k] == list[k - 1]) {
                add_violation(r, "duplicate-" + what, what + " " + std::to_string(list[k]) + " listed twice");
            }
        }
    };
    check_subset(g.inputs(), "input");
    check_subset(g.outputs(), "output");
    return r;
}

int Flow::depth() const {
    int top = -1;
    for (const auto &[v, level] : levels) {
        top = std::max(top, level);
    }
    return top + 1;
}

ValidationResult validate_flow(const OpenGraphState &g, const Flow &fl, bool allow_loops) {
    ValidationResult r;
    auto name = [](Vertex v) {
        return std::to_string(v);
    };

    for (Vertex v : g.vertices()) {
        if (!fl.levels.count(v)) {
            add_violation(r, "missing-level", "vertex " + name(v) + " has no level");
        }
    }
    for (const auto &[v, level] : fl.levels) {
        if (!g.contains(v)) {
            add_violation(r, "unknown-vertex", "level assigned to non-vertex " + name(v));
        } else if (level < 0) {
            add_violation(r, "negative-level", "vertex " + name(v) + " has negative level");
        }
    }
    if (!allow_loops && !fl.loops.empty()) {
        add_violation(r, "loops-not-allowed", "flow has loop vertices but loops are not enabled");
    }
    for (Vertex v : fl.loops) {
        auto it = fl.f.find(v);
        if (it == fl.f.end() || it->second != v) {
            add_violation(r, "loop-mismatch", "loop vertex " + name(v) + " does not satisfy f(v) = v");
        }
    }

    const auto measured = g.measured();
    for (Vertex i : measured) {
        if (!fl.f.count(i)) {
            add_violation(r, "domain", "measured vertex " + name(i) + " has no f value");
        }
    }

    auto level_of = [&](Vertex v) -> const int * {
        auto it = fl.levels.find(v);
        return it == fl.levels.end() ? nullptr : &it->second;
    };

    std::map<Vertex, Vertex> preimage;
    for (const auto &[i, fi] : fl.f) {
        if (!g.contains(i) || g.is_output(i)) {
            add_violation(r, "domain", "f defined on " + name(i) + " which is not in O^c");
            continue;
        }
        if (!g.contains(fi) || g.is_input(fi)) {
            add_violation(r, "range", "f(" + name(i) + ") = " + name(fi) + " is not in I^c");
            continue;
        }
        auto [slot, inserted] = preimage.emplace(fi, i);
        if (!inserted) {
            add_violation(r, "not-injective",
                          "f(" + name(slot->second) + ") = f(" + name(i) + ") = " + name(fi));
        }

        bool loop = fi == i && allow_loops && fl.loops.count(i);
        const int *li = level_of(i);
        if (!loop) {
            if (!g.adjacent(i, fi)) {
                add_violation(r, "F0", "{" + name(i) + "," + name(fi) + "} is not an edge");
            }
            const int *lf = level_of(fi);
            if (li && lf && !(*lf > *li)) {
                add_violation(r, "F1", "f(" + name(i) + ") = " + name(fi) + " is not above " + name(i));
            }
        }
        if (!li) {
            continue;
        }
        for (Vertex k : g.neighbors(fi)) {
            if (k == i) {
                continue;
            }
            const int *lk = level_of(k);
            if (lk && !(*lk > *li)) {
                add_violation(r, "F2", "neighbour " + name(k) + " of f(" + name(i) + ") = " + name(fi) +
                                           " is not above " + name(i));
            }
        }
    }
    return r;
}

}  // namespace mbqc
