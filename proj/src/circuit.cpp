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

#include "mbqc/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mbqc/ops.hpp"
#include "mbqc/state.hpp"

namespace mbqc {

namespace {

std::vector<Vertex> level_order(const Flow &fl, const std::vector<Vertex> &measured) {
    std::vector<Vertex> order = measured;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return fl.levels.at(a) < fl.levels.at(b); });
    return order;
}

template <typename T>
std::size_t count_of(const std::vector<Gate> &gates) {
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [](const Gate &g) { return std::holds_alternative<T>(g); }));
}

}  // namespace

StarDecomposition decompose_stars(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles) {
    if (!fl.loops.empty()) {
        throw std::invalid_argument("star decomposition needs a loop-free flow");
    }
    ValidationResult r = validate_flow(g, fl);
    if (!r.ok()) {
        throw std::invalid_argument("invalid flow: " + r.str());
    }
    const std::vector<Vertex> measured = g.measured();
    for (Vertex i : measured) {
        if (!meas_angles.contains(i)) {
            throw std::invalid_argument("missing measurement angle for qubit " + std::to_string(i));
        }
    }

    std::map<Vertex, std::set<Vertex>> adj;
    for (Vertex v : g.vertices()) {
        adj[v];
    }
    for (const Edge &e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }

    StarDecomposition d;
    for (Vertex i : level_order(fl, measured)) {
        StarPattern s{i, std::vector<Vertex>(adj[i].begin(), adj[i].end()), meas_angles.at(i), fl.f.at(i)};
        for (Vertex w : adj[i]) {
            adj[w].erase(i);
        }
        adj.erase(i);
        d.stars.push_back(std::move(s));
    }
    for (const auto &[u, ns] : adj) {
        for (Vertex v : ns) {
            if (u < v) {
                d.residual.push_back({u, v});
            }
        }
    }
    return d;
}

std::size_t Circuit::count_cz() const {
    return count_of<GateCZ>(gates);
}

std::size_t Circuit::count_phase() const {
    return count_of<GatePhase>(gates);
}

std::size_t Circuit::count_h() const {
    return count_of<GateH>(gates);
}

std::vector<Gate> star_to_gates(const StarPattern &s) {
    return star_to_gates(s, [](Vertex v) { return v; });
}

Circuit extract_circuit(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles) {
    StarDecomposition d = decompose_stars(g, fl, meas_angles);

    // Chain starts: qubits that are not f of anything.
    std::set<Vertex> images;
    for (const auto &[i, fi] : fl.f) {
        images.insert(fi);
    }
    std::map<Vertex, int> wire_of;
    Circuit c;
    for (Vertex v : g.inputs()) {
        c.wires.push_back({v, WireSource::input});
        wire_of[v] = v;
    }
    for (Vertex v : g.prepared()) {
        if (!images.contains(v)) {
            c.wires.push_back({v, WireSource::plus});
            wire_of[v] = v;
        }
    }
    auto resolve = [&](Vertex v) {
        auto it = wire_of.find(v);
        if (it == wire_of.end()) {
            throw std::logic_error("qubit " + std::to_string(v) + " has no wire yet");
        }
        return it->second;
    };

    std::vector<Edge> pending = d.residual;
    auto flush_residual = [&]() {
        std::erase_if(pending, [&](const Edge &e) {
            if (wire_of.contains(e.u) && wire_of.contains(e.v)) {
                c.gates.push_back(GateCZ{wire_of[e.u], wire_of[e.v]});
                return true;
            }
            return false;
        });
    };
    flush_residual();
    for (const StarPattern &s : d.stars) {
        for (const Gate &gate : star_to_gates(s, resolve)) {
            c.gates.push_back(gate);
        }
        wire_of[s.corrected] = wire_of.at(s.input);
        wire_of.erase(s.input);
        flush_residual();
    }
    if (!pending.empty()) {
        throw std::logic_error("residual entangler left without wires");
    }
    for (Vertex o : g.outputs()) {
        c.outputs.push_back(resolve(o));
    }
    return c;
}

Matrix simulate_circuit(const Circuit &c, std::size_t max_wires) {
    if (c.wires.size() > max_wires) {
        throw std::length_error("circuit has " + std::to_string(c.wires.size()) + " wires, bound is " +
                                std::to_string(max_wires));
    }
    std::vector<Vertex> inputs;
    for (const Wire &w : c.wires) {
        if (w.source == WireSource::input) {
            inputs.push_back(w.id);
        }
    }
    BatchedState state(inputs);
    for (const Wire &w : c.wires) {
        if (w.source == WireSource::plus) {
            auto [a0, a1] = ops::plus_state(0);
            state.prepare(w.id, a0, a1);
        }
    }
    auto check = [&](int w) {
        if (!state.is_live(w)) {
            throw std::invalid_argument("gate on undeclared wire " + std::to_string(w));
        }
    };
    for (const Gate &gate : c.gates) {
        if (auto *cz = std::get_if<GateCZ>(&gate)) {
            check(cz->a);
            check(cz->b);
            state.cz(cz->a, cz->b);
        } else if (auto *p = std::get_if<GatePhase>(&gate)) {
            check(p->wire);
            state.apply(p->wire, ops::phase_gate(p->theta));
        } else if (auto *h = std::get_if<GateH>(&gate)) {
            check(h->wire);
            state.apply(h->wire, ops::hadamard());
        }
    }
    return state.to_matrix(c.outputs);
}

}  // namespace mbqc
