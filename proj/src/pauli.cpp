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

#include "mbqc/pauli.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace mbqc {

namespace {

/// Qubits measured at angle 0.
std::set<Vertex> x_measured(const Pattern &p) {
    std::set<Vertex> r;
    for (const Command &c : p.commands) {
        if (auto *m = std::get_if<Measure>(&c); m && angle_near(m->angle, 0, kPauliAngleTolerance)) {
            r.insert(m->qubit);
        }
    }
    return r;
}

bool droppable(const Command &c, const std::set<Vertex> &targets) {
    auto *x = std::get_if<CorrectX>(&c);
    return x && targets.contains(x->qubit);
}

}  // namespace

FlowSearchResult find_flow_with_loops(const OpenGraphState &g, const std::set<Vertex> &y_qubits) {
    for (Vertex v : y_qubits) {
        if (!g.contains(v) || g.is_output(v)) {
            throw std::invalid_argument("Y-measured qubit " + std::to_string(v) + " is not a measured vertex");
        }
    }
    return find_flow(g, y_qubits);
}

Pattern drop_x_corrections(const Pattern &p) {
    const std::set<Vertex> targets = x_measured(p);
    Pattern q = p;
    std::erase_if(q.commands, [&](const Command &c) { return droppable(c, targets); });
    return q;
}

int dropped_x_sign(const Pattern &p, const std::string &outcomes) {
    const std::vector<Vertex> order = p.measurement_order();
    if (outcomes.size() != order.size()) {
        throw std::invalid_argument("outcome string length does not match the pattern");
    }
    std::map<Vertex, int> bit;
    for (std::size_t k = 0; k < order.size(); k++) {
        bit[order[k]] = outcomes[k] - '0';
    }
    const std::set<Vertex> targets = x_measured(p);
    auto parity = [&](const Signals &signals) {
        int value = 0;
        for (Vertex s : signals) {
            value ^= bit.at(s);
        }
        return value;
    };
    int sign = 1;
    for (std::size_t k = 0; k < p.commands.size(); k++) {
        if (!droppable(p.commands[k], targets)) {
            continue;
        }
        const auto &x = std::get<CorrectX>(p.commands[k]);
        // Z corrections applied between this X and the measurement flip the
        // bra the X meets: <t|Z = <t^1|.
        int effective = bit.at(x.qubit);
        for (std::size_t m = k + 1; m < p.commands.size(); m++) {
            const Command &c = p.commands[m];
            if (const auto *z = std::get_if<CorrectZ>(&c); z && z->qubit == x.qubit) {
                effective ^= parity(z->signals);
            } else if (const auto *meas = std::get_if<Measure>(&c); meas && meas->qubit == x.qubit) {
                break;
            }
        }
        if (parity(x.signals) && effective) {
            sign = -sign;
        }
    }
    return sign;
}

DeterminismVerdict classify_loop_pattern(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles,
                                         const ClassifyOptions &options) {
    return classify_determinism(synthesize(g, fl, meas_angles), options);
}

std::vector<LoopAngleProbe> probe_generic_loop_angles(const OpenGraphState &g, const Flow &fl,
                                                      const AngleMap &meas_angles, std::size_t samples,
                                                      std::uint64_t seed, double min_distance) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    ClassifyOptions options;
    options.angle_samples = 0;
    options.seed = seed;
    std::vector<LoopAngleProbe> probes;
    for (std::size_t k = 0; k < samples; k++) {
        AngleMap angles = meas_angles;
        LoopAngleProbe probe;
        for (Vertex v : fl.loops) {
            double a;
            do {
                a = dist(rng);
            } while (angle_near(a, kPi / 2, min_distance));
            angles[v] = a;
            probe.loop_angles[v] = a;
        }
        probe.verdict = classify_determinism(synthesize(g, fl, angles), options);
        probes.push_back(std::move(probe));
    }
    return probes;
}

}  // namespace mbqc
