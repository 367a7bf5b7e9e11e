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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mbqc::support {

bool is_connected(const std::vector<Vertex> &vertices, const std::vector<Edge> &edges) {
    if (vertices.empty()) {
        return true;
    }
    std::set<Vertex> seen{vertices.front()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Edge &e : edges) {
            if (seen.contains(e.u) != seen.contains(e.v)) {
                seen.insert(e.u);
                seen.insert(e.v);
                grew = true;
            }
        }
    }
    return seen.size() == vertices.size();
}

void for_each_open_graph(int n, bool connected_only, const std::function<void(const OpenGraphState &)> &fn) {
    std::vector<Vertex> vertices;
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; u++) {
        vertices.push_back(u);
        for (int v = u + 1; v <= n; v++) {
            pairs.push_back({u, v});
        }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); mask++) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); k++) {
            if ((mask >> k) & 1) {
                edges.push_back(pairs[k]);
            }
        }
        if (connected_only && !is_connected(vertices, edges)) {
            continue;
        }
        for (int in = 0; in < (1 << n); in++) {
            for (int out = 0; out < (1 << n); out++) {
                std::vector<Vertex> inputs, outputs;
                for (int k = 0; k < n; k++) {
                    if ((in >> k) & 1) {
                        inputs.push_back(k + 1);
                    }
                    if ((out >> k) & 1) {
                        outputs.push_back(k + 1);
                    }
                }
                fn(OpenGraphState(vertices, edges, inputs, outputs));
            }
        }
    }
}

OpenGraphState random_open_graph(std::mt19937_64 &rng, int n, double edge_probability) {
    std::bernoulli_distribution edge(edge_probability);
    std::bernoulli_distribution member(0.5);
    std::vector<Vertex> vertices, inputs, outputs;
    std::vector<Edge> edges;
    for (int u = 1; u <= n; u++) {
        vertices.push_back(u);
        for (int v = u + 1; v <= n; v++) {
            if (edge(rng)) {
                edges.push_back({u, v});
            }
        }
        if (member(rng)) {
            inputs.push_back(u);
        }
        if (member(rng)) {
            outputs.push_back(u);
        }
    }
    return OpenGraphState(vertices, edges, inputs, outputs);
}

AngleMap random_angles(std::mt19937_64 &rng, const std::vector<Vertex> &vertices) {
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    AngleMap a;
    for (Vertex v : vertices) {
        a[v] = angle(rng);
    }
    return a;
}

Vector random_state(std::mt19937_64 &rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss;
    Vector v(dim);
    for (Eigen::Index k = 0; k < dim; k++) {
        v(k) = Complex(gauss(rng), gauss(rng));
    }
    return v.normalized();
}

bool closure_flow_exists(const OpenGraphState &g, bool allow_loops) {
    const std::vector<Vertex> measured = g.measured();
    const std::vector<Vertex> prepared = g.prepared();
    const std::vector<Vertex> &vs = g.vertices();
    const std::size_t n = vs.size();
    std::map<Vertex, std::size_t> idx;
    for (std::size_t k = 0; k < n; k++) {
        idx[vs[k]] = k;
    }
    std::map<Vertex, Vertex> f;
    std::set<Vertex> used;

    auto acyclic = [&]() {
        std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
        for (const auto &[i, fi] : f) {
            if (fi != i) {
                below[idx[i]][idx[fi]] = 1;
            }
            for (Vertex k : g.neighbors(fi)) {
                if (k != i) {
                    below[idx[i]][idx[k]] = 1;
                }
            }
        }
        for (std::size_t m = 0; m < n; m++) {
            for (std::size_t a = 0; a < n; a++) {
                for (std::size_t b = 0; b < n; b++) {
                    if (below[a][m] && below[m][b]) {
                        below[a][b] = 1;
                    }
                }
            }
        }
        for (std::size_t a = 0; a < n; a++) {
            if (below[a][a]) {
                return false;
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == measured.size()) {
            return acyclic();
        }
        const Vertex i = measured[pos];
        for (Vertex t : prepared) {
            if (used.contains(t) || (t == i ? !allow_loops : !g.adjacent(i, t))) {
                continue;
            }
            used.insert(t);
            f[i] = t;
            if (rec(pos + 1)) {
                return true;
            }
            used.erase(t);
            f.erase(i);
        }
        return false;
    };
    return rec(0);
}

namespace {

/// Single-qubit operator `m` on the qubit at position `pos` of `n` (position 0
/// is the most significant).
Matrix embed(const Matrix &m, std::size_t pos, std::size_t n) {
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t k = 0; k < n; k++) {
        const Matrix factor = k == pos ? m : Matrix::Identity(2, 2);
        Matrix next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); r++) {
            for (Eigen::Index c = 0; c < out.cols(); c++) {
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * factor;
            }
        }
        out = next;
    }
    return out;
}

Matrix two_by_two(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

Matrix hadamard_matrix() {
    const double r = 1 / std::sqrt(2.0);
    return two_by_two(r, r, r, -r);
}

Matrix cz_matrix() {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1;
    return m;
}

Matrix dense_branch_map(const Pattern &p, const std::string &outcomes) {
    const std::vector<Vertex> &vs = p.vertices;
    const std::size_t n = vs.size();
    std::map<Vertex, std::size_t> pos;
    for (std::size_t k = 0; k < n; k++) {
        pos[vs[k]] = k;
    }
    auto bit = [&](std::size_t x, Vertex q) { return (x >> (n - 1 - pos[q])) & 1; };
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t in_dim = std::size_t{1} << p.inputs.size();

    std::map<Vertex, int> outcome;
    {
        std::size_t k = 0;
        for (Vertex q : p.measurement_order()) {
            outcome[q] = outcomes.at(k++) - '0';
        }
    }
    auto parity = [&](const Signals &s) {
        int x = 0;
        for (Vertex q : s) {
            x ^= outcome.at(q);
        }
        return x;
    };

    // Column c: input basis |c> on the inputs, |0> elsewhere; Prepare maps
    // |0> to |+_a> with the operator |+_a><0| + |?><1| (only |0> occurs).
    Matrix state = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(in_dim));
    for (std::size_t c = 0; c < in_dim; c++) {
        std::size_t x = 0;
        for (std::size_t k = 0; k < p.inputs.size(); k++) {
            if ((c >> (p.inputs.size() - 1 - k)) & 1) {
                x |= std::size_t{1} << (n - 1 - pos[p.inputs[k]]);
            }
        }
        state(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(c)) = 1;
    }

    const double r = 1 / std::sqrt(2.0);
    for (const Command &cmd : p.commands) {
        Matrix op;
        if (auto *np = std::get_if<Prepare>(&cmd)) {
            const Complex e = std::polar(1.0, np->angle);
            op = embed(two_by_two(r, 0, r * e, 0), pos[np->qubit], n);
        } else if (auto *e = std::get_if<Entangle>(&cmd)) {
            op = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
            for (std::size_t x = 0; x < dim; x++) {
                if (bit(x, e->a) && bit(x, e->b)) {
                    op(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = -1;
                }
            }
        } else if (auto *m = std::get_if<Measure>(&cmd)) {
            const double sign = outcome.at(m->qubit) ? -1.0 : 1.0;
            const Complex c1 = sign * r * std::polar(1.0, -m->angle);
            op = embed(two_by_two(r, c1, 0, 0), pos[m->qubit], n);
        } else if (auto *x = std::get_if<CorrectX>(&cmd)) {
            op = embed(parity(x->signals) ? two_by_two(0, 1, 1, 0) : Matrix::Identity(2, 2), pos[x->qubit], n);
        } else if (auto *z = std::get_if<CorrectZ>(&cmd)) {
            op = embed(parity(z->signals) ? two_by_two(1, 0, 0, -1) : Matrix::Identity(2, 2), pos[z->qubit], n);
        } else if (auto *xa = std::get_if<CorrectXAlpha>(&cmd)) {
            const Matrix zp = two_by_two(1, 0, 0, std::polar(1.0, xa->angle));
            const Matrix xm = zp * two_by_two(0, 1, 1, 0) * zp.adjoint();
            op = embed(parity(xa->signals) ? xm : Matrix::Identity(2, 2), pos[xa->qubit], n);
        }
        state = op * state;
    }

    const std::size_t out_dim = std::size_t{1} << p.outputs.size();
    Matrix result = Matrix::Zero(static_cast<Eigen::Index>(out_dim), static_cast<Eigen::Index>(in_dim));
    for (std::size_t o = 0; o < out_dim; o++) {
        std::size_t x = 0;
        for (std::size_t k = 0; k < p.outputs.size(); k++) {
            if ((o >> (p.outputs.size() - 1 - k)) & 1) {
                x |= std::size_t{1} << (n - 1 - pos[p.outputs[k]]);
            }
        }
        result.row(static_cast<Eigen::Index>(o)) = state.row(static_cast<Eigen::Index>(x));
    }
    return result;
}

}  // namespace mbqc::support
