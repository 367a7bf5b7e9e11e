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

#include "mbqc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mbqc::io {

namespace {

/// Runs `body`, rethrowing nlohmann errors as std::invalid_argument.
template <typename F>
auto guarded(const char *what, F body) {
    try {
        return body();
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
    }
}

Vertex vertex_key(const std::string &key) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != key.size() || key.empty()) {
        throw std::invalid_argument("vertex key '" + key + "' is not an integer");
    }
    return v;
}

Vertex vertex_value(const Json &j) {
    if (j.is_string()) {
        return vertex_key(j.get<std::string>());
    }
    return j.get<Vertex>();
}

std::vector<Vertex> vertex_list(const Json &j, const char *field) {
    if (!j.contains(field)) {
        throw std::invalid_argument(std::string("missing field '") + field + "'");
    }
    return j.at(field).get<std::vector<Vertex>>();
}

Json complex_to_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

const char *source_name(WireSource s) {
    return s == WireSource::input ? "input" : "plus";
}

}  // namespace

Json graph_to_json(const OpenGraphState &g) {
    Json edges = Json::array();
    for (const Edge &e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return Json{{"vertices", g.vertices()}, {"edges", edges}, {"inputs", g.inputs()}, {"outputs", g.outputs()}};
}

GraphFile graph_from_json(const Json &j) {
    return guarded("graph", [&] {
        if (!j.is_object()) {
            throw std::invalid_argument("graph must be a JSON object");
        }
        std::vector<Edge> edges;
        if (!j.contains("edges")) {
            throw std::invalid_argument("missing field 'edges'");
        }
        for (const Json &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("each edge must be a pair [u, v]");
            }
            edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
        }
        GraphFile file{OpenGraphState(vertex_list(j, "vertices"), std::move(edges), vertex_list(j, "inputs"),
                                      vertex_list(j, "outputs")),
                       {}};
        if (j.contains("y_measured")) {
            for (Vertex v : j.at("y_measured").get<std::vector<Vertex>>()) {
                file.y_measured.insert(v);
            }
        }
        return file;
    });
}

Json flow_to_json(const Flow &fl) {
    Json f = Json::object();
    for (const auto &[i, fi] : fl.f) {
        f[std::to_string(i)] = fi;
    }
    Json levels = Json::object();
    for (const auto &[v, l] : fl.levels) {
        levels[std::to_string(v)] = l;
    }
    return Json{{"f", f}, {"levels", levels}, {"loops", std::vector<Vertex>(fl.loops.begin(), fl.loops.end())}};
}

Flow flow_from_json(const Json &j) {
    return guarded("flow", [&] {
        Flow fl;
        for (const auto &[k, v] : j.at("f").items()) {
            fl.f[vertex_key(k)] = vertex_value(v);
        }
        for (const auto &[k, v] : j.at("levels").items()) {
            fl.levels[vertex_key(k)] = v.get<int>();
        }
        if (j.contains("loops")) {
            for (const Json &v : j.at("loops")) {
                fl.loops.insert(vertex_value(v));
            }
        }
        return fl;
    });
}

Json flow_result_to_json(const FlowSearchResult &r) {
    Json j{{"found", r.found}, {"depth", r.depth}};
    if (r.found) {
        j["flow"] = flow_to_json(r.flow);
    }
    return j;
}

AngleMap angles_from_json(const Json &j) {
    return guarded("angles", [&] {
        if (!j.is_object()) {
            throw std::invalid_argument("angles must be a JSON object {\"vertex\": radians}");
        }
        AngleMap angles;
        for (const auto &[k, v] : j.items()) {
            if (!v.is_number()) {
                throw std::invalid_argument("angle for vertex " + k + " is not a number");
            }
            angles[vertex_key(k)] = v.get<double>();
        }
        return angles;
    });
}

Json angles_to_json(const AngleMap &angles) {
    Json j = Json::object();
    for (const auto &[v, a] : angles) {
        j[std::to_string(v)] = a;
    }
    return j;
}

Json circuit_to_json(const Circuit &c) {
    Json wires = Json::array();
    for (const Wire &w : c.wires) {
        wires.push_back({{"id", w.id}, {"source", source_name(w.source)}});
    }
    Json gates = Json::array();
    for (const Gate &g : c.gates) {
        if (auto *cz = std::get_if<GateCZ>(&g)) {
            gates.push_back({{"g", "CZ"}, {"a", cz->a}, {"b", cz->b}});
        } else if (auto *p = std::get_if<GatePhase>(&g)) {
            gates.push_back({{"g", "P"}, {"w", p->wire}, {"theta", p->theta}});
        } else if (auto *h = std::get_if<GateH>(&g)) {
            gates.push_back({{"g", "H"}, {"w", h->wire}});
        }
    }
    return Json{{"wires", wires}, {"gates", gates}, {"outputs", c.outputs}};
}

Circuit circuit_from_json(const Json &j) {
    return guarded("circuit", [&] {
        Circuit c;
        for (const Json &w : j.at("wires")) {
            const std::string source = w.at("source").get<std::string>();
            if (source != "input" && source != "plus") {
                throw std::invalid_argument("unknown wire source '" + source + "'");
            }
            c.wires.push_back({w.at("id").get<int>(), source == "input" ? WireSource::input : WireSource::plus});
        }
        for (const Json &g : j.at("gates")) {
            const std::string kind = g.at("g").get<std::string>();
            if (kind == "CZ") {
                c.gates.push_back(GateCZ{g.at("a").get<int>(), g.at("b").get<int>()});
            } else if (kind == "P") {
                c.gates.push_back(GatePhase{g.at("w").get<int>(), g.at("theta").get<double>()});
            } else if (kind == "H") {
                c.gates.push_back(GateH{g.at("w").get<int>()});
            } else {
                throw std::invalid_argument("unknown gate '" + kind + "'");
            }
        }
        c.outputs = j.at("outputs").get<std::vector<int>>();
        return c;
    });
}

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json &j) {
    return guarded("matrix", [&] {
        const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
        const Eigen::Index cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
        Matrix m(rows, cols);
        for (Eigen::Index r = 0; r < rows; r++) {
            if (static_cast<Eigen::Index>(j.at(r).size()) != cols) {
                throw std::invalid_argument("ragged matrix rows");
            }
            for (Eigen::Index c = 0; c < cols; c++) {
                const Json &e = j.at(r).at(c);
                m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
            }
        }
        return m;
    });
}

Json verdict_to_json(const DeterminismVerdict &v) {
    Json j{{"classification", to_string(v.classification)},
           {"deterministic", v.deterministic()},
           {"strong", v.strong()},
           {"uniform", v.uniform},
           {"angle_samples", v.angle_samples},
           {"seed", v.seed},
           {"tolerance", v.tolerance},
           {"max_branch_deviation", v.max_branch_deviation}};
    if (v.witness) {
        Json input = Json::array();
        for (Eigen::Index k = 0; k < v.witness->input.size(); k++) {
            input.push_back(complex_to_json(v.witness->input(k)));
        }
        j["witness"] = {{"branches", {v.witness->first, v.witness->second}},
                        {"input", input},
                        {"deviation", v.witness->deviation}};
    }
    return j;
}

Json branches_to_json(const BranchEnumeration &b) {
    Json branches = Json::array();
    for (const BranchReport &r : b.branches) {
        branches.push_back({{"outcomes", r.outcomes}, {"map", matrix_to_json(r.map)}});
    }
    return Json{{"measurement_order", b.measurement_order},
                {"completeness_deviation", b.completeness_deviation},
                {"branches", branches}};
}

Json identity_report_to_json(const IdentityReport &r) {
    Json results = Json::array();
    for (const IdentityResult &x : r.results) {
        Json e{{"name", x.name},
               {"statement", x.statement},
               {"cases", x.cases},
               {"max_deviation", x.max_deviation},
               {"worst_alpha", x.worst_alpha},
               {"worst_s", x.worst_s},
               {"passed", x.passed}};
        if (x.has_bra_level) {
            e["bra_level_deviation"] = x.bra_level_deviation;
        }
        results.push_back(e);
    }
    return Json{{"ok", r.ok()},
                {"tolerance", r.tolerance},
                {"angles", r.angle_count},
                {"seed", r.seed},
                {"results", results}};
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mbqc::io
