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

#include "mbqc/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mbqc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

const Signals kNoSignals{};

void add_violation(ValidationResult &r, std::string code, std::string message) {
    r.violations.push_back({std::move(code), std::move(message)});
}

std::string describe(const Command &c) {
    return std::visit(Overloaded{
                          [](const Prepare &x) { return "N " + std::to_string(x.qubit); },
                          [](const Entangle &x) { return "E " + std::to_string(x.a) + " " + std::to_string(x.b); },
                          [](const Measure &x) { return "M " + std::to_string(x.qubit); },
                          [](const CorrectX &x) { return "X " + std::to_string(x.qubit); },
                          [](const CorrectZ &x) { return "Z " + std::to_string(x.qubit); },
                          [](const CorrectXAlpha &x) { return "XA " + std::to_string(x.qubit); },
                      },
                      c);
}

void require_total(const AngleMap &angles, const std::vector<Vertex> &domain, const char *what,
                   const char *domain_name) {
    bool exact = angles.size() == domain.size() &&
                 std::all_of(domain.begin(), domain.end(), [&](Vertex v) { return angles.count(v) > 0; });
    if (!exact) {
        throw std::invalid_argument(std::string(what) + " angles must cover exactly the " + domain_name +
                                    " vertices");
    }
}

void require_flow(const OpenGraphState &g, const Flow &fl) {
    auto graph_check = validate_graph(g);
    if (!graph_check.ok()) {
        throw std::invalid_argument("invalid open graph state:\n" + graph_check.str());
    }
    auto flow_check = validate_flow(g, fl, !fl.loops.empty());
    if (!flow_check.ok()) {
        throw std::invalid_argument("invalid flow:\n" + flow_check.str());
    }
}

/// Measured vertices in execution order: ascending level, ties by id.
std::vector<Vertex> measurement_schedule(const OpenGraphState &g, const Flow &fl) {
    auto order = g.measured();
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return fl.levels.at(a) < fl.levels.at(b);
    });
    return order;
}

void emit_preparations_and_entanglers(const OpenGraphState &g, const AngleMap &prep_angles, Pattern &p) {
    for (Vertex v : g.prepared()) {
        p.commands.push_back(Prepare{v, normalize_angle(prep_angles.at(v))});
    }
    for (const auto &e : g.edges()) {
        p.commands.push_back(Entangle{e.u, e.v});
    }
}

Pattern header_of(const OpenGraphState &g) {
    Pattern p;
    p.vertices = g.vertices();
    p.inputs = g.inputs();
    p.outputs = g.outputs();
    return p;
}

AngleMap zero_angles(const std::vector<Vertex> &vs) {
    AngleMap out;
    for (Vertex v : vs) {
        out[v] = 0.0;
    }
    return out;
}

std::string format_signals(const Signals &s) {
    std::string out = "[";
    for (size_t k = 0; k < s.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(s[k]);
    }
    return out + "]";
}

}  // namespace

std::vector<Vertex> command_targets(const Command &c) {
    return std::visit(Overloaded{
                          [](const Prepare &x) { return std::vector<Vertex>{x.qubit}; },
                          [](const Entangle &x) { return std::vector<Vertex>{x.a, x.b}; },
                          [](const Measure &x) { return std::vector<Vertex>{x.qubit}; },
                          [](const CorrectX &x) { return std::vector<Vertex>{x.qubit}; },
                          [](const CorrectZ &x) { return std::vector<Vertex>{x.qubit}; },
                          [](const CorrectXAlpha &x) { return std::vector<Vertex>{x.qubit}; },
                      },
                      c);
}

const Signals &command_signals(const Command &c) {
    if (auto *x = std::get_if<CorrectX>(&c)) {
        return x->signals;
    }
    if (auto *z = std::get_if<CorrectZ>(&c)) {
        return z->signals;
    }
    if (auto *xa = std::get_if<CorrectXAlpha>(&c)) {
        return xa->signals;
    }
    return kNoSignals;
}

std::vector<Vertex> Pattern::measurement_order() const {
    std::vector<Vertex> out;
    for (const auto &c : commands) {
        if (auto *m = std::get_if<Measure>(&c)) {
            out.push_back(m->qubit);
        }
    }
    return out;
}

ValidationResult check_runnable(const Pattern &p) {
    enum class Status { unborn, live, measured };
    ValidationResult r;
    std::set<Vertex> vertices(p.vertices.begin(), p.vertices.end());
    std::set<Vertex> inputs(p.inputs.begin(), p.inputs.end());
    std::set<Vertex> outputs(p.outputs.begin(), p.outputs.end());

    std::map<Vertex, Status> status;
    for (Vertex v : vertices) {
        status[v] = inputs.count(v) ? Status::live : Status::unborn;
    }
    for (Vertex v : inputs) {
        if (!vertices.count(v)) {
            add_violation(r, "unknown-qubit", "input " + std::to_string(v) + " is not in V");
        }
    }
    for (Vertex v : outputs) {
        if (!vertices.count(v)) {
            add_violation(r, "unknown-qubit", "output " + std::to_string(v) + " is not in V");
        }
    }
    std::set<Vertex> prepared;

    for (size_t k = 0; k < p.commands.size(); k++) {
        const auto &c = p.commands[k];
        std::string where = "command " + std::to_string(k) + " (" + describe(c) + ")";

        bool known = true;
        for (Vertex t : command_targets(c)) {
            if (!vertices.count(t)) {
                add_violation(r, "unknown-qubit", where + " acts on qubit " + std::to_string(t) + " not in V");
                known = false;
            }
        }
        for (Vertex s : command_signals(c)) {
            if (!vertices.count(s)) {
                add_violation(r, "unknown-qubit", where + " depends on qubit " + std::to_string(s) + " not in V");
            } else if (status[s] != Status::measured) {
                add_violation(r, "R0", where + " depends on s_" + std::to_string(s) + " before it is measured");
            }
        }
        if (!known) {
            continue;
        }

        if (auto *n = std::get_if<Prepare>(&c)) {
            if (inputs.count(n->qubit)) {
                add_violation(r, "R2", where + " prepares input qubit " + std::to_string(n->qubit));
            }
            if (status[n->qubit] != Status::unborn) {
                add_violation(r, "R1", where + " prepares qubit " + std::to_string(n->qubit) + " twice");
            } else {
                status[n->qubit] = Status::live;
            }
            prepared.insert(n->qubit);
            continue;
        }
        if (auto *e = std::get_if<Entangle>(&c)) {
            if (e->a == e->b) {
                add_violation(r, "R1", where + " entangles a qubit with itself");
            }
        }
        for (Vertex t : command_targets(c)) {
            if (status[t] == Status::unborn) {
                add_violation(r, "R1", where + " acts on unprepared qubit " + std::to_string(t));
            } else if (status[t] == Status::measured) {
                add_violation(r, "R1", where + " acts on measured qubit " + std::to_string(t));
            }
        }
        if (auto *m = std::get_if<Measure>(&c)) {
            if (outputs.count(m->qubit)) {
                add_violation(r, "R2", where + " measures output qubit " + std::to_string(m->qubit));
            }
            status[m->qubit] = Status::measured;
        }
    }

    for (Vertex v : vertices) {
        if (!outputs.count(v) && status[v] != Status::measured) {
            add_violation(r, "R2", "non-output qubit " + std::to_string(v) + " is never measured");
        }
        if (!inputs.count(v) && !prepared.count(v)) {
            add_violation(r, "R2", "non-input qubit " + std::to_string(v) + " is never prepared");
        }
    }
    return r;
}

Pattern synthesize(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles,
                   const AngleMap &prep_angles) {
    require_flow(g, fl);
    require_total(meas_angles, g.measured(), "measurement", "O^c");
    require_total(prep_angles, g.prepared(), "preparation", "I^c");

    Pattern p = header_of(g);
    emit_preparations_and_entanglers(g, prep_angles, p);
    for (Vertex i : measurement_schedule(g, fl)) {
        Vertex fi = fl.f.at(i);
        p.commands.push_back(Measure{i, normalize_angle(meas_angles.at(i))});
        if (fi != i) {
            double prep = normalize_angle(prep_angles.at(fi));
            if (prep != 0.0) {
                p.commands.push_back(CorrectXAlpha{fi, prep, {i}});
            } else {
                p.commands.push_back(CorrectX{fi, {i}});
            }
        }
        for (Vertex k : g.neighbors(fi)) {
            if (k != i) {
                p.commands.push_back(CorrectZ{k, {i}});
            }
        }
    }
    return p;
}

Pattern synthesize(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles) {
    return synthesize(g, fl, meas_angles, zero_angles(g.prepared()));
}

Pattern synthesize_stabilizer_form(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles) {
    require_flow(g, fl);
    require_total(meas_angles, g.measured(), "measurement", "O^c");

    Pattern p = header_of(g);
    emit_preparations_and_entanglers(g, zero_angles(g.prepared()), p);
    for (Vertex i : measurement_schedule(g, fl)) {
        Vertex fi = fl.f.at(i);
        // K_{G(f(i))}^{s_i}; for a loop the X_i factor becomes Z_i.
        if (fi == i) {
            p.commands.push_back(CorrectZ{i, {i}});
        } else {
            p.commands.push_back(CorrectX{fi, {i}});
        }
        for (Vertex j : g.neighbors(fi)) {
            p.commands.push_back(CorrectZ{j, {i}});
        }
        p.commands.push_back(CorrectZ{i, {i}});
        p.commands.push_back(Measure{i, normalize_angle(meas_angles.at(i))});
    }
    return p;
}

OpenGraphState underlying_graph(const Pattern &p) {
    std::vector<Edge> edges;
    for (const auto &c : p.commands) {
        if (auto *e = std::get_if<Entangle>(&c)) {
            edges.push_back({e->a, e->b});
        }
    }
    return OpenGraphState(p.vertices, std::move(edges), p.inputs, p.outputs);
}

AngleMap measurement_angles(const Pattern &p) {
    AngleMap out;
    for (const auto &c : p.commands) {
        if (auto *m = std::get_if<Measure>(&c)) {
            out[m->qubit] = m->angle;
        }
    }
    return out;
}

AngleMap preparation_angles(const Pattern &p) {
    AngleMap out;
    for (const auto &c : p.commands) {
        if (auto *n = std::get_if<Prepare>(&c)) {
            out[n->qubit] = n->angle;
        }
    }
    return out;
}

Pattern adjoint(const Pattern &p, const Flow &reverse) {
    OpenGraphState dual = underlying_graph(p).dual();
    auto check = validate_flow(dual, reverse, !reverse.loops.empty());
    if (!check.ok()) {
        throw std::invalid_argument("reverse flow is not a flow of (G, O, I):\n" + check.str());
    }
    return synthesize(dual, reverse, preparation_angles(p), measurement_angles(p));
}

Pattern relabel(const Pattern &p, const std::map<Vertex, Vertex> &mapping) {
    auto m = [&](Vertex v) {
        auto it = mapping.find(v);
        return it == mapping.end() ? v : it->second;
    };
    auto list = [&](const std::vector<Vertex> &vs) {
        std::vector<Vertex> out;
        for (Vertex v : vs) {
            out.push_back(m(v));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto sigs = [&](const Signals &s) {
        return list(s);
    };
    Pattern out;
    out.vertices = list(p.vertices);
    out.inputs = list(p.inputs);
    out.outputs = list(p.outputs);
    for (const auto &c : p.commands) {
        out.commands.push_back(std::visit(
            Overloaded{
                [&](const Prepare &x) -> Command { return Prepare{m(x.qubit), x.angle}; },
                [&](const Entangle &x) -> Command {
                    Vertex a = m(x.a), b = m(x.b);
                    return Entangle{std::min(a, b), std::max(a, b)};
                },
                [&](const Measure &x) -> Command { return Measure{m(x.qubit), x.angle}; },
                [&](const CorrectX &x) -> Command { return CorrectX{m(x.qubit), sigs(x.signals)}; },
                [&](const CorrectZ &x) -> Command { return CorrectZ{m(x.qubit), sigs(x.signals)}; },
                [&](const CorrectXAlpha &x) -> Command {
                    return CorrectXAlpha{m(x.qubit), x.angle, sigs(x.signals)};
                },
            },
            c));
    }
    return out;
}

std::string format_angle(double radians) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", radians);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string format_pattern(const Pattern &p) {
    std::ostringstream out;
    auto header = [&](const char *tag, const std::vector<Vertex> &vs) {
        out << tag << ":";
        for (Vertex v : vs) {
            out << " " << v;
        }
        out << "\n";
    };
    header("V", p.vertices);
    header("I", p.inputs);
    header("O", p.outputs);
    for (const auto &c : p.commands) {
        std::visit(Overloaded{
                       [&](const Prepare &x) { out << "N " << x.qubit << " " << format_angle(x.angle); },
                       [&](const Entangle &x) { out << "E " << x.a << " " << x.b; },
                       [&](const Measure &x) { out << "M " << x.qubit << " " << format_angle(x.angle); },
                       [&](const CorrectX &x) { out << "X " << x.qubit << " " << format_signals(x.signals); },
                       [&](const CorrectZ &x) { out << "Z " << x.qubit << " " << format_signals(x.signals); },
                       [&](const CorrectXAlpha &x) {
                           out << "XA " << x.qubit << " " << format_angle(x.angle) << " "
                               << format_signals(x.signals);
                       },
                   },
                   c);
        out << "\n";
    }
    return out.str();
}

namespace {

struct LineReader {
    std::string_view rest;
    size_t line_number;

    [[noreturn]] void fail(const std::string &why) const {
        throw std::invalid_argument("pattern line " + std::to_string(line_number) + ": " + why);
    }

    void skip_space() {
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t' || rest.front() == '\r')) {
            rest.remove_prefix(1);
        }
    }

    bool at_end() {
        skip_space();
        return rest.empty();
    }

    std::string_view token() {
        skip_space();
        size_t n = 0;
        while (n < rest.size() && rest[n] != ' ' && rest[n] != '\t' && rest[n] != '\r') {
            n++;
        }
        auto t = rest.substr(0, n);
        rest.remove_prefix(n);
        return t;
    }

    Vertex vertex() {
        auto t = token();
        Vertex v{};
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
            fail("expected a qubit id, got '" + std::string(t) + "'");
        }
        return v;
    }

    double angle() {
        auto t = std::string(token());
        try {
            size_t used = 0;
            double a = std::stod(t, &used);
            if (used != t.size() || !std::isfinite(a)) {
                throw std::invalid_argument(t);
            }
            return normalize_angle(a);
        } catch (const std::exception &) {
            fail("expected an angle, got '" + t + "'");
        }
    }

    Signals signals() {
        skip_space();
        if (rest.empty() || rest.front() != '[') {
            fail("expected a signal set like [1,2]");
        }
        auto close = rest.find(']');
        if (close == std::string_view::npos) {
            fail("unterminated signal set");
        }
        auto body = rest.substr(1, close - 1);
        rest.remove_prefix(close + 1);
        Signals out;
        std::string cur;
        auto flush = [&]() {
            if (cur.empty()) {
                return;
            }
            LineReader sub{cur, line_number};
            out.push_back(sub.vertex());
            cur.clear();
        };
        for (char ch : body) {
            if (ch == ',' || ch == ' ' || ch == '\t') {
                flush();
            } else {
                cur.push_back(ch);
            }
        }
        flush();
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

Pattern parse_pattern(std::string_view text) {
    Pattern p;
    bool seen_v = false, seen_i = false, seen_o = false;
    size_t line_number = 0;
    while (!text.empty()) {
        line_number++;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        LineReader in{line, line_number};
        if (in.at_end()) {
            continue;
        }
        auto op = in.token();
        if (op == "V:" || op == "I:" || op == "O:") {
            std::vector<Vertex> vs;
            while (!in.at_end()) {
                vs.push_back(in.vertex());
            }
            std::sort(vs.begin(), vs.end());
            bool &seen = op == "V:" ? seen_v : op == "I:" ? seen_i : seen_o;
            if (seen) {
                in.fail("duplicate header " + std::string(op));
            }
            seen = true;
            (op == "V:" ? p.vertices : op == "I:" ? p.inputs : p.outputs) = std::move(vs);
            continue;
        }
        if (op == "N") {
            Vertex q = in.vertex();
            p.commands.push_back(Prepare{q, in.angle()});
        } else if (op == "E") {
            Vertex a = in.vertex();
            Vertex b = in.vertex();
            p.commands.push_back(Entangle{a, b});
        } else if (op == "M") {
            Vertex q = in.vertex();
            p.commands.push_back(Measure{q, in.angle()});
        } else if (op == "X") {
            Vertex q = in.vertex();
            p.commands.push_back(CorrectX{q, in.signals()});
        } else if (op == "Z") {
            Vertex q = in.vertex();
            p.commands.push_back(CorrectZ{q, in.signals()});
        } else if (op == "XA") {
            Vertex q = in.vertex();
            double a = in.angle();
            p.commands.push_back(CorrectXAlpha{q, a, in.signals()});
        } else {
            in.fail("unknown command '" + std::string(op) + "'");
        }
        if (!in.at_end()) {
            in.fail("trailing text '" + std::string(in.rest) + "'");
        }
    }
    if (!seen_v || !seen_i || !seen_o) {
        throw std::invalid_argument("pattern text must contain V:, I: and O: header lines");
    }
    return p;
}

std::string to_operator_string(const Pattern &p) {
    auto sig = [](const Signals &s) {
        std::string out;
        for (size_t k = 0; k < s.size(); k++) {
            out += (k ? "+s_" : "s_") + std::to_string(s[k]);
        }
        return out.empty() ? std::string("0") : out;
    };
    auto ang = [](double a) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", a);
        return std::string(buf);
    };
    std::vector<std::string> parts;
    for (auto it = p.commands.rbegin(); it != p.commands.rend(); ++it) {
        parts.push_back(std::visit(
            Overloaded{
                [&](const Prepare &x) { return "N_" + std::to_string(x.qubit) + "^{" + ang(x.angle) + "}"; },
                [&](const Entangle &x) { return "E_{" + std::to_string(x.a) + "," + std::to_string(x.b) + "}"; },
                [&](const Measure &x) { return "M_" + std::to_string(x.qubit) + "^{" + ang(x.angle) + "}"; },
                [&](const CorrectX &x) { return "X_" + std::to_string(x.qubit) + "^{" + sig(x.signals) + "}"; },
                [&](const CorrectZ &x) { return "Z_" + std::to_string(x.qubit) + "^{" + sig(x.signals) + "}"; },
                [&](const CorrectXAlpha &x) {
                    return "(X_" + std::to_string(x.qubit) + "^{" + ang(x.angle) + "})^{" + sig(x.signals) + "}";
                },
            },
            *it));
    }
    std::string out;
    for (size_t k = 0; k < parts.size(); k++) {
        out += (k ? " " : "") + parts[k];
    }
    return out;
}

}  // namespace mbqc
