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

// mbqc: command-line front end.
//
//   mbqc flow GRAPH [--loops] [--bidirectional]
//   mbqc synth GRAPH [--angles FILE] [--prep-angles FILE] [--stabilizer-form] [--loops]
//   mbqc verify PATTERN [--samples N] [--branches] [--allow-anachronical]
//   mbqc extract GRAPH [--angles FILE] [--check]
//   mbqc adjoint PATTERN
//   mbqc identities [--angles-grid N] [--random-angles N]
//
// Exit codes: 0 success / positive verdict, 1 negative verdict (no flow, not
// strongly deterministic, failed check), 2 input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "mbqc/circuit.hpp"
#include "mbqc/flow_finder.hpp"
#include "mbqc/identities.hpp"
#include "mbqc/io.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/simulator.hpp"

namespace {

using mbqc::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

/// Input problem that maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = mbqc::kDefaultSeed;
    double tolerance = mbqc::kDefaultTolerance;
    std::size_t max_qubits = 20;
};

void print(const Json &j) {
    std::cout << j.dump(2) << "\n";
}

void check_size(std::size_t qubits, const Globals &globals) {
    if (qubits > globals.max_qubits) {
        throw InputError("object has " + std::to_string(qubits) + " qubits, --max-qubits is " +
                         std::to_string(globals.max_qubits));
    }
}

mbqc::io::GraphFile load_graph(const std::string &path, const Globals &globals) {
    mbqc::io::GraphFile file = mbqc::io::graph_from_json(mbqc::io::parse_json(mbqc::io::read_file(path)));
    mbqc::ValidationResult r = mbqc::validate_graph(file.graph);
    if (!r.ok()) {
        throw InputError("invalid graph:\n" + r.str());
    }
    check_size(file.graph.vertices().size(), globals);
    return file;
}

/// Reads an angle file restricted to `domain`; absent entries default to 0.
mbqc::AngleMap load_angles(const std::string &path, const std::vector<mbqc::Vertex> &domain, const char *what) {
    mbqc::AngleMap angles;
    for (mbqc::Vertex v : domain) {
        angles[v] = 0;
    }
    if (path.empty()) {
        return angles;
    }
    for (const auto &[v, a] : mbqc::io::angles_from_json(mbqc::io::parse_json(mbqc::io::read_file(path)))) {
        if (!angles.contains(v)) {
            throw InputError(std::string(what) + " angle given for vertex " + std::to_string(v) +
                             ", which takes no such angle");
        }
        angles[v] = a;
    }
    return angles;
}

mbqc::Pattern load_pattern(const std::string &path, const Globals &globals) {
    mbqc::Pattern p = mbqc::parse_pattern(mbqc::io::read_file(path));
    check_size(p.vertices.size(), globals);
    return p;
}

mbqc::FlowSearchResult search(const mbqc::io::GraphFile &file, bool loops) {
    if (!loops) {
        return mbqc::find_flow(file.graph);
    }
    if (file.y_measured.empty()) {
        return mbqc::find_flow(file.graph, true);
    }
    return mbqc::find_flow_with_loops(file.graph, file.y_measured);
}

int cmd_flow(const std::string &graph_path, bool loops, bool bidirectional, const Globals &globals) {
    mbqc::io::GraphFile file = load_graph(graph_path, globals);
    mbqc::FlowSearchResult forward = search(file, loops);
    Json out{{"forward", mbqc::io::flow_result_to_json(forward)}};
    bool ok = forward.found;
    if (bidirectional) {
        mbqc::FlowSearchResult reverse = mbqc::find_flow(file.graph.dual());
        out["reverse"] = mbqc::io::flow_result_to_json(reverse);
        out["biflow"] = forward.found && reverse.found;
        ok = ok && reverse.found;
    }
    print(out);
    return ok ? kExitOk : kExitNegative;
}

int cmd_synth(const std::string &graph_path, const std::string &angles_path, const std::string &prep_path,
              bool stabilizer_form, bool loops, const Globals &globals) {
    mbqc::io::GraphFile file = load_graph(graph_path, globals);
    const mbqc::OpenGraphState &g = file.graph;
    mbqc::AngleMap meas = load_angles(angles_path, g.measured(), "measurement");
    mbqc::AngleMap prep = load_angles(prep_path, g.prepared(), "preparation");
    mbqc::FlowSearchResult r = search(file, loops);
    if (!r.found) {
        std::cerr << "mbqc synth: the open graph state has no flow\n";
        return kExitNegative;
    }
    if (stabilizer_form) {
        for (const auto &[v, a] : prep) {
            if (a != 0) {
                throw InputError("the stabilizer form needs zero preparation angles");
            }
        }
        std::cout << mbqc::format_pattern(mbqc::synthesize_stabilizer_form(g, r.flow, meas));
    } else {
        std::cout << mbqc::format_pattern(mbqc::synthesize(g, r.flow, meas, prep));
    }
    return kExitOk;
}

int cmd_verify(const std::string &pattern_path, std::size_t samples, bool branches, bool anachronical,
               const Globals &globals) {
    mbqc::Pattern p = load_pattern(pattern_path, globals);
    mbqc::ValidationResult r = mbqc::check_runnable(p);
    if (anachronical) {
        std::erase_if(r.violations, [](const mbqc::Violation &v) { return v.code == "R0"; });
    }
    if (!r.ok()) {
        Json violations = Json::array();
        for (const mbqc::Violation &v : r.violations) {
            violations.push_back({{"code", v.code}, {"message", v.message}});
        }
        print(Json{{"runnable", false}, {"violations", violations}});
        std::cerr << "mbqc verify: pattern is not runnable\n" << r.str();
        return kExitInputError;
    }
    mbqc::ClassifyOptions options;
    options.angle_samples = samples;
    options.seed = globals.seed;
    options.tolerance = globals.tolerance;
    options.enumerate.run.allow_anachronical_signals = anachronical;
    mbqc::DeterminismVerdict v = mbqc::classify_determinism(p, options);
    Json out{{"runnable", true}, {"verdict", mbqc::io::verdict_to_json(v)}};
    if (branches) {
        out["branches"] = mbqc::io::branches_to_json(mbqc::enumerate_branches(p, options.enumerate));
    }
    print(out);
    return v.strong() ? kExitOk : kExitNegative;
}

int cmd_extract(const std::string &graph_path, const std::string &angles_path, bool check, const Globals &globals) {
    mbqc::io::GraphFile file = load_graph(graph_path, globals);
    const mbqc::OpenGraphState &g = file.graph;
    mbqc::AngleMap meas = load_angles(angles_path, g.measured(), "measurement");
    mbqc::FlowSearchResult r = mbqc::find_flow(g);
    if (!r.found) {
        std::cerr << "mbqc extract: the open graph state has no flow\n";
        return kExitNegative;
    }
    mbqc::Circuit c = mbqc::extract_circuit(g, r.flow, meas);
    Json out = mbqc::io::circuit_to_json(c);
    if (!check) {
        print(out);
        return kExitOk;
    }
    double deviation = mbqc::deviation_up_to_phase(mbqc::simulate_circuit(c, globals.max_qubits),
                                                   mbqc::realized_embedding(g, meas));
    bool ok = deviation < globals.tolerance;
    out["check"] = {{"max_deviation", deviation}, {"tolerance", globals.tolerance}, {"ok", ok}};
    print(out);
    return ok ? kExitOk : kExitNegative;
}

int cmd_adjoint(const std::string &pattern_path, const Globals &globals) {
    mbqc::Pattern p = load_pattern(pattern_path, globals);
    mbqc::FlowSearchResult reverse = mbqc::find_flow(mbqc::underlying_graph(p).dual());
    if (!reverse.found) {
        std::cerr << "mbqc adjoint: the dual open graph state (G, O, I) has no flow\n";
        return kExitNegative;
    }
    std::cout << mbqc::format_pattern(mbqc::adjoint(p, reverse.flow));
    return kExitOk;
}

int cmd_identities(std::size_t grid, std::size_t random_angles, std::optional<double> tolerance,
                   const Globals &globals) {
    mbqc::IdentityOptions options;
    options.grid_points = grid;
    options.random_angles = random_angles;
    options.seed = globals.seed;
    if (tolerance) {
        options.tolerance = *tolerance;
    }
    mbqc::IdentityReport report = mbqc::check_rewrite_identities(options);
    print(mbqc::io::identity_report_to_json(report));
    return report.ok() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Flow-based compiler and verifier for measurement patterns"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Globals globals;
    std::optional<double> tolerance;
    app.add_option("--seed", globals.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--tolerance", tolerance, "Numerical tolerance (default 1e-9, identities 1e-12)");
    app.add_option("--max-qubits", globals.max_qubits, "Largest pattern, graph or circuit accepted")
        ->capture_default_str();

    std::string graph_path, pattern_path, angles_path, prep_path;
    bool loops = false, bidirectional = false, stabilizer_form = false, branches = false, anachronical = false,
         check = false;
    std::size_t samples = 20, grid = 16, random_angles = 50;

    CLI::App *flow = app.add_subcommand("flow", "Search for a flow (exit 1 when none exists)");
    flow->add_option("graph", graph_path, "Graph JSON file")->required();
    flow->add_flag("--loops", loops, "Allow Pauli-Y loops (on y_measured if given, else on every measured qubit)");
    flow->add_flag("--bidirectional", bidirectional, "Also search the dual (G, O, I)");

    CLI::App *synth = app.add_subcommand("synth", "Synthesize the deterministic pattern");
    synth->add_option("graph", graph_path, "Graph JSON file")->required();
    synth->add_option("--angles", angles_path, "Measurement angles JSON {vertex: radians}");
    synth->add_option("--prep-angles", prep_path, "Preparation angles JSON {vertex: radians}");
    synth->add_flag("--stabilizer-form", stabilizer_form, "Emit the stabilizer form");
    synth->add_flag("--loops", loops, "Allow Pauli-Y loops");

    CLI::App *verify = app.add_subcommand("verify", "Classify determinism (exit 0 iff strongly deterministic)");
    verify->add_option("pattern", pattern_path, "Pattern text file")->required();
    verify->add_option("--samples", samples, "Random angle vectors for uniformity")->capture_default_str();
    verify->add_flag("--branches", branches, "Include every branch map");
    verify->add_flag("--allow-anachronical", anachronical, "Accept corrections that precede their measurement");

    CLI::App *extract = app.add_subcommand("extract", "Extract a CZ/P/H circuit");
    extract->add_option("graph", graph_path, "Graph JSON file")->required();
    extract->add_option("--angles", angles_path, "Measurement angles JSON {vertex: radians}");
    extract->add_flag("--check", check, "Compare the circuit with the realized embedding");

    CLI::App *adjoint = app.add_subcommand("adjoint", "Adjoint pattern under the reverse flow");
    adjoint->add_option("pattern", pattern_path, "Pattern text file")->required();

    CLI::App *identities = app.add_subcommand("identities", "Check the rewrite identities");
    identities->add_option("--angles-grid", grid, "Grid points on [0, 2pi)")->capture_default_str();
    identities->add_option("--random-angles", random_angles, "Extra uniform angles")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }
    if (tolerance) {
        globals.tolerance = *tolerance;
    }

    try {
        if (flow->parsed()) {
            return cmd_flow(graph_path, loops, bidirectional, globals);
        }
        if (synth->parsed()) {
            return cmd_synth(graph_path, angles_path, prep_path, stabilizer_form, loops, globals);
        }
        if (verify->parsed()) {
            return cmd_verify(pattern_path, samples, branches, anachronical, globals);
        }
        if (extract->parsed()) {
            return cmd_extract(graph_path, angles_path, check, globals);
        }
        if (adjoint->parsed()) {
            return cmd_adjoint(pattern_path, globals);
        }
        if (identities->parsed()) {
            return cmd_identities(grid, random_angles, tolerance, globals);
        }
    } catch (const std::exception &e) {
        std::cerr << "mbqc: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
