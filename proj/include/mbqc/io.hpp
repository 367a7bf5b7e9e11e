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

#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mbqc/circuit.hpp"
#include "mbqc/flow_finder.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/identities.hpp"
#include "mbqc/simulator.hpp"

// JSON encodings. Parsers throw std::invalid_argument on malformed input
// (wrapping nlohmann parse and type errors).

namespace mbqc::io {

using Json = nlohmann::ordered_json;

/// A graph file: {"vertices", "edges", "inputs", "outputs"} plus the optional
/// "y_measured" list.
struct GraphFile {
    OpenGraphState graph;
    std::set<Vertex> y_measured;
};

Json graph_to_json(const OpenGraphState &g);
GraphFile graph_from_json(const Json &j);

/// {"f": {"i": f(i)}, "levels": {"v": int}, "loops": [ints]}. Parsing also
/// accepts f values given as strings.
Json flow_to_json(const Flow &fl);
Flow flow_from_json(const Json &j);

/// {"found": bool, "depth": int, "flow": {...} (only when found)}.
Json flow_result_to_json(const FlowSearchResult &r);

/// {"vertex": radians}.
AngleMap angles_from_json(const Json &j);
Json angles_to_json(const AngleMap &angles);

Json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const Json &j);

/// Rows of [re, im] pairs.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

Json verdict_to_json(const DeterminismVerdict &v);
Json branches_to_json(const BranchEnumeration &b);
Json identity_report_to_json(const IdentityReport &r);

/// Parses text as JSON, mapping syntax errors to std::invalid_argument.
Json parse_json(std::string_view text);
/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string &path);

}  // namespace mbqc::io
