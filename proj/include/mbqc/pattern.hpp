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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/types.hpp"

namespace mbqc {

/// Signal set: measured-qubit ids whose outcome parity gates a command.
using Signals = std::vector<Vertex>;

/// N_q^angle: prepare q in |+_angle> = (|0> + e^{i angle}|1>)/sqrt(2).
struct Prepare {
    Vertex qubit;
    double angle;
    bool operator==(const Prepare &) const = default;
};

/// E_ab: controlled-Z.
struct Entangle {
    Vertex a;
    Vertex b;
    bool operator==(const Entangle &) const = default;
};

/// M_q^angle: destructive measurement in the {|+_angle>, |-_angle>} basis;
/// outcome 0 for |+_angle>.
struct Measure {
    Vertex qubit;
    double angle;
    bool operator==(const Measure &) const = default;
};

struct CorrectX {
    Vertex qubit;
    Signals signals;
    bool operator==(const CorrectX &) const = default;
};

struct CorrectZ {
    Vertex qubit;
    Signals signals;
    bool operator==(const CorrectZ &) const = default;
};

/// (X^angle)^s with X^angle = Z^angle X Z^{-angle}; fixes N^angle.
struct CorrectXAlpha {
    Vertex qubit;
    double angle;
    Signals signals;
    bool operator==(const CorrectXAlpha &) const = default;
};

using Command = std::variant<Prepare, Entangle, Measure, CorrectX, CorrectZ, CorrectXAlpha>;

/// The qubit(s) a command acts on.
std::vector<Vertex> command_targets(const Command &c);
/// Signal set of a correction; empty for other commands.
const Signals &command_signals(const Command &c);

/// A measurement pattern. `commands` are stored in execution order (the
/// reverse of the operator-product notation). The header lists are sorted.
struct Pattern {
    std::vector<Vertex> vertices;
    std::vector<Vertex> inputs;
    std::vector<Vertex> outputs;
    std::vector<Command> commands;

    bool operator==(const Pattern &) const = default;

    /// Measured qubits in the order their Measure commands appear.
    std::vector<Vertex> measurement_order() const;
};

/// R0/R1/R2 scan over the command list. Violation codes: "R0", "R1", "R2",
/// plus "unknown-qubit" for commands outside the header's vertex set.
ValidationResult check_runnable(const Pattern &p);

/// Deterministic pattern of the flow theorem. Emits preparations of I^c
/// (ascending), one entangler per edge, then per measured qubit in
/// (level, id) order: M_i, the X correction on f(i) (X^alpha when f(i) has a
/// nonzero preparation angle) and Z corrections on G(f(i)) \ {i}. A loop
/// vertex (f(i) = i) receives only the Z corrections on G(i).
///
/// Throws std::invalid_argument if the flow does not validate or an angle
/// map is not exactly total on O^c (measurements) / I^c (preparations).
Pattern synthesize(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles,
                   const AngleMap &prep_angles);
/// As above with every preparation at angle 0.
Pattern synthesize(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles);

/// Stabilizer form: per measured qubit, in execution order, the dependent
/// stabilizer K_{G(f(i))}^{s_i} (X on f(i), Z on every neighbour of f(i)
/// including i), then the anachronical Z_i^{s_i}, then M_i. The two Z_i
/// factors cancel, so the branch maps match synthesize(), but the pattern
/// consumes s_i before M_i: check_runnable reports R0 and the simulator must
/// be run with anachronical signals allowed.
Pattern synthesize_stabilizer_form(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles);

/// Open graph state underlying a pattern (forgets angles and corrections).
OpenGraphState underlying_graph(const Pattern &p);
/// Measurement angles read from the Measure commands.
AngleMap measurement_angles(const Pattern &p);
/// Preparation angles read from the Prepare commands.
AngleMap preparation_angles(const Pattern &p);

/// Adjoint under a reverse flow on (G, O, I): re-synthesizes on the dual
/// geometry with the measurement and preparation angle vectors swapped.
/// Throws std::invalid_argument if `reverse` is not a flow of the dual.
Pattern adjoint(const Pattern &p, const Flow &reverse);

/// Renames qubits through `mapping`; unmapped qubits keep their id.
Pattern relabel(const Pattern &p, const std::map<Vertex, Vertex> &mapping);

/// Line-oriented text format in execution order:
///   V: 1 2 / I: 1 / O: 2 / N 2 0.0 / E 1 2 / M 1 0.0 / X 2 [1] / Z 3 [1] /
///   XA 2 0.5 [1]
/// Angles carry 17 significant digits so that parse(format(p)) == p.
std::string format_pattern(const Pattern &p);
/// Throws std::invalid_argument with the offending line number.
Pattern parse_pattern(std::string_view text);

/// Operator-product rendering, rightmost command first executed, e.g.
/// "X_2^{s_1} M_1^{0} E_{1,2} N_2^{0}".
std::string to_operator_string(const Pattern &p);

/// Angle printer used by the text and JSON formats: "%.17g", with ".0"
/// appended to integral values.
std::string format_angle(double radians);

}  // namespace mbqc
