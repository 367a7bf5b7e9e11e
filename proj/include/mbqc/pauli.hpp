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
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mbqc/flow_finder.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/simulator.hpp"

namespace mbqc {

/// Pauli angles are recognized only within this distance on the circle.
inline constexpr double kPauliAngleTolerance = 1e-12;

/// Flow search where each qubit of `y_qubits` (to be measured at exactly
/// pi/2) may map to itself. A loop-free flow is preferred when one exists.
/// Throws std::invalid_argument unless y_qubits is a subset of O^c.
FlowSearchResult find_flow_with_loops(const OpenGraphState &g, const std::set<Vertex> &y_qubits);

/// Removes every CorrectX whose target is later measured at angle 0.
///
/// Since <-|X = -<-|, the dropped correction multiplies the branch for
/// outcomes s by (-1)^(b_j * parity(S)), where b_j is the target's own
/// outcome t_j xor the Z corrections it receives after the dropped X. Branch
/// maps keep their magnitude but may flip sign, so the channel is unchanged
/// while strong determinism can be lost.
Pattern drop_x_corrections(const Pattern &p);

/// Sign that drop_x_corrections introduces on the branch `outcomes`
/// (measurement order of `p`), i.e. A'_s = sign * A_s.
int dropped_x_sign(const Pattern &p, const std::string &outcomes);

/// Synthesizes the loop pattern for (g, fl, meas_angles) and classifies it.
DeterminismVerdict classify_loop_pattern(const OpenGraphState &g, const Flow &fl, const AngleMap &meas_angles,
                                         const ClassifyOptions &options = {});

struct LoopAngleProbe {
    AngleMap loop_angles;
    DeterminismVerdict verdict;
};

/// Re-classifies the loop pattern with every loop qubit moved to a fresh
/// uniform angle at least `min_distance` from pi/2 (other angles kept), once
/// per sample.
std::vector<LoopAngleProbe> probe_generic_loop_angles(const OpenGraphState &g, const Flow &fl,
                                                      const AngleMap &meas_angles, std::size_t samples,
                                                      std::uint64_t seed, double min_distance = 0.1);

}  // namespace mbqc
