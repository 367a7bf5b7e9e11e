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
#include <string>
#include <vector>

namespace mbqc {

struct IdentityOptions {
    double tolerance = 1e-12;
    /// Angles k * 2pi / grid_points, k = 0..grid_points-1.
    std::size_t grid_points = 16;
    std::size_t random_angles = 50;
    std::uint64_t seed = 20060101;
};

/// Worst case of one rewrite identity over all sampled (alpha, s).
struct IdentityResult {
    std::string name;
    /// Human-readable statement, qubit i is the most significant.
    std::string statement;
    std::size_t cases = 0;
    double max_deviation = 0;
    double worst_alpha = 0;
    int worst_s = 0;
    bool passed = false;
    /// Only for the Pauli-measurement identities, which hold as equalities of
    /// measurement effects (projectors): the largest max-abs difference of the
    /// raw bras, i.e. the phase the bra-level reading would leave behind.
    double bra_level_deviation = 0;
    bool has_bra_level = false;
};

struct IdentityReport {
    double tolerance = 0;
    std::size_t angle_count = 0;
    std::uint64_t seed = 0;
    std::vector<IdentityResult> results;

    bool ok() const;
};

/// Evaluates the rewrite equations used by the flow construction as 2x2 and
/// 4x4 matrix identities for each sampled angle and s in {0, 1}:
///   eq1   <+_a| = <(-1)^s a| Z^s
///   eq2   Z_i^s E_ij = X_j^s E_ij X_j^s
///   eq3   X_i^s E_ij = E_ij Z_j^s X_i^s
///   eq4   Z_i^s E_ij = E_ij Z_i^s
///   eq5   X^s |+> = |+>
///   xeq2  Z_i^s E_ij = (X_j^a)^s E_ij (X_j^a)^s
///   xeq3  (X_i^a)^s E_ij = E_ij Z_j^s (X_i^a)^s
///   xeq5  (X^a)^s |+_a> = |+_a>
///   pauli-y  M^{pi/2} X^s = M^{pi/2} Z^s
///   pauli-x  M^0 X^s = M^0
IdentityReport check_rewrite_identities(const IdentityOptions &options = {});

}  // namespace mbqc
