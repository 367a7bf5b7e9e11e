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

#include <cmath>
#include <utility>

#include "mbqc/kernels.hpp"
#include "mbqc/types.hpp"

// One-qubit states, bras and operators shared by the simulator, the circuit
// simulator and the identity suite.

namespace mbqc::ops {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline Complex phase(double radians) {
    return std::polar(1.0, radians);
}

/// Amplitudes of |+_a> = (|0> + e^{ia}|1>)/sqrt(2).
inline std::pair<Complex, Complex> plus_state(double a) {
    return {kInvSqrt2, kInvSqrt2 * phase(a)};
}

/// Coefficients (c0, c1) of the measurement bra for `outcome`:
/// outcome 0 -> <+_a|, outcome 1 -> <-_a|, with <+-_a| = (<0| +- e^{-ia}<1|)/sqrt(2).
inline std::pair<Complex, Complex> measurement_bra(double a, int outcome) {
    Complex c1 = kInvSqrt2 * phase(-a);
    return {kInvSqrt2, outcome ? -c1 : c1};
}

inline kernels::Gate2 pauli_x() {
    return {0, 1, 1, 0};
}

inline kernels::Gate2 pauli_z() {
    return {1, 0, 0, -1};
}

/// X^a = Z^a X Z^{-a} with Z^a = diag(1, e^{ia}).
inline kernels::Gate2 x_alpha(double a) {
    return {0, phase(-a), phase(a), 0};
}

inline kernels::Gate2 hadamard() {
    return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
}

/// P(t) = diag(1, e^{it}).
inline kernels::Gate2 phase_gate(double t) {
    return {1, 0, 0, phase(t)};
}

inline Matrix to_matrix(const kernels::Gate2 &g) {
    Matrix m(2, 2);
    m << g.m00, g.m01, g.m10, g.m11;
    return m;
}

}  // namespace mbqc::ops
