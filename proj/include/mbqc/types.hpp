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

#include <complex>
#include <map>
#include <numbers>

#include <Eigen/Dense>

namespace mbqc {

/// Qubit / graph vertex identifier. Non-negative by convention.
using Vertex = int;

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Vertex -> angle in radians.
using AngleMap = std::map<Vertex, double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2pi).
double normalize_angle(double radians);

/// True when `radians` lies within `tolerance` of `target` on the circle.
bool angle_near(double radians, double target, double tolerance);

}  // namespace mbqc
