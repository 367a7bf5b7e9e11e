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

#include "mbqc/identities.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "mbqc/ops.hpp"
#include "mbqc/types.hpp"

namespace mbqc {

namespace {

using ops::to_matrix;

Matrix identity2() {
    return Matrix::Identity(2, 2);
}

Matrix power(const Matrix &m, int s) {
    return s ? m : identity2();
}

/// Operator on qubit i (most significant) tensor qubit j.
Matrix on_i(const Matrix &m) {
    return Eigen::kroneckerProduct(m, identity2()).eval();
}

Matrix on_j(const Matrix &m) {
    return Eigen::kroneckerProduct(identity2(), m).eval();
}

Matrix cz() {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1;
    return m;
}

Matrix bra(double a, int outcome) {
    auto [c0, c1] = ops::measurement_bra(a, outcome);
    Matrix m(1, 2);
    m << c0, c1;
    return m;
}

Matrix ket(std::pair<Complex, Complex> amps) {
    Matrix m(2, 1);
    m << amps.first, amps.second;
    return m;
}

double deviation(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Largest effect difference over both outcomes: |t><t| conjugated by lhs
/// versus rhs.
double effect_deviation(double a, const Matrix &lhs, const Matrix &rhs) {
    double worst = 0;
    for (int t = 0; t < 2; t++) {
        Matrix b = bra(a, t);
        Matrix p = b.adjoint() * b;
        worst = std::max(worst, deviation(lhs.adjoint() * p * lhs, rhs.adjoint() * p * rhs));
    }
    return worst;
}

double bra_deviation(double a, const Matrix &lhs, const Matrix &rhs) {
    double worst = 0;
    for (int t = 0; t < 2; t++) {
        worst = std::max(worst, deviation(bra(a, t) * lhs, bra(a, t) * rhs));
    }
    return worst;
}

struct Identity {
    std::string name;
    std::string statement;
    std::function<double(double, int)> check;
    std::function<double(double, int)> bra_level = {};  // optional
};

std::vector<Identity> identities() {
    const Matrix x = to_matrix(ops::pauli_x());
    const Matrix z = to_matrix(ops::pauli_z());
    auto xa = [](double a) { return to_matrix(ops::x_alpha(a)); };
    std::vector<Identity> v;
    v.push_back({"eq1", "<+_a| = <(-1)^s a| Z^s", [=](double a, int s) {
                     return deviation(bra(a, 0), bra(a, s) * power(z, s));
                 }});
    v.push_back({"eq2", "Z_i^s E_ij = X_j^s E_ij X_j^s", [=](double, int s) {
                     return deviation(on_i(power(z, s)) * cz(), on_j(power(x, s)) * cz() * on_j(power(x, s)));
                 }});
    v.push_back({"eq3", "X_i^s E_ij = E_ij Z_j^s X_i^s", [=](double, int s) {
                     return deviation(on_i(power(x, s)) * cz(), cz() * on_j(power(z, s)) * on_i(power(x, s)));
                 }});
    v.push_back({"eq4", "Z_i^s E_ij = E_ij Z_i^s", [=](double, int s) {
                     return deviation(on_i(power(z, s)) * cz(), cz() * on_i(power(z, s)));
                 }});
    v.push_back({"eq5", "X^s |+> = |+>", [=](double, int s) {
                     Matrix plus = ket(ops::plus_state(0));
                     return deviation(power(x, s) * plus, plus);
                 }});
    v.push_back({"xeq2", "Z_i^s E_ij = (X_j^a)^s E_ij (X_j^a)^s", [=](double a, int s) {
                     Matrix c = on_j(power(xa(a), s));
                     return deviation(on_i(power(z, s)) * cz(), c * cz() * c);
                 }});
    v.push_back({"xeq3", "(X_i^a)^s E_ij = E_ij Z_j^s (X_i^a)^s", [=](double a, int s) {
                     Matrix c = on_i(power(xa(a), s));
                     return deviation(c * cz(), cz() * on_j(power(z, s)) * c);
                 }});
    v.push_back({"xeq5", "(X^a)^s |+_a> = |+_a>", [=](double a, int s) {
                     Matrix plus = ket(ops::plus_state(a));
                     return deviation(power(xa(a), s) * plus, plus);
                 }});
    v.push_back({"pauli-y", "M^{pi/2} X^s = M^{pi/2} Z^s",
                 [=](double, int s) { return effect_deviation(kPi / 2, power(x, s), power(z, s)); },
                 [=](double, int s) { return bra_deviation(kPi / 2, power(x, s), power(z, s)); }});
    v.push_back({"pauli-x", "M^0 X^s = M^0",
                 [=](double, int s) { return effect_deviation(0, power(x, s), identity2()); },
                 [=](double, int s) { return bra_deviation(0, power(x, s), identity2()); }});
    return v;
}

}  // namespace

bool IdentityReport::ok() const {
    for (const IdentityResult &r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

IdentityReport check_rewrite_identities(const IdentityOptions &options) {
    std::vector<double> angles;
    for (std::size_t k = 0; k < options.grid_points; k++) {
        angles.push_back(kTwoPi * static_cast<double>(k) / static_cast<double>(options.grid_points));
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> dist(0.0, kTwoPi);
    for (std::size_t k = 0; k < options.random_angles; k++) {
        angles.push_back(dist(rng));
    }

    IdentityReport report;
    report.tolerance = options.tolerance;
    report.angle_count = angles.size();
    report.seed = options.seed;
    for (const Identity &id : identities()) {
        IdentityResult r;
        r.name = id.name;
        r.statement = id.statement;
        r.has_bra_level = static_cast<bool>(id.bra_level);
        for (double a : angles) {
            for (int s = 0; s < 2; s++) {
                double d = id.check(a, s);
                r.cases++;
                if (d > r.max_deviation || r.cases == 1) {
                    r.max_deviation = d;
                    r.worst_alpha = a;
                    r.worst_s = s;
                }
                if (r.has_bra_level) {
                    r.bra_level_deviation = std::max(r.bra_level_deviation, id.bra_level(a, s));
                }
            }
        }
        r.passed = r.max_deviation <= options.tolerance;
        report.results.push_back(r);
    }
    return report;
}

}  // namespace mbqc
