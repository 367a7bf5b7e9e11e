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

#include "mbqc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "mbqc/kernels.hpp"
#include "mbqc/ops.hpp"
#include "mbqc/state.hpp"

namespace mbqc {

namespace {

void require_runnable(const Pattern &p, const RunOptions &options) {
    ValidationResult r = check_runnable(p);
    if (options.allow_anachronical_signals) {
        std::erase_if(r.violations, [](const Violation &v) { return v.code == "R0"; });
    }
    if (!r.ok()) {
        throw std::invalid_argument("pattern is not runnable: " + r.str());
    }
}

/// Outcome bits known so far, looked up by qubit.
class Outcomes {
   public:
    explicit Outcomes(const std::vector<Vertex> &order) {
        for (std::size_t k = 0; k < order.size(); k++) {
            position_[order[k]] = k;
        }
        bits_.assign(order.size(), -1);
    }

    void set(std::size_t k, int bit) {
        bits_[k] = bit;
    }

    int parity(const Signals &signals) const {
        int x = 0;
        for (Vertex s : signals) {
            auto it = position_.find(s);
            if (it == position_.end() || bits_[it->second] < 0) {
                throw std::invalid_argument("signal s_" + std::to_string(s) + " has no outcome");
            }
            x ^= bits_[it->second];
        }
        return x;
    }

   private:
    std::map<Vertex, std::size_t> position_;
    std::vector<int> bits_;
};

/// Applies every non-measurement command; measurements go through project().
void apply_command(BatchedState &state, const Command &c, const Outcomes &outcomes) {
    if (auto *n = std::get_if<Prepare>(&c)) {
        auto [a0, a1] = ops::plus_state(n->angle);
        state.prepare(n->qubit, a0, a1);
    } else if (auto *e = std::get_if<Entangle>(&c)) {
        state.cz(e->a, e->b);
    } else if (auto *x = std::get_if<CorrectX>(&c)) {
        if (outcomes.parity(x->signals)) {
            state.apply(x->qubit, ops::pauli_x());
        }
    } else if (auto *z = std::get_if<CorrectZ>(&c)) {
        if (outcomes.parity(z->signals)) {
            state.apply(z->qubit, ops::pauli_z());
        }
    } else if (auto *xa = std::get_if<CorrectXAlpha>(&c)) {
        if (outcomes.parity(xa->signals)) {
            state.apply(xa->qubit, ops::x_alpha(xa->angle));
        }
    } else {
        throw std::logic_error("apply_command called on a measurement");
    }
}

void project(BatchedState &state, const Measure &m, int bit) {
    auto [c0, c1] = ops::measurement_bra(m.angle, bit);
    state.project(m.qubit, c0, c1);
}

Matrix simulate(const Pattern &p, const std::string &outcomes) {
    const std::vector<Vertex> order = p.measurement_order();
    Outcomes known(order);
    for (std::size_t k = 0; k < order.size(); k++) {
        known.set(k, outcomes[k] - '0');
    }
    BatchedState state(p.inputs);
    std::size_t k = 0;
    for (const Command &c : p.commands) {
        if (auto *m = std::get_if<Measure>(&c)) {
            project(state, *m, outcomes[k++] - '0');
        } else {
            apply_command(state, c, known);
        }
    }
    return state.to_matrix(p.outputs);
}

std::string bit_string(std::size_t value, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t k = 0; k < n; k++) {
        if ((value >> (n - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

struct TreeWalk {
    const Pattern &p;
    Outcomes outcomes;
    std::string prefix;
    std::vector<BranchReport> *out;

    void walk(BatchedState state, std::size_t pos) {
        for (; pos < p.commands.size(); pos++) {
            const Command &c = p.commands[pos];
            if (auto *m = std::get_if<Measure>(&c)) {
                const std::size_t k = prefix.size();
                for (int bit = 0; bit < 2; bit++) {
                    BatchedState child = bit == 0 ? BatchedState(state) : std::move(state);
                    project(child, *m, bit);
                    outcomes.set(k, bit);
                    prefix.push_back(static_cast<char>('0' + bit));
                    walk(std::move(child), pos + 1);
                    prefix.pop_back();
                }
                outcomes.set(k, -1);
                return;
            }
            apply_command(state, c, outcomes);
        }
        out->push_back({prefix, state.to_matrix(p.outputs)});
    }
};

bool has_anachronical_signals(const Pattern &p) {
    return check_runnable(p).has("R0");
}

}  // namespace

Matrix run_branch(const Pattern &p, std::string_view outcomes, const RunOptions &options) {
    require_runnable(p, options);
    const std::size_t n = p.measurement_order().size();
    if (outcomes.size() != n) {
        throw std::invalid_argument("outcome string has " + std::to_string(outcomes.size()) + " bits, pattern has " +
                                    std::to_string(n) + " measurements");
    }
    if (outcomes.find_first_not_of("01") != std::string_view::npos) {
        throw std::invalid_argument("outcome string must consist of '0' and '1'");
    }
    return simulate(p, std::string(outcomes));
}

double BranchReport::probability(const Vector &input) const {
    if (input.size() != map.cols()) {
        throw std::invalid_argument("input dimension does not match the branch map");
    }
    return (map * input).squaredNorm();
}

BranchEnumeration enumerate_branches(const Pattern &p, const EnumerateOptions &options) {
    require_runnable(p, options.run);
    BranchEnumeration result;
    result.measurement_order = p.measurement_order();
    const std::size_t n = result.measurement_order.size();
    if (n > options.max_measurements) {
        throw std::length_error("pattern has " + std::to_string(n) + " measurements, bound is " +
                                std::to_string(options.max_measurements));
    }
    const bool tree = options.strategy == EnumerationStrategy::tree && !has_anachronical_signals(p);
    if (tree) {
        TreeWalk walker{p, Outcomes(result.measurement_order), std::string(), &result.branches};
        walker.walk(BatchedState(p.inputs), 0);
    } else {
        const std::size_t count = std::size_t{1} << n;
        result.branches.reserve(count);
        for (std::size_t s = 0; s < count; s++) {
            std::string bits = bit_string(s, n);
            result.branches.push_back({bits, simulate(p, bits)});
        }
    }
    const Eigen::Index dim = result.branches.front().map.cols();
    Matrix total = Matrix::Zero(dim, dim);
    for (const BranchReport &b : result.branches) {
        total += b.map.adjoint() * b.map;
    }
    result.completeness_deviation = max_abs_diff(total, Matrix::Identity(dim, dim));
    return result;
}

std::string to_string(Determinism d) {
    switch (d) {
        case Determinism::not_deterministic:
            return "not-deterministic";
        case Determinism::deterministic:
            return "deterministic";
        case Determinism::strongly_deterministic:
            return "strongly-deterministic";
    }
    return "unknown";
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shapes differ");
    }
    return kernels::active().max_abs_diff(a.data(), b.data(), static_cast<std::size_t>(a.size()));
}

Complex hs_inner(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shapes differ");
    }
    return kernels::active().inner(a.data(), b.data(), static_cast<std::size_t>(a.size()));
}

double deviation_up_to_phase(const Matrix &a, const Matrix &b) {
    Complex overlap = hs_inner(b, a);
    Complex w = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1);
    return max_abs_diff(a, w * b);
}

bool hs_proportional(const Matrix &a, const Matrix &b, double tolerance) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0 || nb == 0) {
        return true;
    }
    return na * nb - std::abs(hs_inner(a, b)) < tolerance * na * nb;
}

namespace {

/// Frobenius norm of a_j(x)b_k + a_k(x)b_j - b_j(x)a_k - b_k(x)a_j.
double polarized_wedge(const Matrix &a, const Matrix &b, Eigen::Index j, Eigen::Index k) {
    const Eigen::Index d = a.rows();
    double sum = 0;
    for (Eigen::Index x = 0; x < d; x++) {
        for (Eigen::Index y = 0; y < d; y++) {
            Complex t = a(x, j) * b(y, k) + a(x, k) * b(y, j) - b(x, j) * a(y, k) - b(x, k) * a(y, j);
            sum += std::norm(t);
        }
    }
    return std::sqrt(sum);
}

/// Sine of the angle between the rays of u and v, taken from the component
/// of v orthogonal to u; 0 when either vector is zero.
double misalignment(const Vector &u, const Vector &v) {
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0 || nv == 0) {
        return 0;
    }
    const Vector rest = v - u * (u.dot(v) / (nu * nu));
    return std::min(1.0, rest.norm() / nv);
}

Witness parallel_witness(const BranchReport &first, const BranchReport &second) {
    const Matrix &a = first.map;
    const Matrix &b = second.map;
    const Eigen::Index dim = a.cols();
    Eigen::Index best_j = 0, best_k = 0;
    double best = -1;
    for (Eigen::Index j = 0; j < dim; j++) {
        for (Eigen::Index k = j; k < dim; k++) {
            double w = polarized_wedge(a, b, j, k);
            if (w > best) {
                best = w;
                best_j = j;
                best_k = k;
            }
        }
    }
    // The wedge of e_j + e_k is W(e_j) + W(e_k) + T_jk, so one of the three
    // inputs below exhibits the defect.
    std::vector<Vector> candidates;
    candidates.push_back(Vector::Unit(dim, best_j));
    candidates.push_back(Vector::Unit(dim, best_k));
    if (best_j != best_k) {
        const Vector ej = Vector::Unit(dim, best_j), ek = Vector::Unit(dim, best_k);
        for (Complex phase : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
            candidates.push_back((ej + phase * ek) * ops::kInvSqrt2);
        }
    }
    Witness w{first.outcomes, second.outcomes, candidates.front(), -1};
    for (const Vector &q : candidates) {
        double m = misalignment(a * q, b * q);
        if (m > w.deviation) {
            w.input = q;
            w.deviation = m;
        }
    }
    return w;
}

Witness difference_witness(const BranchReport &first, const BranchReport &second) {
    const Matrix diff = first.map - second.map;
    Eigen::Index col = 0;
    diff.colwise().norm().maxCoeff(&col);
    Vector q = Vector::Unit(diff.cols(), col);
    return {first.outcomes, second.outcomes, q, (diff * q).cwiseAbs().maxCoeff()};
}

}  // namespace

double parallel_defect(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shapes differ");
    }
    const double scale = a.norm() * b.norm();
    if (scale == 0) {
        return 0;
    }
    double worst = 0;
    for (Eigen::Index j = 0; j < a.cols(); j++) {
        for (Eigen::Index k = j; k < a.cols(); k++) {
            worst = std::max(worst, polarized_wedge(a, b, j, k));
        }
    }
    return worst / scale;
}

bool outputs_parallel(const Matrix &a, const Matrix &b, double tolerance) {
    return parallel_defect(a, b) < tolerance;
}

DeterminismVerdict classify_branches(const BranchEnumeration &branches, double tolerance) {
    DeterminismVerdict v;
    v.tolerance = tolerance;
    const auto &bs = branches.branches;
    std::size_t far_i = 0, far_j = 0;
    for (std::size_t i = 0; i < bs.size(); i++) {
        for (std::size_t j = i + 1; j < bs.size(); j++) {
            double d = max_abs_diff(bs[i].map, bs[j].map);
            if (d > v.max_branch_deviation) {
                v.max_branch_deviation = d;
                far_i = i;
                far_j = j;
            }
        }
    }
    if (v.max_branch_deviation < tolerance) {
        v.classification = Determinism::strongly_deterministic;
        return v;
    }
    // The witness comes from the most misaligned pair, not the first one
    // over the tolerance, so that it separates the branches clearly.
    double worst_defect = 0;
    std::size_t bad_i = 0, bad_j = 0;
    for (std::size_t i = 0; i < bs.size(); i++) {
        for (std::size_t j = i + 1; j < bs.size(); j++) {
            const double d = parallel_defect(bs[i].map, bs[j].map);
            if (d > worst_defect) {
                worst_defect = d;
                bad_i = i;
                bad_j = j;
            }
        }
    }
    if (!(worst_defect < tolerance)) {
        v.classification = Determinism::not_deterministic;
        v.witness = parallel_witness(bs[bad_i], bs[bad_j]);
        return v;
    }
    v.classification = Determinism::deterministic;
    v.witness = difference_witness(bs[far_i], bs[far_j]);
    return v;
}

Pattern with_measurement_angles(const Pattern &p, const AngleMap &angles) {
    Pattern q = p;
    for (Command &c : q.commands) {
        if (auto *m = std::get_if<Measure>(&c)) {
            auto it = angles.find(m->qubit);
            if (it != angles.end()) {
                m->angle = normalize_angle(it->second);
            }
        }
    }
    return q;
}

Pattern without_corrections(const Pattern &p) {
    Pattern q = p;
    std::erase_if(q.commands, [](const Command &c) {
        return std::holds_alternative<CorrectX>(c) || std::holds_alternative<CorrectZ>(c) ||
               std::holds_alternative<CorrectXAlpha>(c);
    });
    return q;
}

DeterminismVerdict classify_determinism(const Pattern &p, const ClassifyOptions &options) {
    DeterminismVerdict v = classify_branches(enumerate_branches(p, options.enumerate), options.tolerance);
    v.angle_samples = options.angle_samples;
    v.seed = options.seed;
    bool uniform = v.deterministic();
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const std::vector<Vertex> order = p.measurement_order();
    for (std::size_t s = 0; s < options.angle_samples && uniform; s++) {
        AngleMap sample;
        for (Vertex q : order) {
            sample[q] = angle(rng);
        }
        Pattern resampled = with_measurement_angles(p, sample);
        uniform = classify_branches(enumerate_branches(resampled, options.enumerate), options.tolerance).deterministic();
    }
    v.uniform = uniform;
    return v;
}

namespace {

void require_total(const std::vector<Vertex> &domain, const AngleMap &angles, const char *what,
                   const char *domain_name) {
    std::vector<Vertex> keys;
    for (const auto &[q, a] : angles) {
        keys.push_back(q);
    }
    if (keys != domain) {
        throw std::invalid_argument(std::string(what) + " angles must be given exactly on " + domain_name);
    }
}

}  // namespace

Matrix realized_embedding(const OpenGraphState &g, const AngleMap &meas_angles, const AngleMap &prep_angles) {
    const std::vector<Vertex> measured = g.measured();
    require_total(measured, meas_angles, "measurement", "O^c");
    require_total(g.prepared(), prep_angles, "preparation", "I^c");
    const std::vector<Vertex> &vs = g.vertices();
    const std::size_t nv = vs.size();
    if (nv > 20) {
        throw std::length_error("too many vertices for a dense embedding");
    }
    std::map<Vertex, unsigned> bit;  // first sorted vertex = most significant
    for (std::size_t k = 0; k < nv; k++) {
        bit[vs[k]] = static_cast<unsigned>(nv - 1 - k);
    }
    auto index_of = [&](std::size_t x, const std::vector<Vertex> &sub) {
        std::size_t r = 0;
        for (Vertex q : sub) {
            r = (r << 1) | ((x >> bit[q]) & 1);
        }
        return static_cast<Eigen::Index>(r);
    };
    const double norm = std::pow(2.0, -0.5 * static_cast<double>(g.prepared().size() + measured.size()));
    Matrix u = Matrix::Zero(Eigen::Index{1} << g.outputs().size(), Eigen::Index{1} << g.inputs().size());
    for (std::size_t x = 0; x < (std::size_t{1} << nv); x++) {
        // Phase of the prepared factors, the CZ signs and the <+_a| bras.
        double theta = 0;
        for (const auto &[q, a] : prep_angles) {
            theta += ((x >> bit[q]) & 1) ? a : 0.0;
        }
        for (const auto &[q, a] : meas_angles) {
            theta -= ((x >> bit[q]) & 1) ? a : 0.0;
        }
        int sign = 1;
        for (const Edge &e : g.edges()) {
            if (((x >> bit[e.u]) & 1) && ((x >> bit[e.v]) & 1)) {
                sign = -sign;
            }
        }
        u(index_of(x, g.outputs()), index_of(x, g.inputs())) += static_cast<double>(sign) * std::polar(norm, theta);
    }
    return u * std::pow(2.0, 0.5 * static_cast<double>(measured.size()));
}

Matrix realized_embedding(const OpenGraphState &g, const AngleMap &meas_angles) {
    AngleMap prep;
    for (Vertex q : g.prepared()) {
        prep[q] = 0;
    }
    return realized_embedding(g, meas_angles, prep);
}

KrausChannel::KrausChannel(std::vector<Matrix> operators) : operators_(std::move(operators)) {
    if (operators_.empty()) {
        throw std::invalid_argument("a channel needs at least one Kraus operator");
    }
}

Matrix KrausChannel::apply(const Matrix &rho) const {
    Matrix out = Matrix::Zero(operators_.front().rows(), operators_.front().rows());
    for (const Matrix &k : operators_) {
        out += k * rho * k.adjoint();
    }
    return out;
}

KrausChannel kraus_map(const BranchEnumeration &branches) {
    std::vector<Matrix> ops;
    ops.reserve(branches.branches.size());
    for (const BranchReport &b : branches.branches) {
        ops.push_back(b.map);
    }
    return KrausChannel(std::move(ops));
}

}  // namespace mbqc
