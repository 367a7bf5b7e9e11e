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
#include <random>

#include <gtest/gtest.h>

#include "mbqc/flow_finder.hpp"
#include "support.hpp"

using namespace mbqc;

namespace {

constexpr double kExact = 1e-12;

Pattern hadamard_pattern() {
    return Pattern{{1, 2}, {1}, {2}, {Prepare{2, 0}, Entangle{1, 2}, Measure{1, 0}, CorrectX{2, {1}}}};
}

/// X_1^{s_2} M_2^0 E_12 N_2^0 with I = O = {1}.
Pattern projector_pattern() {
    return Pattern{{1, 2}, {1}, {1}, {Prepare{2, 0}, Entangle{1, 2}, Measure{2, 0}, CorrectX{1, {2}}}};
}

Matrix ket_bra(int row, int col) {
    Matrix m = Matrix::Zero(2, 2);
    m(row, col) = 1;
    return m;
}

Matrix phase_matrix(double t) {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, t);
    return m;
}

bool parallel(const Vector &u, const Vector &v) {
    const double nu = u.norm(), nv = v.norm();
    return nu < 1e-12 || nv < 1e-12 || std::abs(std::abs(u.dot(v)) - nu * nv) < 1e-9 * nu * nv;
}

/// Synthesized patterns over random graphs with flow.
std::vector<std::pair<OpenGraphState, Pattern>> random_flow_patterns(std::uint64_t seed, int count, int n) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<OpenGraphState, Pattern>> out;
    while (static_cast<int>(out.size()) < count) {
        OpenGraphState g = support::random_open_graph(rng, n);
        FlowSearchResult r = find_flow(g);
        if (!r.found || g.measured().empty()) {
            continue;
        }
        out.emplace_back(g, synthesize(g, r.flow, support::random_angles(rng, g.measured())));
    }
    return out;
}

}  // namespace

TEST(run_branch, projector_example) {
    Pattern p = projector_pattern();
    EXPECT_LT(max_abs_diff(run_branch(p, "0"), ket_bra(0, 0)), kExact);
    EXPECT_LT(max_abs_diff(run_branch(p, "1"), ket_bra(0, 1)), kExact);
}

TEST(run_branch, hadamard_branches_are_scaled_hadamards) {
    Matrix expected = support::hadamard_matrix() / std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(run_branch(hadamard_pattern(), "0"), expected), kExact);
    EXPECT_LT(max_abs_diff(run_branch(hadamard_pattern(), "1"), expected), kExact);
}

TEST(run_branch, entangler_alone_is_controlled_z) {
    Pattern p{{1, 2}, {1, 2}, {1, 2}, {Entangle{1, 2}}};
    EXPECT_LT(max_abs_diff(run_branch(p, ""), support::cz_matrix()), kExact);
}

TEST(run_branch, errors) {
    EXPECT_THROW(run_branch(hadamard_pattern(), "01"), std::invalid_argument);
    EXPECT_THROW(run_branch(hadamard_pattern(), "2"), std::invalid_argument);
    Pattern premature{{1, 2}, {1}, {2}, {Prepare{2, 0}, Entangle{1, 2}, CorrectX{2, {1}}, Measure{1, 0}}};
    EXPECT_THROW(run_branch(premature, "0"), std::invalid_argument);
    RunOptions relaxed{true};
    EXPECT_NO_THROW(run_branch(premature, "1", relaxed));
}

TEST(run_branch, matches_dense_reference) {
    for (const auto &[g, p] : random_flow_patterns(31, 40, 5)) {
        const std::size_t n = p.measurement_order().size();
        for (std::size_t s = 0; s < (std::size_t{1} << n); s += 3) {
            std::string bits;
            for (std::size_t k = 0; k < n; k++) {
                bits.push_back(((s >> (n - 1 - k)) & 1) ? '1' : '0');
            }
            ASSERT_LT(max_abs_diff(run_branch(p, bits), support::dense_branch_map(p, bits)), 1e-12)
                << format_pattern(p) << bits;
        }
    }
}

TEST(run_branch, uncorrected_and_x_alpha_patterns_match_dense_reference) {
    std::mt19937_64 rng(32);
    for (const auto &[g, p] : random_flow_patterns(33, 20, 5)) {
        Pattern bare = without_corrections(p);
        Pattern prepped = synthesize(g, find_flow(g).flow, measurement_angles(p),
                                     support::random_angles(rng, g.prepared()));
        const std::string zeros(p.measurement_order().size(), '0');
        const std::string ones(p.measurement_order().size(), '1');
        for (const Pattern *q : {&bare, &prepped}) {
            ASSERT_LT(max_abs_diff(run_branch(*q, zeros), support::dense_branch_map(*q, zeros)), 1e-12);
            ASSERT_LT(max_abs_diff(run_branch(*q, ones), support::dense_branch_map(*q, ones)), 1e-12);
        }
    }
}

TEST(enumerate_branches, hadamard_has_two_equiprobable_branches) {
    BranchEnumeration e = enumerate_branches(hadamard_pattern());
    ASSERT_EQ(e.branches.size(), 2u);
    std::mt19937_64 rng(1);
    Vector psi = support::random_state(rng, 2);
    for (const BranchReport &b : e.branches) {
        EXPECT_NEAR(b.probability(psi), 0.5, kExact);
    }
}

TEST(enumerate_branches, projector_probabilities_depend_on_the_input) {
    BranchEnumeration e = enumerate_branches(projector_pattern());
    Vector psi(2);
    psi << Complex(0.6, 0), Complex(0, 0.8);
    EXPECT_NEAR(e.branches[0].probability(psi), 0.36, kExact);
    EXPECT_NEAR(e.branches[1].probability(psi), 0.64, kExact);
}

TEST(enumerate_branches, path3_branches_are_equal) {
    OpenGraphState g({1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {3});
    Pattern p = synthesize(g, find_flow(g).flow, {{1, 0.9}, {2, 2.1}});
    BranchEnumeration e = enumerate_branches(p);
    ASSERT_EQ(e.branches.size(), 4u);
    EXPECT_EQ(e.branches[3].outcomes, "11");
    for (const BranchReport &b : e.branches) {
        EXPECT_LT(max_abs_diff(b.map, e.branches[0].map), 1e-12);
    }
}

TEST(enumerate_branches, tree_and_per_branch_strategies_agree) {
    EnumerateOptions per_branch;
    per_branch.strategy = EnumerationStrategy::per_branch;
    for (const auto &[g, p] : random_flow_patterns(41, 30, 6)) {
        for (const Pattern &q : {p, without_corrections(p)}) {
            BranchEnumeration a = enumerate_branches(q);
            BranchEnumeration b = enumerate_branches(q, per_branch);
            ASSERT_EQ(a.branches.size(), b.branches.size());
            for (std::size_t k = 0; k < a.branches.size(); k++) {
                ASSERT_EQ(a.branches[k].outcomes, b.branches[k].outcomes);
                ASSERT_LT(max_abs_diff(a.branches[k].map, b.branches[k].map), 1e-12);
            }
        }
    }
}

TEST(enumerate_branches, completeness_holds_for_runnable_patterns) {
    for (const auto &[g, p] : random_flow_patterns(42, 30, 6)) {
        EXPECT_LT(enumerate_branches(p).completeness_deviation, 1e-9);
        BranchEnumeration bare = enumerate_branches(without_corrections(p));
        EXPECT_LT(bare.completeness_deviation, 1e-9);
        for (const BranchReport &b : bare.branches) {
            Eigen::JacobiSVD<Matrix> svd(b.map);
            EXPECT_LE(svd.singularValues()(0), 1 + 1e-9);
        }
    }
}

TEST(enumerate_branches, bound_is_enforced) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int v = 1; v <= 14; v++) {
        vs.push_back(v);
        if (v > 1) {
            es.push_back({v - 1, v});
        }
    }
    OpenGraphState g(vs, es, {1}, {14});
    AngleMap a;
    for (Vertex v : g.measured()) {
        a[v] = 0.1;
    }
    Pattern p = synthesize(g, find_flow(g).flow, a);
    EXPECT_THROW(enumerate_branches(p), std::length_error);
    EnumerateOptions wide;
    wide.max_measurements = 13;
    EXPECT_EQ(enumerate_branches(p, wide).branches.size(), std::size_t{1} << 13);
}

TEST(classify, projector_example_is_deterministic_only) {
    DeterminismVerdict v = classify_determinism(projector_pattern());
    EXPECT_EQ(v.classification, Determinism::deterministic);
    EXPECT_FALSE(v.uniform);
    EXPECT_EQ(v.angle_samples, 20u);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_NE(v.witness->first, v.witness->second);
}

TEST(classify, hadamard_is_strong_and_uniform) {
    DeterminismVerdict v = classify_determinism(hadamard_pattern());
    EXPECT_TRUE(v.strong());
    EXPECT_TRUE(v.deterministic());
    EXPECT_TRUE(v.uniform);
    EXPECT_FALSE(v.witness.has_value());
}

TEST(classify, synthesized_patterns_are_strong_and_uniform) {
    ClassifyOptions options;
    options.angle_samples = 5;
    for (const auto &[g, p] : random_flow_patterns(51, 25, 6)) {
        DeterminismVerdict v = classify_determinism(p, options);
        EXPECT_TRUE(v.strong()) << format_pattern(p);
        EXPECT_TRUE(v.uniform);
    }
}

TEST(classify, removing_corrections_breaks_determinism_with_a_checkable_witness) {
    OpenGraphState g({1, 2}, {{1, 2}}, {1}, {2});
    Pattern p = without_corrections(synthesize(g, find_flow(g).flow, {{1, 0.8}}));
    BranchEnumeration e = enumerate_branches(p);
    DeterminismVerdict v = classify_branches(e);
    ASSERT_EQ(v.classification, Determinism::not_deterministic);
    ASSERT_TRUE(v.witness.has_value());
    auto find = [&](const std::string &s) {
        return std::find_if(e.branches.begin(), e.branches.end(),
                            [&](const BranchReport &b) { return b.outcomes == s; })
            ->map;
    };
    EXPECT_FALSE(parallel(find(v.witness->first) * v.witness->input, find(v.witness->second) * v.witness->input));
}

TEST(classify, witnesses_are_genuine_for_random_uncorrected_patterns) {
    int negatives = 0;
    for (const auto &[g, p] : random_flow_patterns(52, 30, 5)) {
        BranchEnumeration e = enumerate_branches(without_corrections(p));
        DeterminismVerdict v = classify_branches(e);
        if (v.classification != Determinism::not_deterministic) {
            continue;
        }
        negatives++;
        std::map<std::string, Matrix> by_outcome;
        for (const BranchReport &b : e.branches) {
            by_outcome[b.outcomes] = b.map;
        }
        const Vector &q = v.witness->input;
        EXPECT_FALSE(parallel(by_outcome[v.witness->first] * q, by_outcome[v.witness->second] * q));
    }
    EXPECT_GT(negatives, 20);
}

TEST(classify, verdict_ignores_branch_order) {
    std::mt19937_64 rng(53);
    for (const auto &[g, p] : random_flow_patterns(54, 15, 5)) {
        for (const Pattern &q : {p, without_corrections(p)}) {
            BranchEnumeration e = enumerate_branches(q);
            Determinism expected = classify_branches(e).classification;
            std::shuffle(e.branches.begin(), e.branches.end(), rng);
            EXPECT_EQ(classify_branches(e).classification, expected);
        }
    }
}

TEST(proportionality, per_input_parallelism_versus_hilbert_schmidt) {
    Matrix a = ket_bra(0, 0), b = ket_bra(0, 1);
    EXPECT_TRUE(outputs_parallel(a, b));
    EXPECT_FALSE(hs_proportional(a, b));
    Matrix z = Matrix::Zero(2, 2);
    EXPECT_TRUE(outputs_parallel(z, a));
    EXPECT_TRUE(hs_proportional(z, a));
    EXPECT_TRUE(outputs_parallel(a, Complex(0, 3) * a));
    EXPECT_TRUE(hs_proportional(a, Complex(0, 3) * a));
    Matrix id = Matrix::Identity(2, 2);
    Matrix zz = id;
    zz(1, 1) = -1;
    EXPECT_FALSE(outputs_parallel(id, zz));
    EXPECT_GT(parallel_defect(id, zz), 0.1);
}

TEST(realized_embedding, hadamard_and_star) {
    OpenGraphState h({1, 2}, {{1, 2}}, {1}, {2});
    EXPECT_LT(max_abs_diff(realized_embedding(h, {{1, 0.0}}), support::hadamard_matrix()), kExact);
    const double alpha = 1.3;
    EXPECT_LT(max_abs_diff(realized_embedding(h, {{1, alpha}}), support::hadamard_matrix() * phase_matrix(-alpha)),
              kExact);
}

TEST(realized_embedding, nothing_measured_is_the_entangler) {
    OpenGraphState g({1, 2}, {{1, 2}}, {}, {1, 2});
    Matrix expected = support::cz_matrix() * Vector::Constant(4, 0.5);
    EXPECT_LT(max_abs_diff(realized_embedding(g, {}), expected), kExact);
    OpenGraphState full({1, 2}, {{1, 2}}, {1, 2}, {1, 2});
    EXPECT_LT(max_abs_diff(realized_embedding(full, {}), support::cz_matrix()), kExact);
}

TEST(realized_embedding, angle_maps_must_be_total) {
    OpenGraphState h({1, 2}, {{1, 2}}, {1}, {2});
    EXPECT_THROW(realized_embedding(h, {}), std::invalid_argument);
    EXPECT_THROW(realized_embedding(h, {{1, 0.0}}, {}), std::invalid_argument);
}

TEST(realized_embedding, equals_rescaled_branch_maps) {
    for (const auto &[g, p] : random_flow_patterns(61, 30, 6)) {
        const double scale = std::pow(2.0, 0.5 * static_cast<double>(g.measured().size()));
        Matrix u = realized_embedding(g, measurement_angles(p));
        EXPECT_LT(max_abs_diff(scale * enumerate_branches(p).branches.back().map, u), 1e-9);
        const Eigen::Index cols = u.cols();
        EXPECT_LT(max_abs_diff(u.adjoint() * u, Matrix::Identity(cols, cols)), 1e-9);
    }
}

TEST(kraus, projector_example_resets_to_zero) {
    KrausChannel t = kraus_map(enumerate_branches(projector_pattern()));
    std::mt19937_64 rng(3);
    Vector psi = support::random_state(rng, 2);
    Matrix out = t.apply(psi * psi.adjoint());
    EXPECT_LT(max_abs_diff(out, ket_bra(0, 0)), kExact);
}

TEST(kraus, hadamard_conjugates) {
    KrausChannel t = kraus_map(enumerate_branches(hadamard_pattern()));
    std::mt19937_64 rng(4);
    Vector psi = support::random_state(rng, 2);
    Matrix rho = psi * psi.adjoint();
    Matrix h = support::hadamard_matrix();
    EXPECT_LT(max_abs_diff(t.apply(rho), h * rho * h), kExact);
}

TEST(kraus, identity_pattern_is_identity_channel) {
    Pattern p{{1}, {1}, {1}, {}};
    KrausChannel t = kraus_map(enumerate_branches(p));
    Matrix rho(2, 2);
    rho << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
    EXPECT_LT(max_abs_diff(t.apply(rho), rho), kExact);
}

TEST(kraus, trace_preserving_and_positive) {
    std::mt19937_64 rng(5);
    for (const auto &[g, p] : random_flow_patterns(71, 15, 5)) {
        for (const Pattern &q : {p, without_corrections(p)}) {
            KrausChannel t = kraus_map(enumerate_branches(q));
            const Eigen::Index dim = t.operators().front().cols();
            Matrix m(dim, dim);
            for (Eigen::Index k = 0; k < dim; k++) {
                m.col(k) = support::random_state(rng, dim);
            }
            Matrix rho = m * m.adjoint();
            rho /= rho.trace();
            Matrix out = t.apply(rho);
            EXPECT_NEAR(std::abs(out.trace()), 1.0, 1e-9);
            Eigen::SelfAdjointEigenSolver<Matrix> eig(out);
            EXPECT_GT(eig.eigenvalues().minCoeff(), -1e-9);
        }
    }
}

TEST(comparisons, deviation_up_to_phase) {
    Matrix h = support::hadamard_matrix();
    EXPECT_LT(deviation_up_to_phase(std::polar(1.0, 0.77) * h, h), kExact);
    EXPECT_GT(deviation_up_to_phase(h, Matrix::Identity(2, 2)), 0.1);
    EXPECT_THROW(max_abs_diff(h, Matrix::Identity(4, 4)), std::invalid_argument);
}
