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

#include "mbqc/pattern.hpp"

#include <random>

#include <gtest/gtest.h>

#include "mbqc/flow_finder.hpp"
#include "support.hpp"

using namespace mbqc;

namespace {

OpenGraphState path2() {
    return OpenGraphState({1, 2}, {{1, 2}}, {1}, {2});
}

OpenGraphState path3() {
    return OpenGraphState({1, 2, 3}, {{1, 2}, {2, 3}}, {1}, {3});
}

Pattern hadamard_pattern() {
    return Pattern{{1, 2}, {1}, {2}, {Prepare{2, 0}, Entangle{1, 2}, Measure{1, 0}, CorrectX{2, {1}}}};
}

}  // namespace

TEST(pattern, synthesizes_the_hadamard_pattern) {
    Pattern p = synthesize(path2(), find_flow(path2()).flow, {{1, 0.0}});
    EXPECT_EQ(p, hadamard_pattern());
    EXPECT_EQ(to_operator_string(p), "X_2^{s_1} M_1^{0} E_{1,2} N_2^{0}");
}

TEST(pattern, synthesizes_path3) {
    Pattern p = synthesize(path3(), find_flow(path3()).flow, {{1, 0.25}, {2, 0.5}});
    Pattern expected{{1, 2, 3},
                     {1},
                     {3},
                     {Prepare{2, 0}, Prepare{3, 0}, Entangle{1, 2}, Entangle{2, 3}, Measure{1, 0.25}, CorrectX{2, {1}},
                      CorrectZ{3, {1}}, Measure{2, 0.5}, CorrectX{3, {2}}}};
    EXPECT_EQ(p, expected);
    EXPECT_TRUE(check_runnable(p).ok());
}

TEST(pattern, nothing_measured_gives_entanglers_only) {
    OpenGraphState g({1, 2, 3}, {{1, 2}, {2, 3}}, {1, 2, 3}, {1, 2, 3});
    Pattern p = synthesize(g, find_flow(g).flow, {});
    ASSERT_EQ(p.commands.size(), 2u);
    EXPECT_TRUE(std::holds_alternative<Entangle>(p.commands[0]));
    EXPECT_TRUE(std::holds_alternative<Entangle>(p.commands[1]));
}

TEST(pattern, nonzero_preparation_angle_uses_x_alpha) {
    Pattern p = synthesize(path2(), find_flow(path2()).flow, {{1, 0.0}}, {{2, 0.7}});
    EXPECT_EQ(p.commands.back(), Command(CorrectXAlpha{2, 0.7, {1}}));
    EXPECT_EQ(p.commands.front(), Command(Prepare{2, 0.7}));
}

TEST(pattern, synthesis_rejects_bad_input) {
    Flow bad{{{1, 2}}, {{1, 1}, {2, 0}}, {}};
    EXPECT_THROW(synthesize(path2(), bad, {{1, 0.0}}), std::invalid_argument);
    Flow good = find_flow(path2()).flow;
    EXPECT_THROW(synthesize(path2(), good, {}), std::invalid_argument);
    EXPECT_THROW(synthesize(path2(), good, {{1, 0.0}, {2, 0.0}}), std::invalid_argument);
    EXPECT_THROW(synthesize(path2(), good, {{1, 0.0}}, {}), std::invalid_argument);
}

TEST(pattern, runnability_violations) {
    EXPECT_TRUE(check_runnable(hadamard_pattern()).ok());

    Pattern premature{{1, 2}, {1}, {2}, {Prepare{2, 0}, Entangle{1, 2}, CorrectZ{1, {1}}, Measure{1, 0}}};
    EXPECT_TRUE(check_runnable(premature).has("R0"));

    Pattern measures_output{{1, 2}, {1}, {2}, {Prepare{2, 0}, Entangle{1, 2}, Measure{1, 0}, Measure{2, 0}}};
    EXPECT_TRUE(check_runnable(measures_output).has("R2"));

    Pattern after_measure{{1, 2}, {1}, {2}, {Prepare{2, 0}, Measure{1, 0}, Entangle{1, 2}}};
    EXPECT_TRUE(check_runnable(after_measure).has("R1"));

    Pattern unprepared{{1, 2}, {1}, {2}, {Entangle{1, 2}, Measure{1, 0}, Prepare{2, 0}}};
    EXPECT_TRUE(check_runnable(unprepared).has("R1"));

    Pattern stranger{{1, 2}, {1}, {2}, {Prepare{2, 0}, Entangle{1, 5}, Measure{1, 0}}};
    EXPECT_TRUE(check_runnable(stranger).has("unknown-qubit"));
}

TEST(pattern, synthesized_patterns_are_runnable_and_signals_respect_levels) {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int trial = 0; trial < 400; trial++) {
        OpenGraphState g = support::random_open_graph(rng, 6);
        FlowSearchResult r = find_flow(g);
        if (!r.found) {
            continue;
        }
        Pattern p = synthesize(g, r.flow, support::random_angles(rng, g.measured()));
        ASSERT_TRUE(check_runnable(p).ok()) << check_runnable(p).str();
        for (const Command &c : p.commands) {
            const Signals &s = command_signals(c);
            if (s.empty()) {
                continue;
            }
            ASSERT_EQ(s.size(), 1u);
            for (Vertex t : command_targets(c)) {
                EXPECT_GT(r.flow.levels.at(t), r.flow.levels.at(s[0]));
            }
        }
        checked++;
    }
    EXPECT_GT(checked, 20);
}

TEST(pattern, stabilizer_form_breaks_only_r0) {
    Pattern p = synthesize_stabilizer_form(path3(), find_flow(path3()).flow, {{1, 0.25}, {2, 0.5}});
    ValidationResult r = check_runnable(p);
    EXPECT_TRUE(r.has("R0"));
    for (const Violation &v : r.violations) {
        EXPECT_EQ(v.code, "R0");
    }
    OpenGraphState g({1, 2}, {{1, 2}}, {1, 2}, {1, 2});
    EXPECT_EQ(synthesize_stabilizer_form(g, find_flow(g).flow, {}), synthesize(g, find_flow(g).flow, {}));
}

TEST(pattern, accessors) {
    Pattern p = synthesize(path3(), find_flow(path3()).flow, {{1, 0.25}, {2, 0.5}}, {{2, 0.1}, {3, 0.2}});
    EXPECT_EQ(underlying_graph(p), path3());
    EXPECT_EQ(measurement_angles(p), (AngleMap{{1, 0.25}, {2, 0.5}}));
    EXPECT_EQ(preparation_angles(p), (AngleMap{{2, 0.1}, {3, 0.2}}));
    EXPECT_EQ(p.measurement_order(), (std::vector<Vertex>{1, 2}));
}

TEST(pattern, hadamard_is_self_adjoint_up_to_relabeling) {
    OpenGraphState g = path2();
    Pattern h = synthesize(g, find_flow(g).flow, {{1, 0.0}});
    Pattern dagger = adjoint(h, find_flow(g.dual()).flow);
    EXPECT_NE(dagger, h);
    EXPECT_EQ(relabel(dagger, {{1, 2}, {2, 1}}), h);
}

TEST(pattern, adjoint_swaps_angle_vectors) {
    OpenGraphState g = path3();
    Pattern p = synthesize(g, find_flow(g).flow, {{1, 0.3}, {2, 0.4}});
    Flow reverse = find_flow(g.dual()).flow;
    Pattern d = adjoint(p, reverse);
    EXPECT_EQ(measurement_angles(d), (AngleMap{{2, 0.0}, {3, 0.0}}));
    EXPECT_EQ(preparation_angles(d), (AngleMap{{1, 0.3}, {2, 0.4}}));
    Pattern back = adjoint(d, find_flow(g).flow);
    EXPECT_EQ(back, p);
    EXPECT_THROW(adjoint(p, find_flow(g).flow), std::invalid_argument);
}

TEST(pattern_text, round_trip) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; trial++) {
        OpenGraphState g = support::random_open_graph(rng, 6);
        FlowSearchResult r = find_flow(g);
        if (!r.found) {
            continue;
        }
        Pattern p = synthesize(g, r.flow, support::random_angles(rng, g.measured()),
                               support::random_angles(rng, g.prepared()));
        ASSERT_EQ(parse_pattern(format_pattern(p)), p);
    }
}

TEST(pattern_text, format) {
    Pattern p{{1, 2, 3}, {1}, {3}, {Prepare{2, 0}, Measure{1, 0.7853981633974483}, CorrectXAlpha{2, 0.5, {1, 3}}}};
    EXPECT_EQ(format_pattern(p), "V: 1 2 3\nI: 1\nO: 3\nN 2 0.0\nM 1 0.78539816339744828\nXA 2 0.5 [1,3]\n");
}

TEST(pattern_text, parse_errors_name_the_line) {
    try {
        parse_pattern("V: 1 2\nI: 1\nO: 2\nN 2 zero\n");
        FAIL() << "expected an error";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_pattern("V: 1\nQ 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_pattern("V: 1 2\nM 1 nan\n"), std::invalid_argument);
    EXPECT_THROW(parse_pattern("V: 1 2\nX 2 [1\n"), std::invalid_argument);
}

TEST(pattern_text, comments_and_angle_normalization) {
    Pattern p = parse_pattern("# hadamard\nV: 1 2\nI: 1\nO: 2\n\nN 2 0\nE 1 2\nM 1 -6.283185307179586\nX 2 [1]\n");
    EXPECT_EQ(p, hadamard_pattern());
}
