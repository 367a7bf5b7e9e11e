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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/types.hpp"

namespace mbqc {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kDefaultMaxMeasurements = 12;
inline constexpr std::uint64_t kDefaultSeed = 20060101;

struct RunOptions {
    /// Lets corrections consume outcomes of measurements that come later in
    /// the command list. Needed for stabilizer-form patterns; every other
    /// runnability rule still applies.
    bool allow_anachronical_signals = false;
};

/// Branch map A_s: 2^|O| x 2^|I| matrix for the outcome string `outcomes`
/// (one '0'/'1' per Measure command, in command order). Throws
/// std::invalid_argument if the pattern is not runnable or the string has the
/// wrong length.
Matrix run_branch(const Pattern &p, std::string_view outcomes, const RunOptions &options = {});

struct BranchReport {
    std::string outcomes;
    Matrix map;

    /// ||A_s psi||^2 for a normalized input psi.
    double probability(const Vector &input) const;
};

struct BranchEnumeration {
    std::vector<Vertex> measurement_order;
    std::vector<BranchReport> branches;  // lexicographic in `outcomes`
    /// max-abs entry of sum_s A_s^dag A_s - I.
    double completeness_deviation = 0;
};

enum class EnumerationStrategy {
    /// Shares the simulation of common outcome prefixes; falls back to
    /// per_branch when signals are anachronical.
    tree,
    per_branch,
};

struct EnumerateOptions {
    std::size_t max_measurements = kDefaultMaxMeasurements;
    RunOptions run;
    EnumerationStrategy strategy = EnumerationStrategy::tree;
};

/// All 2^n branch maps. Throws std::length_error beyond max_measurements.
BranchEnumeration enumerate_branches(const Pattern &p, const EnumerateOptions &options = {});

enum class Determinism { not_deterministic, deterministic, strongly_deterministic };

std::string to_string(Determinism d);

/// Evidence against (strong) determinism: on `input`, branches `first` and
/// `second` give outputs that are different (for a not-strong verdict) or
/// not even parallel (for a not-deterministic verdict).
struct Witness {
    std::string first;
    std::string second;
    Vector input;
    /// max-abs difference of the two outputs, or for non-parallel outputs
    /// the sine of the angle between them.
    double deviation = 0;
};

struct DeterminismVerdict {
    Determinism classification = Determinism::not_deterministic;
    bool uniform = false;
    std::size_t angle_samples = 0;
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
    /// Largest pairwise max-abs difference between branch maps.
    double max_branch_deviation = 0;
    std::optional<Witness> witness;

    bool deterministic() const {
        return classification != Determinism::not_deterministic;
    }
    bool strong() const {
        return classification == Determinism::strongly_deterministic;
    }
};

struct ClassifyOptions {
    std::size_t angle_samples = 20;
    std::uint64_t seed = kDefaultSeed;
    double tolerance = kDefaultTolerance;
    EnumerateOptions enumerate;
};

/// Pairwise classification of the branch maps. Strong: every pair equal
/// within `tolerance` (max-abs). Deterministic: every pair sends each input
/// to parallel outputs (see parallel_defect). Leaves uniform = false.
DeterminismVerdict classify_branches(const BranchEnumeration &branches, double tolerance = kDefaultTolerance);

/// classify_branches plus uniformity: the pattern is re-classified with
/// `angle_samples` fresh uniformly random measurement-angle vectors (same
/// geometry and corrections); uniform iff every sample and the original are
/// at least deterministic.
DeterminismVerdict classify_determinism(const Pattern &p, const ClassifyOptions &options = {});

/// Copy of `p` with each Measure angle replaced from `angles` (missing keys
/// keep their angle).
Pattern with_measurement_angles(const Pattern &p, const AngleMap &angles);

/// Copy of `p` with every correction command removed.
Pattern without_corrections(const Pattern &p);

/// 2^{n/2} (prod_{i in O^c} <+_{a_i}|_i) E_G N_{I^c}, computed directly over
/// the full 2^|V| space (no corrections, no branching). Throws
/// std::invalid_argument if an angle map is not total.
Matrix realized_embedding(const OpenGraphState &g, const AngleMap &meas_angles, const AngleMap &prep_angles);
Matrix realized_embedding(const OpenGraphState &g, const AngleMap &meas_angles);

/// rho -> sum_s A_s rho A_s^dag.
class KrausChannel {
   public:
    explicit KrausChannel(std::vector<Matrix> operators);

    Matrix apply(const Matrix &rho) const;
    const std::vector<Matrix> &operators() const {
        return operators_;
    }

   private:
    std::vector<Matrix> operators_;
};

KrausChannel kraus_map(const BranchEnumeration &branches);

// Matrix comparisons routed through the active kernel table.

double max_abs_diff(const Matrix &a, const Matrix &b);
/// Hilbert-Schmidt inner product tr(A^dag B).
Complex hs_inner(const Matrix &a, const Matrix &b);
/// min over unit phases w of max-abs(A - w B), with w = phase of <B, A>.
double deviation_up_to_phase(const Matrix &a, const Matrix &b);
/// Hilbert-Schmidt proportionality: |A||B| - |<A,B>| < tolerance |A||B|.
/// Zero maps are proportional to everything.
bool hs_proportional(const Matrix &a, const Matrix &b, double tolerance = kDefaultTolerance);

/// How far A and B are from mapping every input q to parallel vectors
/// Aq, Bq. The wedge Aq ^ Bq is quadratic in q, so it vanishes identically
/// iff its polarization vanishes on all basis pairs (j, k):
///   a_j(x)b_k + a_k(x)b_j - b_j(x)a_k - b_k(x)a_j = 0, a_j = A e_j.
/// Returns the largest Frobenius norm of that tensor over |A||B|; 0 when
/// either map is zero.
double parallel_defect(const Matrix &a, const Matrix &b);

/// The determinism test used by classify_branches: parallel_defect < tolerance.
bool outputs_parallel(const Matrix &a, const Matrix &b, double tolerance = kDefaultTolerance);

}  // namespace mbqc
