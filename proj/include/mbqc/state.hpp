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

#include <span>
#include <vector>

#include "mbqc/kernels.hpp"
#include "mbqc/types.hpp"

namespace mbqc {

/// Dense amplitudes over the currently live qubits, carrying one column per
/// computational-basis input at once: the amplitude index is
/// (column << live_count) | live_index, so every kernel acts on all columns
/// in a single sweep. Live qubit k (in insertion order) is bit
/// live_count - 1 - k of live_index.
class BatchedState {
   public:
    /// Bound on the input count: the batch holds 4^inputs amplitudes before
    /// any preparation.
    static constexpr unsigned kMaxInputs = 12;

    /// Identity map on `inputs`: column c holds the basis state |c> of the
    /// inputs, first input as the most significant bit.
    explicit BatchedState(std::span<const Vertex> inputs,
                          const kernels::KernelTable &table = kernels::active());

    /// Tensors in a fresh qubit a0|0> + a1|1>. Throws if `q` is already live.
    void prepare(Vertex q, Complex a0, Complex a1);
    void apply(Vertex q, const kernels::Gate2 &g);
    void cz(Vertex a, Vertex b);
    /// Destructive projection of `q` onto the bra c0<0| + c1<1|.
    void project(Vertex q, Complex c0, Complex c1);

    bool is_live(Vertex q) const;
    const std::vector<Vertex> &live() const {
        return live_;
    }

    /// Map from the input space to the span of `outputs` (first = most
    /// significant). `outputs` must be a permutation of the live qubits.
    Matrix to_matrix(std::span<const Vertex> outputs) const;

   private:
    unsigned bit_of(Vertex q) const;

    const kernels::KernelTable *table_;
    std::vector<Vertex> live_;
    unsigned input_count_;
    std::vector<Complex> amps_;
    std::vector<Complex> scratch_;
};

}  // namespace mbqc
