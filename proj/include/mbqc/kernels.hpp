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
#include <string_view>

#include "mbqc/types.hpp"

// Dense state-vector kernels. Every routine exists as a scalar reference and,
// on x86-64, as an AVX2+FMA variant; active() picks one at first use based on
// CPUID. Setting MBQC_KERNELS=scalar in the environment forces the reference
// path. Amplitudes are interleaved (re, im) doubles, i.e. std::complex<double>.
//
// Bit positions count from the least significant bit of the amplitude index.

namespace mbqc::kernels {

/// Row-major 2x2 operator [[m00, m01], [m10, m11]].
struct Gate2 {
    Complex m00, m01, m10, m11;
};

struct KernelTable {
    std::string_view name;

    /// state[i0], state[i1] <- g * (state[i0], state[i1]) for every pair that
    /// differs only in `bit`. `size` is a power of two, at least 2.
    void (*apply_1q)(Complex *state, std::size_t size, unsigned bit, const Gate2 &g);

    /// Negates amplitudes whose index has both bits set (bit_a != bit_b).
    void (*apply_cz)(Complex *state, std::size_t size, unsigned bit_a, unsigned bit_b);

    /// Contracts `bit` with the bra (c0, c1): out[j] = c0 * in[j|0] + c1 * in[j|1]
    /// where j|b re-inserts b at `bit`. `out` has in_size / 2 entries.
    void (*contract)(const Complex *in, Complex *out, std::size_t in_size, unsigned bit, Complex c0, Complex c1);

    /// Appends a new least-significant qubit in state a0|0> + a1|1>:
    /// out[2i + b] = a_b * in[i]. `out` has 2 * in_size entries.
    void (*extend)(const Complex *in, Complex *out, std::size_t in_size, Complex a0, Complex a1);

    /// sum_k conj(a[k]) * b[k].
    Complex (*inner)(const Complex *a, const Complex *b, std::size_t n);

    /// max_k |a[k] - b[k]|; 0 for n == 0.
    double (*max_abs_diff)(const Complex *a, const Complex *b, std::size_t n);
};

const KernelTable &scalar();

/// AVX2 table, or nullptr when it was not compiled in or the CPU lacks
/// AVX2/FMA.
const KernelTable *avx2();

/// Table used by the simulator.
const KernelTable &active();

}  // namespace mbqc::kernels
