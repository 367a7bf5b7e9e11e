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

#include <algorithm>
#include <cmath>

#include "mbqc/kernels.hpp"

namespace mbqc::kernels {

namespace {

void apply_1q(Complex *state, std::size_t size, unsigned bit, const Gate2 &g) {
    const std::size_t stride = std::size_t{1} << bit;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t k = 0; k < stride; k++) {
            Complex a0 = state[base + k];
            Complex a1 = state[base + k + stride];
            state[base + k] = g.m00 * a0 + g.m01 * a1;
            state[base + k + stride] = g.m10 * a0 + g.m11 * a1;
        }
    }
}

void apply_cz(Complex *state, std::size_t size, unsigned bit_a, unsigned bit_b) {
    const std::size_t mask = (std::size_t{1} << bit_a) | (std::size_t{1} << bit_b);
    for (std::size_t i = 0; i < size; i++) {
        if ((i & mask) == mask) {
            state[i] = -state[i];
        }
    }
}

void contract(const Complex *in, Complex *out, std::size_t in_size, unsigned bit, Complex c0, Complex c1) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::size_t low = stride - 1;
    for (std::size_t j = 0; j < in_size / 2; j++) {
        std::size_t i0 = ((j & ~low) << 1) | (j & low);
        out[j] = c0 * in[i0] + c1 * in[i0 | stride];
    }
}

void extend(const Complex *in, Complex *out, std::size_t in_size, Complex a0, Complex a1) {
    for (std::size_t i = 0; i < in_size; i++) {
        out[2 * i] = a0 * in[i];
        out[2 * i + 1] = a1 * in[i];
    }
}

Complex inner(const Complex *a, const Complex *b, std::size_t n) {
    Complex acc = 0;
    for (std::size_t k = 0; k < n; k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double max_abs_diff(const Complex *a, const Complex *b, std::size_t n) {
    double worst = 0;
    for (std::size_t k = 0; k < n; k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace

const KernelTable &scalar() {
    static const KernelTable table{"scalar", apply_1q, apply_cz, contract, extend, inner, max_abs_diff};
    return table;
}

}  // namespace mbqc::kernels
