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

// AVX2 + FMA variants of the state-vector kernels. This translation unit is
// compiled with -mavx2 -mfma and only reached after a CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "mbqc/kernels.hpp"

namespace mbqc::kernels {

namespace {

// One __m256d holds two complex numbers: (re0, im0, re1, im1).

inline __m256d load2(const Complex *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(Complex *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d splat(Complex c) {
    return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag());
}

inline __m256d pair(Complex lo, Complex hi) {
    return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

/// Lane-wise complex product x * c.
inline __m256d cmul(__m256d x, __m256d c) {
    __m256d c_re = _mm256_movedup_pd(c);
    __m256d c_im = _mm256_permute_pd(c, 0xF);
    __m256d x_swapped = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(x, c_re, _mm256_mul_pd(x_swapped, c_im));
}

void apply_1q(Complex *state, std::size_t size, unsigned bit, const Gate2 &g) {
    const std::size_t stride = std::size_t{1} << bit;
    if (stride == 1) {
        // Partners are adjacent: (a0, a1) -> (m00 a0 + m01 a1, m10 a0 + m11 a1).
        const __m256d left = pair(g.m00, g.m10);
        const __m256d right = pair(g.m01, g.m11);
        for (std::size_t i = 0; i < size; i += 2) {
            __m256d v = load2(state + i);
            __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
            __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
            store2(state + i, _mm256_add_pd(cmul(a0, left), cmul(a1, right)));
        }
        return;
    }
    const __m256d m00 = splat(g.m00), m01 = splat(g.m01), m10 = splat(g.m10), m11 = splat(g.m11);
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        Complex *lo = state + base;
        Complex *hi = lo + stride;
        for (std::size_t k = 0; k < stride; k += 2) {
            __m256d a0 = load2(lo + k);
            __m256d a1 = load2(hi + k);
            store2(lo + k, _mm256_add_pd(cmul(a0, m00), cmul(a1, m01)));
            store2(hi + k, _mm256_add_pd(cmul(a0, m10), cmul(a1, m11)));
        }
    }
}

void apply_cz(Complex *state, std::size_t size, unsigned bit_a, unsigned bit_b) {
    const std::size_t mask = (std::size_t{1} << bit_a) | (std::size_t{1} << bit_b);
    const __m256d flip_both = _mm256_set1_pd(-0.0);
    const __m256d flip_high = _mm256_setr_pd(0.0, 0.0, -0.0, -0.0);
    for (std::size_t i = 0; i < size; i += 2) {
        bool low = (i & mask) == mask;
        bool high = ((i + 1) & mask) == mask;
        if (!low && !high) {
            continue;
        }
        __m256d v = load2(state + i);
        store2(state + i, _mm256_xor_pd(v, low ? flip_both : flip_high));
    }
}

void contract(const Complex *in, Complex *out, std::size_t in_size, unsigned bit, Complex c0, Complex c1) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::size_t out_size = in_size / 2;
    if (stride == 1) {
        const __m256d coeff = pair(c0, c1);
        std::size_t j = 0;
        for (; j + 2 <= out_size; j += 2) {
            __m256d u = cmul(load2(in + 2 * j), coeff);
            __m256d v = cmul(load2(in + 2 * j + 2), coeff);
            __m256d lows = _mm256_permute2f128_pd(u, v, 0x20);
            __m256d highs = _mm256_permute2f128_pd(u, v, 0x31);
            store2(out + j, _mm256_add_pd(lows, highs));
        }
        for (; j < out_size; j++) {
            out[j] = c0 * in[2 * j] + c1 * in[2 * j + 1];
        }
        return;
    }
    const __m256d k0 = splat(c0), k1 = splat(c1);
    for (std::size_t base = 0; base < in_size; base += 2 * stride) {
        const Complex *lo = in + base;
        const Complex *hi = lo + stride;
        Complex *dst = out + base / 2;
        for (std::size_t k = 0; k < stride; k += 2) {
            store2(dst + k, _mm256_add_pd(cmul(load2(lo + k), k0), cmul(load2(hi + k), k1)));
        }
    }
}

void extend(const Complex *in, Complex *out, std::size_t in_size, Complex a0, Complex a1) {
    const __m256d coeff = pair(a0, a1);
    for (std::size_t i = 0; i < in_size; i++) {
        __m256d x = _mm256_broadcast_pd(reinterpret_cast<const __m128d *>(in + i));
        store2(out + 2 * i, cmul(x, coeff));
    }
}

Complex inner(const Complex *a, const Complex *b, std::size_t n) {
    // re = sum(ar br + ai bi); im = sum(ar bi - ai br).
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d x = load2(a + k);
        __m256d y = load2(b + k);
        acc_re = _mm256_fmadd_pd(x, y, acc_re);
        acc_im = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0x5), acc_im);
    }
    alignas(32) double re[4], im[4];
    _mm256_store_pd(re, acc_re);
    _mm256_store_pd(im, acc_im);
    Complex total((re[0] + re[1]) + (re[2] + re[3]), (im[0] - im[1]) + (im[2] - im[3]));
    for (; k < n; k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double max_abs_diff(const Complex *a, const Complex *b, std::size_t n) {
    __m256d worst = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        __m256d d = _mm256_sub_pd(load2(a + k), load2(b + k));
        __m256d sq = _mm256_mul_pd(d, d);
        worst = _mm256_max_pd(worst, _mm256_hadd_pd(sq, sq));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, worst);
    double result = std::sqrt(std::max({lanes[0], lanes[1], lanes[2], lanes[3]}));
    for (; k < n; k++) {
        result = std::max(result, std::abs(a[k] - b[k]));
    }
    return result;
}

}  // namespace

const KernelTable &avx2_table() {
    static const KernelTable table{"avx2", apply_1q, apply_cz, contract, extend, inner, max_abs_diff};
    return table;
}

}  // namespace mbqc::kernels
