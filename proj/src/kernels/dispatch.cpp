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

#include <cstdlib>
#include <cstring>

#include "mbqc/kernels.hpp"

namespace mbqc::kernels {

#if defined(MBQC_HAVE_AVX2_KERNELS)
const KernelTable &avx2_table();
#endif

const KernelTable *avx2() {
#if defined(MBQC_HAVE_AVX2_KERNELS)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return supported ? &avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active() {
    static const KernelTable *table = []() -> const KernelTable * {
        const char *forced = std::getenv("MBQC_KERNELS");
        if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
            return &scalar();
        }
        if (const KernelTable *simd = avx2()) {
            return simd;
        }
        return &scalar();
    }();
    return *table;
}

}  // namespace mbqc::kernels
