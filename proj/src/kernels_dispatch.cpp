// Copyright 2026 the surfacewl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <cstring>

#include "surfacewl/kernels.hpp"

namespace swl::kernels {

bool
isa_available(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return true;
        case Isa::kAvx2:
#if defined(SURFACEWL_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::kNeon:
#if defined(SURFACEWL_HAVE_NEON) && defined(__aarch64__)
            return true;  // mandatory on AArch64
#else
            return false;
#endif
    }
    return false;
}

Isa
active_isa() {
    static const Isa chosen = [] {
        const char* env = std::getenv("SURFACEWL_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) {
            return Isa::kScalar;
        }
        if (isa_available(Isa::kAvx2)) {
            return Isa::kAvx2;
        }
        if (isa_available(Isa::kNeon)) {
            return Isa::kNeon;
        }
        return Isa::kScalar;
    }();
    return chosen;
}

const char*
isa_name(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return "scalar";
        case Isa::kAvx2:
            return "avx2";
        case Isa::kNeon:
            return "neon";
    }
    return "unknown";
}

void
matmul(const cplx* a, const cplx* b, cplx* c, int n) {
    switch (active_isa()) {
        case Isa::kAvx2:
            matmul_avx2(a, b, c, n);
            return;
        case Isa::kNeon:
            matmul_neon(a, b, c, n);
            return;
        case Isa::kScalar:
            break;
    }
    matmul_scalar(a, b, c, n);
}

cplx
trace_product(const cplx* a, const cplx* b, int n) {
    switch (active_isa()) {
        case Isa::kAvx2:
            return trace_product_avx2(a, b, n);
        case Isa::kNeon:
            return trace_product_neon(a, b, n);
        case Isa::kScalar:
            break;
    }
    return trace_product_scalar(a, b, n);
}

}  // namespace swl::kernels
