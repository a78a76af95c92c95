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

#include "surfacewl/kernels.hpp"

#if defined(SURFACEWL_HAVE_NEON) && defined(__aarch64__)
#include <arm_neon.h>
#define SURFACEWL_NEON_ENABLED 1
#endif

namespace swl::kernels {

#if defined(SURFACEWL_NEON_ENABLED)

namespace {

// One complex product per register.
inline float64x2_t
cmul(float64x2_t a, float64x2_t b) {
    const float64x2_t sign = {-1.0, 1.0};
    float64x2_t br = vdupq_laneq_f64(b, 0);
    float64x2_t bi = vdupq_laneq_f64(b, 1);
    float64x2_t as = vextq_f64(a, a, 1);
    return vfmaq_f64(vmulq_f64(a, br), vmulq_f64(as, bi), sign);
}

}  // namespace

void
matmul_neon(const cplx* a, const cplx* b, cplx* c, int n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    double* cd = reinterpret_cast<double*>(c);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            float64x2_t acc = vdupq_n_f64(0.0);
            for (int k = 0; k < n; ++k) {
                float64x2_t av = vld1q_f64(ad + 2L * (static_cast<long>(k) * n + i));
                float64x2_t bv = vld1q_f64(bd + 2L * (static_cast<long>(j) * n + k));
                acc = vaddq_f64(acc, cmul(av, bv));
            }
            vst1q_f64(cd + 2L * (static_cast<long>(j) * n + i), acc);
        }
    }
}

cplx
trace_product_neon(const cplx* a, const cplx* b, int n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            float64x2_t av = vld1q_f64(ad + 2L * (static_cast<long>(k) * n + i));
            float64x2_t bv = vld1q_f64(bd + 2L * (static_cast<long>(i) * n + k));
            acc = vaddq_f64(acc, cmul(av, bv));
        }
    }
    return cplx(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
}

#else

void
matmul_neon(const cplx* a, const cplx* b, cplx* c, int n) {
    matmul_scalar(a, b, c, n);
}

cplx
trace_product_neon(const cplx* a, const cplx* b, int n) {
    return trace_product_scalar(a, b, n);
}

#endif

}  // namespace swl::kernels
