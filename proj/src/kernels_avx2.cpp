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

// Built with -mavx2 -mfma; only reached after a runtime CPU check.

#include "surfacewl/kernels.hpp"

#if defined(SURFACEWL_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace swl::kernels {

#if defined(SURFACEWL_HAVE_AVX2)

namespace {

// Two complex products per register: (ar br - ai bi, ai br + ar bi).
inline __m256d
cmul(__m256d a, __m256d b) {
    __m256d br = _mm256_movedup_pd(b);
    __m256d bi = _mm256_permute_pd(b, 0xF);
    __m256d as = _mm256_permute_pd(a, 0x5);
    return _mm256_addsub_pd(_mm256_mul_pd(a, br), _mm256_mul_pd(as, bi));
}

}  // namespace

void
matmul_avx2(const cplx* a, const cplx* b, cplx* c, int n) {
    const double* ad = reinterpret_cast<const double*>(a);
    double* cd = reinterpret_cast<double*>(c);
    const int pairs = n / 2;
    for (int j = 0; j < n; ++j) {
        double* cj = cd + 2L * j * n;
        for (int p = 0; p < pairs; ++p) {
            __m256d acc = _mm256_setzero_pd();
            for (int k = 0; k < n; ++k) {
                const cplx bkj = b[static_cast<long>(j) * n + k];
                __m256d bb = _mm256_set_pd(bkj.imag(), bkj.real(), bkj.imag(), bkj.real());
                __m256d av = _mm256_loadu_pd(ad + 2L * k * n + 4L * p);
                acc = _mm256_add_pd(acc, cmul(av, bb));
            }
            _mm256_storeu_pd(cj + 4L * p, acc);
        }
        if (n % 2) {
            cplx s = 0;
            for (int k = 0; k < n; ++k) {
                s += a[static_cast<long>(k) * n + n - 1] * b[static_cast<long>(j) * n + k];
            }
            c[static_cast<long>(j) * n + n - 1] = s;
        }
    }
}

cplx
trace_product_avx2(const cplx* a, const cplx* b, int n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    const int pairs = n / 2;
    __m256d acc = _mm256_setzero_pd();
    cplx tail = 0;
    for (int k = 0; k < n; ++k) {
        // Column k of A against row k of B (stride n).
        for (int p = 0; p < pairs; ++p) {
            int i = 2 * p;
            __m256d av = _mm256_loadu_pd(ad + 2L * k * n + 2L * i);
            __m128d lo = _mm_loadu_pd(bd + 2L * (static_cast<long>(i) * n + k));
            __m128d hi = _mm_loadu_pd(bd + 2L * (static_cast<long>(i + 1) * n + k));
            acc = _mm256_add_pd(acc, cmul(av, _mm256_set_m128d(hi, lo)));
        }
        if (n % 2) {
            tail += a[static_cast<long>(k) * n + n - 1] * b[static_cast<long>(n - 1) * n + k];
        }
    }
    alignas(32) double out[4];
    _mm256_store_pd(out, acc);
    return cplx(out[0] + out[2], out[1] + out[3]) + tail;
}

#else

void
matmul_avx2(const cplx* a, const cplx* b, cplx* c, int n) {
    matmul_scalar(a, b, c, n);
}

cplx
trace_product_avx2(const cplx* a, const cplx* b, int n) {
    return trace_product_scalar(a, b, n);
}

#endif

}  // namespace swl::kernels
