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

#pragma once

#include <complex>

namespace swl::kernels {

using cplx = std::complex<double>;

enum class Isa { kScalar, kAvx2, kNeon };

// All matrices are n x n, column-major, densely packed.

// C = A * B. C must not alias A or B.
void
matmul_scalar(const cplx* a, const cplx* b, cplx* c, int n);
void
matmul_avx2(const cplx* a, const cplx* b, cplx* c, int n);
void
matmul_neon(const cplx* a, const cplx* b, cplx* c, int n);

// tr(A * B) without forming the product.
cplx
trace_product_scalar(const cplx* a, const cplx* b, int n);
cplx
trace_product_avx2(const cplx* a, const cplx* b, int n);
cplx
trace_product_neon(const cplx* a, const cplx* b, int n);

// Whether the variant was compiled in and the CPU can run it.
bool
isa_available(Isa isa);

// Chosen once: the best available variant, unless SURFACEWL_SIMD=scalar.
Isa
active_isa();

const char*
isa_name(Isa isa);

void
matmul(const cplx* a, const cplx* b, cplx* c, int n);

cplx
trace_product(const cplx* a, const cplx* b, int n);

}  // namespace swl::kernels
