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

namespace swl::kernels {

void
matmul_scalar(const cplx* a, const cplx* b, cplx* c, int n) {
    for (int j = 0; j < n; ++j) {
        cplx* cj = c + static_cast<long>(j) * n;
        for (int i = 0; i < n; ++i) {
            cj[i] = 0;
        }
        for (int k = 0; k < n; ++k) {
            const cplx bkj = b[static_cast<long>(j) * n + k];
            const cplx* ak = a + static_cast<long>(k) * n;
            for (int i = 0; i < n; ++i) {
                cj[i] += ak[i] * bkj;
            }
        }
    }
}

cplx
trace_product_scalar(const cplx* a, const cplx* b, int n) {
    cplx s = 0;
    for (int k = 0; k < n; ++k) {
        const cplx* ak = a + static_cast<long>(k) * n;
        for (int i = 0; i < n; ++i) {
            s += ak[i] * b[static_cast<long>(i) * n + k];
        }
    }
    return s;
}

}  // namespace swl::kernels
