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

#include <doctest.h>

#include <random>
#include <vector>

#include "surfacewl/kernels.hpp"

using namespace swl::kernels;

namespace {

std::vector<cplx>
random_matrix(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    std::vector<cplx> m(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (auto& x : m) {
        x = {d(rng), d(rng)};
    }
    return m;
}

double
max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace

TEST_CASE("scalar kernels against a direct loop") {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 9; ++n) {
        auto a = random_matrix(n, rng);
        auto b = random_matrix(n, rng);
        std::vector<cplx> c(a.size());
        matmul_scalar(a.data(), b.data(), c.data(), n);
        cplx tr = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                cplx s = 0;
                for (int k = 0; k < n; ++k) {
                    s += a[static_cast<size_t>(k * n + i)] * b[static_cast<size_t>(j * n + k)];
                }
                CHECK(std::abs(c[static_cast<size_t>(j * n + i)] - s) < 1e-12);
            }
            tr += c[static_cast<size_t>(i * n + i)];
        }
        CHECK(std::abs(trace_product_scalar(a.data(), b.data(), n) - tr) < 1e-11);
    }
}

TEST_CASE("SIMD kernels match the scalar reference") {
    std::mt19937_64 rng(2);
    INFO("active isa: " << isa_name(active_isa()));
    for (int n = 1; n <= 17; ++n) {
        auto a = random_matrix(n, rng);
        auto b = random_matrix(n, rng);
        std::vector<cplx> ref(a.size()), out(a.size());
        matmul_scalar(a.data(), b.data(), ref.data(), n);
        cplx tref = trace_product_scalar(a.data(), b.data(), n);
        const double tol = 1e-12 * n;
        if (isa_available(Isa::kAvx2)) {
            matmul_avx2(a.data(), b.data(), out.data(), n);
            CHECK(max_diff(ref, out) < tol);
            CHECK(std::abs(trace_product_avx2(a.data(), b.data(), n) - tref) < tol * n);
        }
        if (isa_available(Isa::kNeon)) {
            matmul_neon(a.data(), b.data(), out.data(), n);
            CHECK(max_diff(ref, out) < tol);
            CHECK(std::abs(trace_product_neon(a.data(), b.data(), n) - tref) < tol * n);
        }
        matmul(a.data(), b.data(), out.data(), n);
        CHECK(max_diff(ref, out) < tol);
        CHECK(std::abs(trace_product(a.data(), b.data(), n) - tref) < tol * n);
    }
}

TEST_CASE("dispatch reports a usable ISA") {
    CHECK(isa_available(Isa::kScalar));
    CHECK(isa_available(active_isa()));
}
