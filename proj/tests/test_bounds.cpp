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

#include <cmath>

#include "surfacewl/bounds.hpp"
#include "surfacewl/characters.hpp"
#include "surfacewl/surface.hpp"

using namespace swl;

TEST_CASE("zeta tail bounds dominate long partial sums") {
    for (double t : {1.5, 2.0, 3.0, 7.5}) {
        for (std::int64_t m0 : {1, 2, 5}) {
            long double direct = 0;
            for (std::int64_t m = m0; m < 2000000; ++m) {
                direct += std::pow(static_cast<long double>(m), -t);
            }
            CHECK(zeta_tail_upper(t, m0) >= direct);
        }
    }
    CHECK(zeta_upper(2.0L) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-3));
    CHECK(std::isinf(static_cast<double>(zeta_tail_upper(1.0L, 1))));
}

TEST_CASE("GLM exponents") {
    GlmExponents e = glm_exponents(10);
    REQUIRE(e.v.size() == 9);
    for (int j = 1; j <= 9; ++j) {
        CHECK(e.v[static_cast<size_t>(j - 1)] == doctest::Approx(e.v[static_cast<size_t>(9 - j)]));
        CHECK(e.v[static_cast<size_t>(j - 1)] >= std::min(j, 10 - j));
    }
    CHECK(glm_exponent(10, 1) == doctest::Approx(std::log(9.0)));
    CHECK_THROWS_AS(glm_exponent(10, 10), DomainError);
}

TEST_CASE("GLM lower bound never exceeds the dimension") {
    for (int k = 0; k <= 6; ++k) {
        for (const auto& l : enumerate_partitions(k)) {
            for (long n = std::max(2, l.length() + 1); n <= 8; ++n) {
                CHECK(glm_lower_bound(l, n) <= static_cast<long double>(dim_un(l, n).get_d()));
            }
        }
    }
}

TEST_CASE("single-representation majorant") {
    CHECK(majorant_exponent(4, 2) == 256);
    Word empty = Word::parse("", 2);
    for (long n : {2L, 3L, 4L}) {
        for (const YoungDiagram& l : {YoungDiagram{1}, YoungDiagram{2}, YoungDiagram{2, 1}}) {
            if (l.length() >= n) {
                continue;
            }
            BoundReport r = single_lambda_majorant(empty, l, n);
            Rational D(dim_un(l, n));
            CHECK(r.majorant == Rational(n) / (D * D * D));
        }
    }
    Word c = Word::parse("abAB", 2);
    for (long n : {2L, 3L, 4L}) {
        for (const YoungDiagram& l : {YoungDiagram{}, YoungDiagram{1}, YoungDiagram{2}}) {
            Rational v = fourier_coefficient_poly(c, l, n).value;
            CHECK(abs(v) <= single_lambda_majorant(c, l, n).majorant);
        }
    }
    // Full columns are stripped.
    CHECK(single_lambda_majorant(c, YoungDiagram{2, 1}, 2).lambda == YoungDiagram{1});
    CHECK_THROWS_AS(single_lambda_majorant(c, YoungDiagram{1, 1, 1}, 2), DomainError);
}
