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

#include "surfacewl/exact.hpp"

using namespace swl;

namespace {

// Surjections from an n-set onto a k-set, by brute force over all maps.
long
surjections(int n, int k) {
    long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= k;
    }
    long count = 0;
    for (long code = 0; code < total; ++code) {
        std::vector<bool> hit(static_cast<size_t>(k), false);
        long c = code;
        for (int i = 0; i < n; ++i) {
            hit[static_cast<size_t>(c % k)] = true;
            c /= k;
        }
        bool all = true;
        for (bool h : hit) {
            all = all && h;
        }
        count += all ? 1 : 0;
    }
    return count;
}

}  // namespace

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == Integer("15511210043330985984000000"));
    for (int n = 0; n <= 12; ++n) {
        Integer row = 0;
        for (int k = 0; k <= n; ++k) {
            row += binomial(n, k);
        }
        CHECK(row == Integer(1L << n));
    }
    CHECK(falling_factorial(7, 3) == 210);
    CHECK(falling_factorial(3, 5) == 0);
}

TEST_CASE("stirling numbers count surjections") {
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            CHECK(stirling2(n, k) * factorial(k) == Integer(surjections(n, k)));
        }
    }
}

TEST_CASE("rational powers and parsing") {
    CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(power(Rational(5), 0) == 1);
    CHECK_THROWS(power(Rational(0), -1));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK(to_string(make_rational(-3, 9)) == "-1/3");
}
