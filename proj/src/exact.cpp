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

#include "surfacewl/exact.hpp"

#include <vector>

namespace swl {

Integer
factorial(int k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k < 0 ? 0 : k));
    return r;
}

Integer
binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer
falling_factorial(long n, int k) {
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= Integer(n - i);
    }
    return r;
}

Integer
stirling2(int n, int k) {
    if (n == 0 && k == 0) {
        return 1;
    }
    if (n <= 0 || k <= 0 || k > n) {
        return 0;
    }
    // S(i, j) = j S(i-1, j) + S(i-1, j-1), rolling row.
    std::vector<Integer> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            row[j] = Integer(j) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    return row[k];
}

Rational
power(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) {
            throw DomainError("division-by-zero", "zero raised to a negative power");
        }
        Rational inv = 1 / r;
        return power(inv, -e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(num, den);
}

Integer
power(const Integer& z, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

Rational
make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string
to_string(const Integer& z) {
    return z.get_str();
}

std::string
to_string(const Rational& q) {
    return q.get_str();
}

Rational
parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw DomainError("parse-error", "not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

double
to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace swl
