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

#include <string>
#include <utility>
#include <vector>

#include "surfacewl/exact.hpp"

namespace swl {

// Dense univariate polynomial in n with exact rational coefficients.
// coeffs()[i] multiplies n^i; the zero polynomial has no coefficients.
class Polynomial {
 public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(const Rational& constant);  // NOLINT(implicit)
    Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(implicit)

    static Polynomial
    monomial(const Rational& c, int degree);

    // n + c
    static Polynomial
    linear(const Rational& c);

    // Newton-form interpolation through (x_i, y_i), distinct x_i.
    static Polynomial
    interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

    const std::vector<Rational>&
    coeffs() const {
        return c_;
    }

    // -1 for the zero polynomial.
    int
    degree() const {
        return static_cast<int>(c_.size()) - 1;
    }

    bool
    is_zero() const {
        return c_.empty();
    }

    Rational
    coeff(int i) const;

    Rational
    leading() const;

    Rational
    operator()(const Rational& x) const;

    Polynomial
    operator-() const;

    Polynomial&
    operator+=(const Polynomial& o);
    Polynomial&
    operator-=(const Polynomial& o);
    Polynomial&
    operator*=(const Polynomial& o);
    Polynomial&
    operator*=(const Rational& s);

    friend Polynomial
    operator+(Polynomial a, const Polynomial& b) {
        return a += b;
    }
    friend Polynomial
    operator-(Polynomial a, const Polynomial& b) {
        return a -= b;
    }
    friend Polynomial
    operator*(Polynomial a, const Polynomial& b) {
        return a *= b;
    }
    friend Polynomial
    operator*(Polynomial a, const Rational& s) {
        return a *= s;
    }

    bool
    operator==(const Polynomial& o) const {
        return c_ == o.c_;
    }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Polynomial, Polynomial>
    divmod(const Polynomial& a, const Polynomial& b);

    // Monic gcd (zero if both are zero).
    static Polynomial
    gcd(Polynomial a, Polynomial b);

    Polynomial
    monic() const;

    // Rational multiple with coprime integer coefficients and positive
    // leading coefficient; returns the factor applied.
    Rational
    make_primitive();

    std::string
    str(const std::string& var = "n") const;

 private:
    void
    trim();

    std::vector<Rational> c_;
};

}  // namespace swl
