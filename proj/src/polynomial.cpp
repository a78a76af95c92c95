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

#include "surfacewl/polynomial.hpp"

#include <sstream>

namespace swl {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) {
        c_.push_back(constant);
    }
}

Polynomial
Polynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial
Polynomial::linear(const Rational& c) {
    return Polynomial(std::vector<Rational>{c, 1});
}

void
Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Rational
Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) {
        return 0;
    }
    return c_[static_cast<size_t>(i)];
}

Rational
Polynomial::leading() const {
    return c_.empty() ? Rational(0) : c_.back();
}

Rational
Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

Polynomial
Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) {
        v = -v;
    }
    return r;
}

Polynomial&
Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size(), 0);
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

Polynomial&
Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size(), 0);
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

Polynomial&
Polynomial::operator*=(const Polynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < o.c_.size(); ++j) {
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Polynomial&
Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) {
        v *= s;
    }
    return *this;
}

std::pair<Polynomial, Polynomial>
Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw DomainError("division-by-zero", "polynomial division by zero");
    }
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int da = a.degree();
    if (da < db) {
        return {Polynomial(), a};
    }
    std::vector<Rational> q(static_cast<size_t>(da - db) + 1, 0);
    Rational lead_inv = 1 / b.leading();
    for (int i = da; i >= db; --i) {
        Rational f = rem[static_cast<size_t>(i)] * lead_inv;
        if (f == 0) {
            continue;
        }
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
        }
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial
Polynomial::monic() const {
    if (c_.empty()) {
        return *this;
    }
    Polynomial r = *this;
    r *= Rational(1) / leading();
    return r;
}

Polynomial
Polynomial::gcd(Polynomial a, Polynomial b) {
    // Primitive remainder sequence keeps coefficient growth in check.
    a.make_primitive();
    b.make_primitive();
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        r.make_primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rational
Polynomial::make_primitive() {
    if (c_.empty()) {
        return 1;
    }
    Integer lcm_den = 1;
    for (const auto& v : c_) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    }
    Integer g = 0;
    for (const auto& v : c_) {
        Integer num = v.get_num() * (lcm_den / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Rational factor = make_rational(lcm_den, g);
    if (c_.back() < 0) {
        factor = -factor;
    }
    for (auto& v : c_) {
        v *= factor;
    }
    return factor;
}

Polynomial
Polynomial::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) {
        throw DomainError("interpolation", "abscissa/ordinate size mismatch");
    }
    size_t m = xs.size();
    std::vector<Rational> dd = ys;
    for (size_t level = 1; level < m; ++level) {
        for (size_t i = m - 1; i >= level; --i) {
            Rational dx = xs[i] - xs[i - level];
            if (dx == 0) {
                throw DomainError("interpolation", "repeated abscissa");
            }
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    Polynomial result;
    for (size_t i = m; i-- > 0;) {
        result *= Polynomial::linear(-xs[i]);
        result += Polynomial(dd[i]);
    }
    return result;
}

std::string
Polynomial::str(const std::string& var) const {
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& v = c_[i];
        if (v == 0) {
            continue;
        }
        Rational mag = abs(v);
        if (first) {
            if (v < 0) {
                os << "-";
            }
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || i == 0) {
            os << mag.get_str();
            if (i > 0) {
                os << "*";
            }
        }
        if (i >= 1) {
            os << var;
        }
        if (i >= 2) {
            os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace swl
