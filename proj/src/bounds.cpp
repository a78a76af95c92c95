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

#include "surfacewl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "surfacewl/characters.hpp"

namespace swl {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

double
log10_integer(const Integer& z) {
    if (z <= 0) {
        return -std::numeric_limits<double>::infinity();
    }
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log10(mant) + static_cast<double>(exp2) * std::log10(2.0);
}

// Drops full columns: same U(n) irrep up to a power of det, which is 1 on
// every relator value.
YoungDiagram
strip_full_columns(const YoungDiagram& lambda, long n) {
    if (lambda.length() < n) {
        return lambda;
    }
    if (lambda.length() > n) {
        throw DomainError("rank-too-small", "length(" + lambda.str() + ") exceeds n = " + std::to_string(n));
    }
    int last = lambda[static_cast<int>(n) - 1];
    std::vector<int> rows;
    for (int r : lambda.rows()) {
        rows.push_back(r - last);
    }
    return YoungDiagram::from_padded(rows);
}

// Geometric bound for sum_{j >= J} 3 * 2^{c - a j}, valid when each
// argument a j - c is at least 2.
long double
geometric_tail(long double a, long double c, std::int64_t J) {
    return 3.0L * std::pow(2.0L, c - a * static_cast<long double>(J)) / (1.0L - std::pow(2.0L, -a));
}

constexpr long double kFarArgument = 64.0L;

}  // namespace

long double
zeta_tail_upper(long double t, std::int64_t m0) {
    if (!(t > 1.0L)) {
        return kInf;
    }
    if (m0 < 1) {
        m0 = 1;
    }
    long double s = 0;
    for (std::int64_t m = m0; m < m0 + 64; ++m) {
        s += std::pow(static_cast<long double>(m), -t);
    }
    long double M = static_cast<long double>(m0 + 64);
    s += std::pow(M - 1.0L, 1.0L - t) / (t - 1.0L);
    return s;
}

double
glm_exponent(std::int64_t n, std::int64_t j) {
    if (n < 2 || j < 1 || j > n - 1) {
        throw DomainError("invalid-index", "glm exponent needs 1 <= j <= n-1");
    }
    double jj = static_cast<double>(std::min(j, n - j));
    double l = std::log(static_cast<double>(n - 1));
    return std::max(jj, jj * (l - std::log(jj)));
}

GlmExponents
glm_exponents(std::int64_t n) {
    GlmExponents e;
    e.n = n;
    for (std::int64_t j = 1; j <= n - 1; ++j) {
        e.v.push_back(glm_exponent(n, j));
    }
    return e;
}

long double
glm_lower_bound(const YoungDiagram& lambda, std::int64_t n) {
    if (n > std::numeric_limits<int>::max()) {
        throw DomainError("invalid-n", "n too large for weight coordinates");
    }
    WeightCoords x = weight_coords(lambda, static_cast<int>(n));
    long double lg = 0;
    for (size_t i = 0; i < x.x.size(); ++i) {
        if (x.x[i] > 0) {
            lg += static_cast<long double>(glm_exponent(n, static_cast<std::int64_t>(i) + 1)) *
                  std::log(1.0L + x.x[i]);
        }
    }
    return std::exp(lg) * (1.0L - 1e-12L);
}

long long
majorant_exponent(int word_length, int genus) {
    long long L = word_length;
    return 4LL * genus * (L * L + (1LL << L));
}

BoundReport
single_lambda_majorant(const Word& w, const YoungDiagram& lambda_in, long n) {
    if (n < 1) {
        throw DomainError("invalid-n", "n must be positive");
    }
    YoungDiagram lambda = strip_full_columns(lambda_in, n);
    const int g = w.genus();
    const int L = w.length();
    const int Lp = std::max(L, 1);

    BoundReport rep;
    rep.w = w;
    rep.lambda = lambda;
    rep.n = n;
    rep.C = majorant_exponent(L, g);

    Integer D_lambda = dim_un(lambda, n);
    Rational inv_dim_pow = Rational(1) / power(Rational(D_lambda), 2L * g);
    const unsigned long word_exp = 4UL * static_cast<unsigned long>(g) * static_cast<unsigned long>(L);
    const unsigned long sst_exp = 4UL * static_cast<unsigned long>(g);

    rep.majorant = 0;
    for (int D = 1; D <= std::min<long>(Lp, n); ++D) {
        Integer inner = 0;
        for (const auto& mu : enumerate_r_strip_inner(lambda, D)) {
            if (mu.length() > n - D) {
                continue;
            }
            Integer term = dim_un(mu, n - D);
            if (term == 0) {
                continue;
            }
            term *= power(Integer(lambda.size() - mu.size() + L), word_exp);
            Integer sst = count_ssyt(SkewShape(lambda, mu), static_cast<int>(n - D + 1), static_cast<int>(n));
            term *= power(sst, sst_exp);
            inner += term;
        }
        Rational t = Rational(stirling2(Lp, D) * falling_factorial(n, D) * inner) * inv_dim_pow;
        t.canonicalize();
        rep.per_orbit_terms.push_back(t);
        rep.majorant += t;
    }

    double lg = L * std::log10(static_cast<double>(n)) - (2.0 * g - 1.0) * log10_integer(D_lambda);
    if (n >= 2) {
        WeightCoords x = weight_coords(lambda, static_cast<int>(n));
        double s = 0;
        for (int xi : x.x) {
            s += std::log10(1.0 + xi);
        }
        lg += static_cast<double>(rep.C) * s;
    }
    rep.simplified_log10 = lg;
    return rep;
}

BoundReport
single_lambda_majorant(const Word& w, const RepPair& rep, long n) {
    if (rep.nu.empty()) {
        return single_lambda_majorant(w, rep.mu, n);
    }
    return single_lambda_majorant(w, su_lambda(rep.mu, rep.nu, static_cast<int>(n)), n);
}

long double
log_zeta_product_upper(std::int64_t n, long double a, long double c) {
    long double total = 0;
    for (std::int64_t j = 1; j <= n / 2; ++j) {
        long double t = a * static_cast<long double>(glm_exponent(n, j)) - c;
        int mult = (2 * j == n) ? 1 : 2;
        // v_j >= j on the lower half, so every later argument is at least
        // a j - c as well.
        long double lower = a * static_cast<long double>(j) - c;
        if (lower >= kFarArgument) {
            // log zeta(t) <= zeta(t) - 1 <= 3 * 2^{-t} for t >= 2.
            total += 2.0L * geometric_tail(a, c, j);
            return total;
        }
        long double z = zeta_upper(t);
        if (std::isinf(z)) {
            return kInf;
        }
        total += mult * std::log(z);
    }
    return total;
}

TailMajorant
tail_majorant(const Word& w, const CutoffSpec& spec, std::int64_t n) {
    TailMajorant out;
    const int L = w.length();
    const long double C = static_cast<long double>(majorant_exponent(L, w.genus()));
    const int B = spec.B;
    if (n < 3 || !(2.0L * std::log(static_cast<long double>(n - 1)) - C > 2.0L)) {
        out.applicable = false;
        out.note = "not applicable: needs 2 log(n-1) - C > 2 with C = " +
                   std::to_string(static_cast<long long>(C));
        return out;
    }
    long double s1 = 0;
    for (std::int64_t j = 1; j <= std::min<std::int64_t>(B, n - 1); ++j) {
        s1 += zeta_tail_upper(2.0L * glm_exponent(n, j) - C, B + 1);
    }
    long double s2 = 0;
    for (std::int64_t j = B + 1; j <= n / 2; ++j) {
        if (2.0L * static_cast<long double>(j) - C >= kFarArgument) {
            s2 += geometric_tail(2.0L, C, j);
            break;
        }
        s2 += zeta_tail_upper(2.0L * glm_exponent(n, j) - C, 2);
    }
    long double lp = log_zeta_product_upper(n, 2.0L, C);
    long double lg = static_cast<long double>(L) * std::log(static_cast<long double>(n)) + std::log(s1 + s2) + lp;
    out.applicable = true;
    out.value = std::exp(lg);
    out.log10_value = static_cast<double>(lg / std::log(10.0L));
    out.note = "shape-level majorant; implied constants depending on (w, g, B) are not included";
    return out;
}

}  // namespace swl
