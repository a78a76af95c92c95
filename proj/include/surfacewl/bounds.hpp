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

#include <cstdint>
#include <string>
#include <vector>

#include "surfacewl/exact.hpp"
#include "surfacewl/partitions.hpp"
#include "surfacewl/word.hpp"

namespace swl {

// Upper bound for sum_{m >= m0} m^{-t}: 64 explicit terms plus the
// integral comparison. +inf when t <= 1.
long double
zeta_tail_upper(long double t, std::int64_t m0);

inline long double
zeta_upper(long double t) {
    return zeta_tail_upper(t, 1);
}

struct GlmExponents {
    std::int64_t n = 2;
    std::vector<double> v;  // v[j-1] = v_j, j = 1..n-1
};

// v_j = max(j', j' (log(n-1) - log j')) with j' = min(j, n-j).
GlmExponents
glm_exponents(std::int64_t n);

// v_j for a single j without materializing the whole vector.
double
glm_exponent(std::int64_t n, std::int64_t j);

// prod (1 + x_i)^{v_i}, shrunk by a relative 1e-12 so that rounding can
// never push it above D_lambda(n). Requires length(lambda) <= n - 1.
long double
glm_lower_bound(const YoungDiagram& lambda, std::int64_t n);

// C(w, g) = 4 g (|w|^2 + 2^|w|).
long long
majorant_exponent(int word_length, int genus);

struct BoundReport {
    Word w;
    YoungDiagram lambda;  // the label actually bounded (full columns removed)
    long n = 0;
    long long C = 0;
    Rational majorant;              // exact right-hand side
    std::vector<Rational> per_orbit_terms;  // index D-1 for D distinct entries
    double simplified_log10 = 0;    // log10 of n^|w| prod(1+x_j)^C / D^{2g-1}
    std::string simplified_label = "shape-level";
};

// Exact single-representation majorant for |I(w, lambda)|:
//   sum_{D=1}^{min(|w|', n)} S(|w|', D) (n)_D T(D),  |w|' = max(|w|, 1),
//   T(D) = D_lambda^{-2g} sum_{mu ⊂^D lambda, l(mu) <= n-D} D_mu(n-D)
//          (|lambda/mu| + |w|)^{4g|w|} |SSYT_{[n-D+1, n]}(lambda/mu)|^{4g}.
// S(., D) counts index tuples by their set of equal entries exactly. For the
// empty word the one free index of tr(Id) is counted, which makes the value
// equal to n / D_lambda^{2g-1}. length(lambda) == n is reduced by removing
// full columns; length(lambda) > n throws.
BoundReport
single_lambda_majorant(const Word& w, const YoungDiagram& lambda, long n);

// Same for a rational-family label, through its SU(n) diagram.
BoundReport
single_lambda_majorant(const Word& w, const RepPair& rep, long n);

struct TailMajorant {
    bool applicable = false;
    long double value = 0;       // may be +inf when it overflows
    double log10_value = 0;
    std::string label = "shape-level";
    std::string note;
};

// n^|w| [sum_{j<=B} zeta^{(B+1)}(2v_j - C) + sum_{B<j<=n/2} zeta^{(2)}(2v_j - C)]
//       prod_{i=1}^{n-1} zeta(2v_i - C),
// applicable only when 2 log(n-1) - C > 2. The implied constants are not
// effective, so the value is a shape-level majorant, not an error bar.
TailMajorant
tail_majorant(const Word& w, const CutoffSpec& spec, std::int64_t n);

// Upper bound for log prod_{j=1}^{n-1} zeta(a v_j - c); +inf if some
// argument is <= 1. Far terms are bounded by a geometric tail.
long double
log_zeta_product_upper(std::int64_t n, long double a, long double c);

}  // namespace swl
