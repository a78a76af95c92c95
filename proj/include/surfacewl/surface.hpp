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
#include "surfacewl/weingarten.hpp"
#include "surfacewl/word.hpp"

namespace swl {

struct FourierOptions {
    int workers = 1;
    std::uint64_t budget = 0;  // 0: engine default
    // Commutator pairs that w does not touch are integrated in closed form,
    // each contributing 1/D^2. Off: every pair goes through the engine.
    bool integrate_unused_pairs = true;
    // w conjugate to [a_j,b_j]^{+-1}: sum of 1/D over the neighbours of the
    // signature. Needs integrate_unused_pairs.
    bool commutator_closed_form = true;
};

// How a coefficient was obtained.
inline constexpr const char* kRouteZeroLaw = "zero-law";
inline constexpr const char* kRouteVanishing = "vanishing";  // D = 0 on U(n)
inline constexpr const char* kRouteFrobenius = "frobenius";
inline constexpr const char* kRouteClosedForm = "closed-form";
inline constexpr const char* kRouteEngine = "engine";

struct FourierCoefficient {
    Rational value;
    RepPair rep;  // nu empty for the polynomial family
    long n = 0;
    Word w;
    std::string route;
};

// I(w, lambda) = int tr(w(x)) conj(s_lambda(R_g(x))) over U(n)^{2g}. For a
// commutator-balanced w this equals the SU(n) integral for every n, since
// the integrand is invariant under scalar phases on each letter.
// Unbalanced w: 0 whenever some exponent sum is not divisible by n (a
// central element of SU(n) then changes the sign of the integrand);
// otherwise DomainError "zero-law-threshold".
FourierCoefficient
fourier_coefficient_poly(const Word& w, const YoungDiagram& lambda, long n, const FourierOptions& opts = {});

// I(w, [mu, nu]) through the gated Koike expansion. Needs n >= l(mu)+l(nu).
FourierCoefficient
fourier_coefficient_rational(const Word& w, const YoungDiagram& mu, const YoungDiagram& nu, long n,
                             const FourierOptions& opts = {});

// Sum over the irreps pi whose signature is the signature of [mu,nu] with
// one entry lowered (sign +1) or raised (sign -1) of 1/D_pi(n).
Rational
commutator_neighbour_sum(const YoungDiagram& mu, const YoungDiagram& nu, long n, int sign);

struct ZetaPartial {
    Rational s;
    long n = 0;
    CutoffSpec spec;
    std::string cutoff;          // human-readable description
    Rational partial_sum;
    std::size_t terms = 0;       // irreps summed
    long double tail_certificate = 0;  // rigorous upper bound; may be +inf
};

// Partial Witten zeta sum over SU(n) irreps. spec.max_dim > 0 sums all
// irreps of dimension <= max_dim; otherwise the family Omega(B; n). The
// exponent s must be an integer (exact partial sums) and s > 2/n.
ZetaPartial
witten_zeta_partial(const Rational& s, long n, const CutoffSpec& spec);

// Upper bound for the sum of D^{-s} over the irreps outside Omega(B; n).
long double
omega_tail_certificate(long double s, long n, int B);

// Upper bound for the sum of D^{-s} over the irreps of dimension > N.
long double
dimension_tail_certificate(long double s, long n, std::int64_t N);

struct ExpectedTrace {
    Rational value;
    Rational numerator;    // sum D I(w, rho)
    Rational denominator;  // sum D^{-(2g-2)}
    std::size_t terms = 0;
    bool rational_regime = false;  // n >= |w| + 2 B^3
    long threshold = 0;
    long double denominator_tail = 0;  // rigorous bound on the omitted zeta tail
    std::string tail_note;
};

// Truncated expectation with numerator and denominator over the same
// Omega(B; n). Accepts any n >= 2; rational_regime reports whether n is in
// the range where the values follow one rational function of n.
ExpectedTrace
expected_trace(const Word& w, long n, const CutoffSpec& spec, const FourierOptions& opts = {});

}  // namespace swl
