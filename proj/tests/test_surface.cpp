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

namespace {

FourierOptions
engine_only() {
    FourierOptions o;
    o.integrate_unused_pairs = false;
    o.commutator_closed_form = false;
    return o;
}

Word
W(const char* text) {
    return Word::parse(text, 2);
}

}  // namespace

TEST_CASE("empty word through the engine") {
    for (long n : {2L, 3L}) {
        for (const YoungDiagram& l : {YoungDiagram{}, YoungDiagram{1}, YoungDiagram{2}, YoungDiagram{1, 1}}) {
            Rational D(dim_un(l, n));
            if (D == 0) {
                continue;
            }
            FourierCoefficient e = fourier_coefficient_poly(W(""), l, n, engine_only());
            CHECK(e.route == kRouteEngine);
            CHECK(e.value == Rational(n) / (D * D * D));
            FourierCoefficient f = fourier_coefficient_poly(W(""), l, n);
            CHECK(f.route == kRouteFrobenius);
            CHECK(f.value == e.value);
        }
    }
}

TEST_CASE("commutator coefficients") {
    for (long n = 2; n <= 6; ++n) {
        CHECK(fourier_coefficient_poly(W("abAB"), YoungDiagram{}, n).value == Rational(1, n));
    }
    CHECK(fourier_coefficient_poly(W("abAB"), YoungDiagram{1}, 3).value == Rational(1, 8));
    CHECK(fourier_coefficient_poly(W("abAB"), YoungDiagram{2}, 3).value == Rational(1, 90));
    CHECK(fourier_coefficient_poly(W("abAB"), YoungDiagram{1, 1}, 3).value == Rational(1, 18));
    CHECK(fourier_coefficient_rational(W("abAB"), YoungDiagram{1}, YoungDiagram{1}, 3).value == Rational(17, 1920));
}

TEST_CASE("closed form agrees with the engine") {
    FourierOptions no_closed;
    no_closed.commutator_closed_form = false;
    for (const char* w : {"abAB", "bABa", "baBA", "cdCD"}) {
        for (long n : {2L, 3L}) {
            for (const YoungDiagram& l : {YoungDiagram{}, YoungDiagram{1}, YoungDiagram{2}, YoungDiagram{1, 1}}) {
                if (l.length() > n) {
                    continue;
                }
                FourierCoefficient a = fourier_coefficient_poly(W(w), l, n);
                FourierCoefficient b = fourier_coefficient_poly(W(w), l, n, no_closed);
                CHECK(a.route == kRouteClosedForm);
                CHECK(a.value == b.value);
            }
        }
    }
}

TEST_CASE("unused pairs integrate to 1/D^2") {
    Word w = W("acAC");
    FourierCoefficient a = fourier_coefficient_poly(w, YoungDiagram{1}, 3);
    FourierCoefficient b = fourier_coefficient_poly(w, YoungDiagram{1}, 3, engine_only());
    CHECK(a.value == b.value);
    CHECK(a.value == Rational(1, 36));
}

TEST_CASE("zero law and vanishing") {
    for (const char* w : {"a", "ab", "aaB"}) {
        for (long n : {3L, 4L}) {
            for (const YoungDiagram& l : {YoungDiagram{}, YoungDiagram{1}, YoungDiagram{2, 1}}) {
                FourierCoefficient f = fourier_coefficient_poly(W(w), l, n);
                CHECK(f.value == 0);
                CHECK(f.route == kRouteZeroLaw);
            }
            CHECK(expected_trace(W(w), n, CutoffSpec{1, 0}).value == 0);
        }
    }
    CHECK_THROWS_AS(fourier_coefficient_poly(W("aa"), YoungDiagram{1}, 2), DomainError);
    FourierCoefficient v = fourier_coefficient_poly(W("abAB"), YoungDiagram{1, 1, 1}, 2);
    CHECK(v.value == 0);
    CHECK(v.route == kRouteVanishing);
}

TEST_CASE("Witten zeta for SU(2)") {
    ZetaPartial z = witten_zeta_partial(Rational(2), 2, CutoffSpec{1, 10000});
    Rational want = 0;
    for (long k = 1; k <= 10000; ++k) {
        want += Rational(1, k * k);
    }
    CHECK(z.partial_sum == want);
    CHECK(z.terms == 10000);
    const double pi2_6 = M_PI * M_PI / 6.0;
    CHECK(pi2_6 - to_double(z.partial_sum) < 1.1e-4);
    CHECK(pi2_6 - to_double(z.partial_sum) <= static_cast<double>(z.tail_certificate));

    ZetaPartial om = witten_zeta_partial(Rational(2), 2, CutoffSpec{3, 0});
    CHECK(om.terms == 19);  // weights 0..18
    CHECK(pi2_6 - to_double(om.partial_sum) <= static_cast<double>(om.tail_certificate));

    CHECK_THROWS_AS(witten_zeta_partial(Rational(3, 2), 3, CutoffSpec{1, 0}), DomainError);
    CHECK_THROWS_AS(witten_zeta_partial(Rational(1), 2, CutoffSpec{1, 0}), DomainError);
}

TEST_CASE("Witten zeta certificates bracket larger sums") {
    for (long n : {3L, 4L}) {
        ZetaPartial big = witten_zeta_partial(Rational(2), n, CutoffSpec{1, 2000});
        ZetaPartial small = witten_zeta_partial(Rational(2), n, CutoffSpec{1, 0});
        // Everything in the big sum is either in Omega(1; n) or in its tail.
        CHECK(to_double(big.partial_sum) <=
              to_double(small.partial_sum) + static_cast<double>(small.tail_certificate) + 1e-12);
        ZetaPartial mid = witten_zeta_partial(Rational(2), n, CutoffSpec{1, 200});
        CHECK(to_double(big.partial_sum) - to_double(mid.partial_sum) <=
              static_cast<double>(mid.tail_certificate) + 1e-12);
    }
}

TEST_CASE("expected trace") {
    for (int B = 1; B <= 2; ++B) {
        for (long n = 4; n <= 6; ++n) {
            ExpectedTrace e = expected_trace(W(""), n, CutoffSpec{B, 0});
            CHECK(e.value == Rational(n));
            CHECK(e.threshold == 2L * B * B * B);
            CHECK(e.rational_regime == (n >= e.threshold));
        }
    }
    ExpectedTrace c = expected_trace(W("abAB"), 6, CutoffSpec{1, 0});
    CHECK(c.rational_regime);
    CHECK(c.value > 0);
    CHECK(c.value < 1);
    CHECK_THROWS_AS(expected_trace(Word::parse("ab", 1), 4, CutoffSpec{1, 0}), DomainError);
}

TEST_CASE("expected trace does not depend on the worker count") {
    FourierOptions one;
    FourierOptions three;
    three.workers = 3;
    CHECK(expected_trace(W("abAB"), 6, CutoffSpec{1, 0}, one).value ==
          expected_trace(W("abAB"), 6, CutoffSpec{1, 0}, three).value);
}

TEST_CASE("tail majorant shape") {
    CHECK_FALSE(tail_majorant(W("abAB"), CutoffSpec{1, 0}, 100000).applicable);
    TailMajorant a = tail_majorant(W(""), CutoffSpec{1, 0}, 1000);
    TailMajorant b = tail_majorant(W(""), CutoffSpec{2, 0}, 1000);
    TailMajorant c = tail_majorant(W(""), CutoffSpec{1, 0}, 100000);
    TailMajorant d = tail_majorant(W(""), CutoffSpec{1, 0}, 10000000000LL);
    REQUIRE(a.applicable);
    REQUIRE(b.applicable);
    REQUIRE(c.applicable);
    REQUIRE(d.applicable);
    CHECK(a.label == "shape-level");
    CHECK(b.log10_value < a.log10_value);  // larger cutoff, smaller tail
    CHECK(c.log10_value < a.log10_value);  // larger n, smaller tail
    CHECK(d.log10_value < c.log10_value);
    CHECK_FALSE(tail_majorant(W(""), CutoffSpec{1, 0}, 100).applicable);
}
