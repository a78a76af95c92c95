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

#include "surfacewl/oracle.hpp"

using namespace swl;

TEST_CASE("Haar samples are unitary") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 6; ++n) {
        for (Group g : {Group::kU, Group::kSU}) {
            Eigen::MatrixXcd u = sample_haar_matrix(n, g, rng);
            CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-10);
            if (g == Group::kSU) {
                CHECK(std::abs(u.determinant() - cplx(1, 0)) < 1e-10);
            }
        }
    }
    CHECK(parse_group("SU") == Group::kSU);
    CHECK_THROWS(parse_group("O"));
}

TEST_CASE("Schur evaluation") {
    std::vector<cplx> x = {cplx(0.3, 0.1), cplx(-0.7, 0.2), cplx(0.5, -0.4)};
    cplx e1 = x[0] + x[1] + x[2];
    cplx e2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
    cplx e3 = x[0] * x[1] * x[2];
    CHECK(std::abs(evaluate_schur(YoungDiagram{1}, x) - e1) < 1e-12);
    CHECK(std::abs(evaluate_schur(YoungDiagram{1, 1}, x) - e2) < 1e-12);
    CHECK(std::abs(evaluate_schur(YoungDiagram{2}, x) - (e1 * e1 - e2)) < 1e-12);
    CHECK(std::abs(evaluate_schur(YoungDiagram{2, 1}, x) - (e1 * e2 - e3)) < 1e-12);
    CHECK(std::abs(power_sum(x, 2) - (x[0] * x[0] + x[1] * x[1] + x[2] * x[2])) < 1e-12);
    std::vector<cplx> z = {std::polar(1.0, 0.3), std::polar(1.0, -1.1), std::polar(1.0, 2.0)};
    cplx t = z[0] + z[1] + z[2];
    CHECK(std::abs(evaluate_rational(YoungDiagram{1}, YoungDiagram{1}, z) - (std::norm(t) - 1.0)) < 1e-12);
}

TEST_CASE("estimates are reproducible") {
    Word w = Word::parse("abAB", 2);
    RepPair rep{YoungDiagram{1}, YoungDiagram()};
    for (int workers : {1, 3}) {
        McEstimate a = mc_integral(w, rep, 3, Group::kU, 3000, 11, workers);
        McEstimate b = mc_integral(w, rep, 3, Group::kU, 3000, 11, workers);
        CHECK(a.mean == b.mean);
        CHECK(a.std_error == b.std_error);
        CHECK(a.samples == 3000);
    }
    CHECK(worker_seed(42, 0) != worker_seed(42, 1));
    CHECK(worker_seed(42, 0) == worker_seed(42, 0));
}

TEST_CASE("Haar measure is translation invariant") {
    // E f(V U) = E f(U) for a fixed V: |tr(VU)|^2 and tr(VU) have the same
    // means as |tr U|^2 = 1 and tr U = 0.
    std::mt19937_64 rng(9);
    const int n = 3;
    Eigen::MatrixXcd V = sample_haar_matrix(n, Group::kU, rng);
    auto sq = [&](const HaarSample& s) { return cplx(std::norm((V * s.matrices[0]).trace()), 0); };
    auto lin = [&](const HaarSample& s) { return (V * s.matrices[0]).trace(); };
    McEstimate a = mc_estimate(sq, n, 1, Group::kU, 40000, 3, 2);
    McEstimate b = mc_estimate(lin, n, 1, Group::kU, 40000, 3, 2);
    CHECK(a.within(cplx(1, 0), 4.0));
    CHECK(b.within(cplx(0, 0), 4.0));
    auto right = [&](const HaarSample& s) { return cplx(std::norm((s.matrices[0] * V * V).trace()), 0); };
    CHECK(mc_estimate(right, n, 1, Group::kU, 40000, 4, 2).within(cplx(1, 0), 4.0));
}

TEST_CASE("word integrals by Monte Carlo") {
    Word w = Word::parse("abAB", 2);
    McEstimate e = mc_integral(w, RepPair{}, 3, Group::kU, 40000, 42, 2);
    CHECK(e.within(cplx(1.0 / 3.0, 0), 4.0));
    McEstimate o = mc_orthonormality(YoungDiagram{2}, YoungDiagram{}, 3, 40000, 42, 2);
    CHECK(o.within(cplx(1, 0), 4.0));
    McEstimate id = mc_integral(Word::parse("", 2), RepPair{}, 4, Group::kSU, 100, 1, 1);
    CHECK(id.mean == cplx(4, 0));
}
