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

#include <map>

#include "surfacewl/characters.hpp"
#include "surfacewl/partitions.hpp"

using namespace swl;

namespace {

// Littlewood-Richardson rule: SSYT of shape lambda/mu and content nu whose
// reverse row reading word is a lattice word.
long
lr_lattice(const YoungDiagram& mu, const YoungDiagram& nu, const YoungDiagram& lambda) {
    if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) {
        return 0;
    }
    if (nu.empty()) {
        return lambda == mu ? 1 : 0;
    }
    long count = 0;
    for (const auto& t : enumerate_ssyt(SkewShape(lambda, mu), 1, nu.length())) {
        std::vector<int> seen(static_cast<size_t>(nu.length()) + 1, 0);
        bool lattice = true;
        for (const auto& row : t.rows) {
            for (auto it = row.rbegin(); it != row.rend() && lattice; ++it) {
                int v = *it;
                ++seen[static_cast<size_t>(v)];
                if (v > 1 && seen[static_cast<size_t>(v)] > seen[static_cast<size_t>(v - 1)]) {
                    lattice = false;
                }
            }
        }
        for (int i = 1; i <= nu.length() && lattice; ++i) {
            lattice = seen[static_cast<size_t>(i)] == nu[i - 1];
        }
        count += lattice ? 1 : 0;
    }
    return count;
}

}  // namespace

TEST_CASE("small character tables") {
    // Rows (3),(2,1),(1,1,1); columns (3),(2,1),(1,1,1).
    const long long s3[3][3] = {{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
    auto t3 = char_table(3);
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
            CHECK(t3->at(i, j) == s3[i][j]);
        }
    }
    // Rows (4),(3,1),(2,2),(2,1,1),(1^4); columns in the same order.
    const long long s4[5][5] = {
        {1, 1, 1, 1, 1}, {-1, 0, -1, 1, 3}, {0, -1, 2, 0, 2}, {1, 0, -1, -1, 3}, {-1, 1, 1, -1, 1}};
    auto t4 = char_table(4);
    for (size_t i = 0; i < 5; ++i) {
        for (size_t j = 0; j < 5; ++j) {
            CHECK(t4->at(i, j) == s4[i][j]);
        }
    }
}

TEST_CASE("orthogonality relations") {
    for (int k = 1; k <= 7; ++k) {
        auto t = char_table(k);
        const auto& cls = t->classes();
        const size_t m = t->shapes().size();
        for (size_t a = 0; a < m; ++a) {
            for (size_t b = 0; b < m; ++b) {
                Integer row = 0;
                Integer col = 0;
                for (size_t c = 0; c < m; ++c) {
                    row += cls[c].class_size * Integer(static_cast<long>(t->at(a, c) * t->at(b, c)));
                    col += Integer(static_cast<long>(t->at(c, a) * t->at(c, b)));
                }
                CHECK(row == (a == b ? factorial(k) : Integer(0)));
                CHECK(col == (a == b ? z_value(cls[a].partition) : Integer(0)));
            }
        }
    }
}

TEST_CASE("Murnaghan-Nakayama matches the table and the hook formula") {
    for (int k = 1; k <= 8; ++k) {
        auto t = char_table(k);
        YoungDiagram id = YoungDiagram(std::vector<int>(static_cast<size_t>(k), 1));
        for (size_t i = 0; i < t->shapes().size(); ++i) {
            const auto& l = t->shapes()[i];
            CHECK(Integer(static_cast<long>(mn_character(l, id))) == dim_sk(l));
            for (size_t j = 0; j < t->classes().size(); ++j) {
                CHECK(mn_character(l, t->classes()[j].partition) == t->at(i, j));
            }
        }
    }
    CHECK_THROWS_AS(char_table(11), SizeLimitError);
}

TEST_CASE("Littlewood-Richardson coefficients against the lattice-word rule") {
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (const auto& mu : enumerate_partitions(a)) {
                for (const auto& nu : enumerate_partitions(b)) {
                    for (const auto& l : enumerate_partitions(a + b)) {
                        CHECK(lr_coeff(mu, nu, l) == Integer(lr_lattice(mu, nu, l)));
                    }
                }
            }
        }
    }
    CHECK(lr_coeff(YoungDiagram{2, 1}, YoungDiagram{2, 1}, YoungDiagram{3, 2, 1}) == 2);
}

TEST_CASE("dimensions") {
    for (int k = 0; k <= 6; ++k) {
        for (const auto& l : enumerate_partitions(k)) {
            for (long n = 1; n <= 6; ++n) {
                if (l.length() > n) {
                    CHECK(dim_un(l, n) == 0);
                    continue;
                }
                std::vector<int> sig(static_cast<size_t>(n), 0);
                for (int i = 0; i < l.length(); ++i) {
                    sig[static_cast<size_t>(i)] = l[i];
                }
                CHECK(dim_un(l, n) == weyl_dimension(sig));
                CHECK(dim_un_poly(l)(Rational(n)) == Rational(dim_un(l, n)));
            }
        }
    }
    CHECK(dim_rational(YoungDiagram{1}, YoungDiagram{1}, 3) == 8);
    CHECK(dim_rational(YoungDiagram{1}, YoungDiagram{1}, 4) == 15);
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (const auto& mu : enumerate_partitions(a)) {
                for (const auto& nu : enumerate_partitions(b)) {
                    for (int n = mu.length() + nu.length(); n <= 7; ++n) {
                        if (n < 1) {
                            continue;
                        }
                        CHECK(dim_rational(mu, nu, n) == dim_un(su_lambda(mu, nu, n), n));
                        CHECK(dim_rational_poly(mu, nu)(Rational(n)) == Rational(dim_rational(mu, nu, n)));
                    }
                }
            }
        }
    }
}

TEST_CASE("Koike gate") {
    for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (const auto& mu : enumerate_partitions(a)) {
                for (const auto& nu : enumerate_partitions(b)) {
                    KoikeExpansion k = koike_expand(mu, nu);
                    CHECK(k.gate_points.size() == 5);
                    for (long n = 4; n <= 10; ++n) {
                        CHECK(koike_dimension(k.terms, n) == dim_rational(mu, nu, n));
                    }
                }
            }
        }
    }
    // [1,1] = s_1 s_1(g^{-1}) - 1.
    KoikeExpansion adj = koike_expand(YoungDiagram{1}, YoungDiagram{1});
    std::map<std::pair<std::string, std::string>, Integer> terms;
    for (const auto& t : adj.terms) {
        terms[{t.nu2.str(), t.nu3.str()}] += t.coeff;
    }
    CHECK(terms.size() == 2);
    CHECK(terms[{YoungDiagram{1}.str(), YoungDiagram{1}.str()}] == 1);
    CHECK(terms[{YoungDiagram{}.str(), YoungDiagram{}.str()}] == -1);
}

TEST_CASE("power-sum expansion specializes to dimensions") {
    for (int k = 1; k <= 6; ++k) {
        for (const auto& l : enumerate_partitions(k)) {
            for (long n = 1; n <= 5; ++n) {
                Rational s = 0;
                for (const auto& t : schur_expand_power_sums(l)) {
                    s += t.coeff * power(Rational(n), t.kappa.length());
                }
                CHECK(s == Rational(dim_un(l, n)));
            }
        }
    }
}

TEST_CASE("branching and induction") {
    for (int k = 0; k <= 5; ++k) {
        for (const auto& l : enumerate_partitions(k)) {
            for (long n = std::max(1, l.length()); n <= 5; ++n) {
                for (int b = 1; b <= 2; ++b) {
                    IdentityReport r = branching_and_induction_checks(l, l, n, b);
                    CHECK(r.branching_ok);
                    CHECK(r.induction_ok);
                }
            }
        }
    }
}
