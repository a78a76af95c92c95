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

#include <set>

#include "surfacewl/characters.hpp"
#include "surfacewl/partitions.hpp"

using namespace swl;

namespace {

// Boxes (row, col) of lambda / mu.
std::vector<std::pair<int, int>>
boxes(const YoungDiagram& lambda, const YoungDiagram& mu) {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = mu[r]; c < lambda[r]; ++c) {
            out.emplace_back(r, c);
        }
    }
    return out;
}

bool
horizontal_by_boxes(const YoungDiagram& mu, const YoungDiagram& lambda) {
    if (!lambda.contains(mu)) {
        return false;
    }
    std::set<int> cols;
    for (auto [r, c] : boxes(lambda, mu)) {
        if (!cols.insert(c).second) {
            return false;
        }
    }
    return true;
}

// Is there a chain mu = l0 ⊂^1 l1 ⊂^1 ... ⊂^1 lr = lambda?
bool
chain_exists(const YoungDiagram& mu, const YoungDiagram& lambda, int r) {
    if (r == 0) {
        return mu == lambda;
    }
    for (const auto& next : enumerate_subdiagrams(lambda)) {
        if (next.contains(mu) && horizontal_by_boxes(mu, next) && chain_exists(next, lambda, r - 1)) {
            return true;
        }
    }
    return false;
}

// Brute-force SSYT count: every filling of the boxes with values in
// [lo, hi], then the row and column rules.
long
brute_ssyt(const YoungDiagram& lambda, const YoungDiagram& mu, int lo, int hi) {
    auto bx = boxes(lambda, mu);
    const int span = hi - lo + 1;
    long total = 1;
    for (size_t i = 0; i < bx.size(); ++i) {
        total *= span;
    }
    long count = 0;
    std::vector<std::vector<int>> t(static_cast<size_t>(lambda.length()),
                                    std::vector<int>(static_cast<size_t>(lambda.first_row()), 0));
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (auto [r, col] : bx) {
            t[r][col] = lo + static_cast<int>(c % span);
            c /= span;
        }
        bool ok = true;
        for (auto [r, col] : bx) {
            if (col > mu[r] && t[r][col - 1] > t[r][col]) {
                ok = false;
            }
            if (r > 0 && col >= mu[r - 1] && t[r - 1][col] >= t[r][col]) {
                ok = false;
            }
        }
        count += ok ? 1 : 0;
    }
    return count;
}

}  // namespace

TEST_CASE("partition enumeration") {
    const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    for (int k = 0; k <= 20; ++k) {
        CHECK(static_cast<long>(enumerate_partitions(k).size()) == p[k]);
    }
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == YoungDiagram{4});
    CHECK(p4.back() == YoungDiagram{1, 1, 1, 1});
    CHECK(enumerate_partitions_bounded(6, 2, 4).size() == 2);  // (4,2), (3,3)
}

TEST_CASE("diagram parsing and invariants") {
    CHECK(YoungDiagram::parse("2,1,1") == YoungDiagram{2, 1, 1});
    CHECK(YoungDiagram::parse("").empty());
    CHECK(YoungDiagram::parse("0").empty());
    CHECK_THROWS_AS(YoungDiagram::parse("1,2"), DomainError);
    CHECK_THROWS_AS(YoungDiagram::parse("a"), DomainError);
    CHECK(YoungDiagram{3, 1}.transpose() == YoungDiagram{2, 1, 1});
    CHECK(YoungDiagram::from_padded({2, 0, 0}) == YoungDiagram{2});
}

TEST_CASE("horizontal and r-strips agree with chain search") {
    for (int k = 0; k <= 6; ++k) {
        for (const auto& lambda : enumerate_partitions(k)) {
            for (const auto& mu : enumerate_subdiagrams(lambda)) {
                CHECK(is_horizontal_strip(mu, lambda) == horizontal_by_boxes(mu, lambda));
                for (int r = 1; r <= 3; ++r) {
                    CHECK(is_r_strip(mu, lambda, r) == chain_exists(mu, lambda, r));
                }
            }
        }
    }
}

TEST_CASE("skew relation examples") {
    SkewRelation a = skew_relation(YoungDiagram{1}, YoungDiagram{2, 1}, 1);
    CHECK(a.k == 2);
    CHECK(a.holds_subset_k);
    CHECK(a.holds_horizontal_r);  // boxes (0,1) and (1,0) sit in different columns
    SkewRelation b = skew_relation(YoungDiagram{1, 1}, YoungDiagram{2, 2}, 1);
    CHECK_FALSE(b.holds_horizontal_r);  // both boxes in column 1
    SkewRelation c = skew_relation(YoungDiagram{2}, YoungDiagram{2, 2}, 1);
    CHECK(c.holds_horizontal_r);
    SkewRelation d = skew_relation(YoungDiagram{}, YoungDiagram{1, 1}, 1);
    CHECK_FALSE(d.holds_horizontal_r);
    CHECK(skew_relation(YoungDiagram{}, YoungDiagram{1, 1}, 2).holds_horizontal_r);
    CHECK_FALSE(skew_relation(YoungDiagram{3}, YoungDiagram{2, 2}, 1).holds_subset_k);
}

TEST_CASE("SSYT counts against brute force and hook content") {
    for (int k = 0; k <= 4; ++k) {
        for (const auto& lambda : enumerate_partitions(k)) {
            for (int n = 1; n <= 3; ++n) {
                CHECK(count_ssyt(SkewShape(lambda, {}), 1, n) == Integer(brute_ssyt(lambda, {}, 1, n)));
                CHECK(count_ssyt(SkewShape(lambda, {}), 1, n) == dim_un(lambda, n));
            }
            for (const auto& mu : enumerate_subdiagrams(lambda)) {
                CHECK(count_ssyt(SkewShape(lambda, mu), 2, 4) == Integer(brute_ssyt(lambda, mu, 2, 4)));
                CHECK(enumerate_ssyt(SkewShape(lambda, mu), 2, 4).size() ==
                      static_cast<size_t>(brute_ssyt(lambda, mu, 2, 4)));
            }
        }
    }
}

TEST_CASE("standard skew tableaux") {
    CHECK(count_standard_skew(YoungDiagram{2, 1}, {}) == 2);
    CHECK(count_standard_skew(YoungDiagram{3, 2}, YoungDiagram{1}) == 5);
    for (int k = 1; k <= 7; ++k) {
        for (const auto& l : enumerate_partitions(k)) {
            CHECK(count_standard_skew(l, {}) == dim_sk(l));
        }
    }
}

TEST_CASE("weight coordinates round trip") {
    for (int k = 0; k <= 6; ++k) {
        for (const auto& l : enumerate_partitions(k)) {
            for (int n = l.length() + 1; n <= 6; ++n) {
                WeightCoords w = weight_coords(l, n);
                CHECK(static_cast<int>(w.x.size()) == n - 1);
                CHECK(from_weight_coords(w) == l);
            }
        }
    }
    CHECK_THROWS_AS(weight_coords(YoungDiagram{1, 1, 1}, 3), DomainError);
}

TEST_CASE("rational signatures") {
    CHECK(rational_signature(YoungDiagram{2}, YoungDiagram{1}, 4) == std::vector<int>{2, 0, 0, -1});
    CHECK(su_lambda(YoungDiagram{2}, YoungDiagram{1}, 4) == YoungDiagram{3, 1, 1});
    CHECK(su_lambda(YoungDiagram{1}, YoungDiagram{1}, 2) == YoungDiagram{2});
}

TEST_CASE("cutoff family") {
    CutoffSpec spec{1, 0};
    CHECK(omega_membership(YoungDiagram{1}, YoungDiagram{1}, spec, 4));
    CHECK_FALSE(omega_membership(YoungDiagram{2}, YoungDiagram{}, spec, 4));
    CHECK_FALSE(omega_membership(YoungDiagram{1, 1}, YoungDiagram{}, spec, 4));
    auto fam = omega_family(spec, 5);
    CHECK(fam.size() == 4);  // trivial, [1,0], [0,1], [1,1]
    // Distinct SU(n) irreps.
    for (int n = 2; n <= 6; ++n) {
        std::set<YoungDiagram> seen;
        for (const auto& r : omega_family(CutoffSpec{2, 0}, n)) {
            CHECK(seen.insert(su_lambda(r.mu, r.nu, n)).second);
        }
    }
    // Labels outside the family satisfy the weight conditions.
    for (int k = 0; k <= 7; ++k) {
        for (const auto& l : enumerate_partitions(k)) {
            for (int n = l.length() + 1; n <= 7; ++n) {
                if (lambda_membership(l, spec, n)) {
                    CHECK(lambda_weight_condition(l, spec, n));
                }
            }
        }
    }
}
