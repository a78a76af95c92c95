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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "surfacewl/exact.hpp"

namespace swl {

// A partition, stored as its positive non-increasing row lengths.
class YoungDiagram {
 public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);
    YoungDiagram(std::initializer_list<int> rows) : YoungDiagram(std::vector<int>(rows)) {}

    // Accepts trailing zeros and drops them; other rules as the constructor.
    static YoungDiagram
    from_padded(std::vector<int> rows);

    // "2,1,1" (empty string or "0" or "-" for the empty diagram).
    static YoungDiagram
    parse(const std::string& text);

    const std::vector<int>&
    rows() const {
        return rows_;
    }
    int
    size() const {
        return size_;
    }
    int
    length() const {
        return static_cast<int>(rows_.size());
    }
    bool
    empty() const {
        return rows_.empty();
    }
    // Row i (0-based); zero past the last row.
    int
    operator[](int i) const {
        return i < length() ? rows_[static_cast<size_t>(i)] : 0;
    }
    int
    first_row() const {
        return (*this)[0];
    }

    YoungDiagram
    transpose() const;

    // Row-wise containment mu ⊂ this.
    bool
    contains(const YoungDiagram& mu) const;

    std::string
    str() const;

    bool
    operator==(const YoungDiagram& o) const {
        return rows_ == o.rows_;
    }
    // Lexicographic on rows; the canonical enumeration order is descending.
    std::strong_ordering
    operator<=>(const YoungDiagram& o) const {
        return rows_ <=> o.rows_;
    }

 private:
    std::vector<int> rows_;
    int size_ = 0;
};

// Canonical order: lexicographic descending, e.g. (3),(2,1),(1,1,1).
std::vector<YoungDiagram>
enumerate_partitions(int k);

// Partitions of k with at most max_len rows and parts at most max_part.
std::vector<YoungDiagram>
enumerate_partitions_bounded(int k, int max_len, int max_part);

// All partitions fitting in a max_len x max_part box, by size then
// lexicographic descending.
std::vector<YoungDiagram>
enumerate_partitions_in_box(int max_len, int max_part);

// All sub-diagrams mu ⊂ lambda, by size then lexicographic descending.
std::vector<YoungDiagram>
enumerate_subdiagrams(const YoungDiagram& lambda);

struct SkewShape {
    YoungDiagram outer;
    YoungDiagram inner;

    SkewShape() = default;
    SkewShape(YoungDiagram outer_shape, YoungDiagram inner_shape);

    int
    size() const {
        return outer.size() - inner.size();
    }
};

struct SkewRelation {
    int k = 0;                        // |lambda| - |mu|
    bool holds_subset_k = false;      // mu ⊂ lambda with |lambda/mu| = k
    bool holds_horizontal_r = false;  // mu ⊂^r lambda
};

// Largest number of boxes of lambda/mu in one column; -1 if mu ⊄ lambda.
int
max_column_height(const YoungDiagram& mu, const YoungDiagram& lambda);

// mu ⊂^1 lambda: containment and no two boxes of lambda/mu in a column.
bool
is_horizontal_strip(const YoungDiagram& mu, const YoungDiagram& lambda);

// mu ⊂^r lambda, i.e. a chain of r horizontal strips from mu to lambda;
// equivalent to every column of lambda/mu holding at most r boxes.
bool
is_r_strip(const YoungDiagram& mu, const YoungDiagram& lambda, int r);

SkewRelation
skew_relation(const YoungDiagram& mu, const YoungDiagram& lambda, int r);

// All mu with mu ⊂^r lambda.
std::vector<YoungDiagram>
enumerate_r_strip_inner(const YoungDiagram& lambda, int r);

// One tableau: rows[i] holds the entries of row i of the skew shape,
// left to right (only boxes of outer/inner).
struct Tableau {
    std::vector<std::vector<int>> rows;
    bool
    operator==(const Tableau& o) const {
        return rows == o.rows;
    }
};

// Semistandard fillings of a skew shape with entries in [lo, hi]:
// rows weakly increasing, columns strictly increasing.
std::vector<Tableau>
enumerate_ssyt(const SkewShape& shape, int lo, int hi);

Integer
count_ssyt(const SkewShape& shape, int lo, int hi);

// Standard fillings of lambda/mu (number of box-by-box growth paths).
Integer
count_standard_skew(const YoungDiagram& lambda, const YoungDiagram& mu);

struct WeightCoords {
    int n = 0;
    std::vector<int> x;  // n - 1 entries
};

// x_i = lambda_i - lambda_{i+1}; needs length(lambda) <= n - 1.
WeightCoords
weight_coords(const YoungDiagram& lambda, int n);

YoungDiagram
from_weight_coords(const WeightCoords& w);

// Cutoff family parameters. max_dim > 0 switches the Witten partial sum to
// a dimension cutoff (all SU(n) irreps of dimension <= max_dim).
struct CutoffSpec {
    int B = 1;
    std::int64_t max_dim = 0;
};

// A rational-family label [mu, nu]; nu empty is the polynomial family.
struct RepPair {
    YoungDiagram mu;
    YoungDiagram nu;

    bool
    operator==(const RepPair& o) const {
        return mu == o.mu && nu == o.nu;
    }
    std::string
    str() const;
};

// Signature (mu_1, .., mu_l, 0, .., 0, -nu_m, .., -nu_1) of length n.
std::vector<int>
rational_signature(const YoungDiagram& mu, const YoungDiagram& nu, int n);

// The Young diagram labelling the same SU(n) irrep: signature minus its
// last entry. Length is at most n - 1.
YoungDiagram
su_lambda(const YoungDiagram& mu, const YoungDiagram& nu, int n);

// Literal box constraints l(mu), l(nu) <= B and mu_1, nu_1 <= B^2, plus
// n >= l(mu) + l(nu) so that the signature exists.
bool
omega_membership(const YoungDiagram& mu, const YoungDiagram& nu, const CutoffSpec& spec, int n);

// lambda (l(lambda) <= n-1) labels an SU(n) irrep outside the image of
// Omega(B; n): no shift of its signature satisfies the box constraints.
bool
lambda_membership(const YoungDiagram& lambda, const CutoffSpec& spec, int n);

// The weight-coordinate conditions (x_i > B for some i <= B or i >= n-B,
// or x_i > 0 for some B < i < n-B). Every Lambda member satisfies them.
bool
lambda_weight_condition(const YoungDiagram& lambda, const CutoffSpec& spec, int n);

// Omega(B; n) as a list of distinct SU(n) irreps. When several pairs label
// the same irrep (small n), the pair with the smallest |mu|+|nu| is kept.
// Order: by |mu|+|nu|, then mu, then nu, lexicographic descending.
std::vector<RepPair>
omega_family(const CutoffSpec& spec, int n);

}  // namespace swl
