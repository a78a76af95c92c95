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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "surfacewl/exact.hpp"
#include "surfacewl/partitions.hpp"

namespace swl {

inline constexpr int kDefaultMaxWeingartenK = 6;
// The engine builds per-letter tables itself; its own ceiling is the budget.
inline constexpr int kEngineMaxWeingartenK = 12;
inline constexpr std::uint64_t kDefaultEngineBudget = 1000000000ULL;

// Wg_{n,k} as a class function on S_k.
struct WeingartenTable {
    long n = 1;
    int k = 0;
    std::vector<YoungDiagram> classes;  // canonical partition order
    std::vector<Rational> values;

    const Rational&
    value(const YoungDiagram& kappa) const;
};

// Sum restricted to lambda ⊢ k with length(lambda) <= n. Cached by (n, k).
std::shared_ptr<const WeingartenTable>
weingarten_table(long n, int k, int max_k = kDefaultMaxWeingartenK);

struct MatrixEntry {
    int row = 0;
    int col = 0;
};

// Integral of prod u_{row,col} over `unconj` times prod conj(u_{row,col})
// over `conj`, for one Haar unitary of size n. Unequal counts give 0.
Rational
haar_moment(long n, const std::vector<MatrixEntry>& unconj, const std::vector<MatrixEntry>& conj);

// Pair form: each element contributes u_{(i,j)} and conj(u_{(i',j')}).
Rational
haar_moment(long n, const std::vector<std::pair<MatrixEntry, MatrixEntry>>& pairs);

struct Occurrence {
    int letter = 0;  // 0..2g-1 in the order a1, b1, a2, b2, ...
    int exp = 1;     // +1 or -1

    bool
    operator==(const Occurrence& o) const {
        return letter == o.letter && exp == o.exp;
    }
    auto
    operator<=>(const Occurrence& o) const = default;
};

// Product of traces of words in independent Haar unitaries. An inverse
// letter u^{-1}[i,j] is read as conj(u[j,i]).
struct ContractionDiagram {
    int g = 2;
    std::vector<std::vector<Occurrence>> cycles;

    int
    num_letters() const {
        return 2 * g;
    }
    std::vector<int>
    plus_counts() const;
    std::vector<int>
    minus_counts() const;
    bool
    balanced() const;
    // Every cycle rotated to its lexicographically least rotation, then
    // cycles sorted.
    ContractionDiagram
    normalized() const;
    // Throws DomainError on empty cycles, bad letters or exponents.
    void
    validate() const;
};

struct EngineOptions {
    int workers = 1;
    std::uint64_t budget = 0;  // 0 means default_engine_budget()
};

// SURFACEWL_BUDGET if set, else 10^9 elementary terms.
std::uint64_t
default_engine_budget();

// prod over letters of (k_l!)^2, saturating.
long double
engine_cost(const ContractionDiagram& d);

// Exact integral of prod_cycles tr(cycle word) over U(n)^{2g}. Sum over
// per-letter pairs (sigma, tau) of prod Wg(sigma tau^{-1}) n^{loops}.
// Unbalanced diagrams give 0; over-budget diagrams throw BudgetError.
Rational
word_power_integral(const ContractionDiagram& d, long n, const EngineOptions& opts = {});

}  // namespace swl
