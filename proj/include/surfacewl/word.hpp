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

#include <string>
#include <vector>

#include "surfacewl/exact.hpp"

namespace swl {

struct Letter {
    int gen = 0;  // 0..2g-1: a1, b1, a2, b2, ...
    int exp = 1;  // +1 or -1

    bool
    operator==(const Letter& o) const {
        return gen == o.gen && exp == o.exp;
    }
    Letter
    inverse() const {
        return {gen, -exp};
    }
};

// Reduced word in the free group on a1, b1, ..., ag, bg.
class Word {
 public:
    Word() = default;
    // Reduces on construction.
    Word(int genus, std::vector<Letter> letters);

    // Grammar: word := [a-zA-Z]* ; lowercase letter number i (a=0, b=1, ...)
    // is generator i, uppercase is its inverse. Whitespace is ignored.
    // Generator i must satisfy i < 2*genus.
    static Word
    parse(const std::string& text, int genus);

    int
    genus() const {
        return g_;
    }
    const std::vector<Letter>&
    letters() const {
        return letters_;
    }
    int
    length() const {
        return static_cast<int>(letters_.size());
    }
    bool
    empty() const {
        return letters_.empty();
    }

    Word
    inverse() const;
    Word
    operator*(const Word& o) const;
    bool
    operator==(const Word& o) const {
        return g_ == o.g_ && letters_ == o.letters_;
    }

    // Conjugate of this word with no cancellation between its ends.
    Word
    cyclically_reduced() const;

    // Signed letter count per generator.
    std::vector<int>
    exponent_sums() const;

    // Pairs j (0-based) such that a_j or b_j occurs.
    std::vector<bool>
    pairs_used() const;

    std::string
    str() const;

 private:
    int g_ = 2;
    std::vector<Letter> letters_;
};

// Cancels adjacent inverse pairs until none remain.
Word
reduce(int genus, const std::vector<Letter>& letters);

// [a1,b1][a2,b2]...[ag,bg]
Word
relator(int genus);

// Product of the commutators [a_j, b_j] over the pairs j with keep[j].
Word
partial_relator(int genus, const std::vector<bool>& keep);

bool
is_commutator_balanced(const Word& w);

// If w is conjugate to [a_j,b_j] (sign +1) or its inverse (sign -1),
// returns {j, sign}; otherwise {-1, 0}.
std::pair<int, int>
match_single_commutator(const Word& w);

}  // namespace swl
