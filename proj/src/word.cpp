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

#include "surfacewl/word.hpp"

#include <algorithm>
#include <cctype>

namespace swl {

Word
reduce(int genus, const std::vector<Letter>& letters) {
    return Word(genus, letters);
}

Word::Word(int genus, std::vector<Letter> letters) : g_(genus) {
    if (genus < 1) {
        throw DomainError("invalid-genus", "genus must be at least 1");
    }
    for (const auto& l : letters) {
        if (l.gen < 0 || l.gen >= 2 * genus) {
            throw DomainError("invalid-word", "generator index out of range for genus " + std::to_string(genus));
        }
        if (l.exp != 1 && l.exp != -1) {
            throw DomainError("invalid-word", "exponent must be +1 or -1");
        }
        // Stack reduction reaches the fixed point in one pass.
        if (!letters_.empty() && letters_.back() == l.inverse()) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

Word
Word::parse(const std::string& text, int genus) {
    std::vector<Letter> letters;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(ch))) {
            throw DomainError("parse-error", "line 1, column " + std::to_string(i + 1) +
                                                 ": unexpected character '" + std::string(1, ch) + "'");
        }
        bool upper = std::isupper(static_cast<unsigned char>(ch));
        int gen = std::tolower(static_cast<unsigned char>(ch)) - 'a';
        if (gen >= 2 * genus) {
            throw DomainError("parse-error", "line 1, column " + std::to_string(i + 1) + ": generator '" +
                                                 std::string(1, ch) + "' needs genus >= " +
                                                 std::to_string(gen / 2 + 1));
        }
        letters.push_back({gen, upper ? -1 : 1});
    }
    return Word(genus, std::move(letters));
}

Word
Word::inverse() const {
    std::vector<Letter> r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        r.push_back(it->inverse());
    }
    return Word(g_, std::move(r));
}

Word
Word::operator*(const Word& o) const {
    if (o.g_ != g_) {
        throw DomainError("genus-mismatch", "words over different free groups");
    }
    std::vector<Letter> r = letters_;
    r.insert(r.end(), o.letters_.begin(), o.letters_.end());
    return Word(g_, std::move(r));
}

Word
Word::cyclically_reduced() const {
    size_t lo = 0, hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return Word(g_, std::vector<Letter>(letters_.begin() + static_cast<long>(lo),
                                        letters_.begin() + static_cast<long>(hi)));
}

std::vector<int>
Word::exponent_sums() const {
    std::vector<int> s(static_cast<size_t>(2 * g_), 0);
    for (const auto& l : letters_) {
        s[static_cast<size_t>(l.gen)] += l.exp;
    }
    return s;
}

std::vector<bool>
Word::pairs_used() const {
    std::vector<bool> used(static_cast<size_t>(g_), false);
    for (const auto& l : letters_) {
        used[static_cast<size_t>(l.gen / 2)] = true;
    }
    return used;
}

std::string
Word::str() const {
    std::string s;
    for (const auto& l : letters_) {
        char c = static_cast<char>('a' + l.gen);
        s.push_back(l.exp > 0 ? c : static_cast<char>(std::toupper(c)));
    }
    return s;
}

Word
partial_relator(int genus, const std::vector<bool>& keep) {
    std::vector<Letter> r;
    for (int j = 0; j < genus; ++j) {
        if (!keep[static_cast<size_t>(j)]) {
            continue;
        }
        int a = 2 * j, b = 2 * j + 1;
        r.push_back({a, 1});
        r.push_back({b, 1});
        r.push_back({a, -1});
        r.push_back({b, -1});
    }
    return Word(genus, std::move(r));
}

Word
relator(int genus) {
    return partial_relator(genus, std::vector<bool>(static_cast<size_t>(genus), true));
}

bool
is_commutator_balanced(const Word& w) {
    for (int s : w.exponent_sums()) {
        if (s != 0) {
            return false;
        }
    }
    return true;
}

std::pair<int, int>
match_single_commutator(const Word& w) {
    Word c = w.cyclically_reduced();
    if (c.length() != 4) {
        return {-1, 0};
    }
    int j = c.letters()[0].gen / 2;
    std::vector<bool> keep(static_cast<size_t>(w.genus()), false);
    keep[static_cast<size_t>(j)] = true;
    Word comm = partial_relator(w.genus(), keep);
    for (int sign : {1, -1}) {
        Word word = sign > 0 ? comm : comm.inverse();
        const auto& target = word.letters();
        for (size_t rot = 0; rot < 4; ++rot) {
            bool same = true;
            for (size_t t = 0; t < 4 && same; ++t) {
                same = c.letters()[t] == target[(t + rot) % 4];
            }
            if (same) {
                return {j, sign};
            }
        }
    }
    return {-1, 0};
}

}  // namespace swl
