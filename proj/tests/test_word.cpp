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

#include "surfacewl/exact.hpp"
#include "surfacewl/word.hpp"

using namespace swl;

TEST_CASE("parsing and reduction") {
    Word w = Word::parse("abAB", 2);
    CHECK(w.length() == 4);
    CHECK(w.str() == "abAB");
    CHECK(Word::parse("aAbB", 2).empty());
    CHECK(Word::parse("ab Ba", 2).str() == "aa");
    CHECK(Word::parse("", 1).empty());
    CHECK(Word::parse("abcdCDAB", 2).length() == 8);
}

TEST_CASE("parse errors carry a position") {
    try {
        Word::parse("ab1", 2);
        FAIL("no error");
    } catch (const DomainError& e) {
        CHECK(e.name() == "parse-error");
        CHECK(std::string(e.what()).find("column 3") != std::string::npos);
    }
    CHECK_THROWS_AS(Word::parse("e", 2), DomainError);  // needs genus 3
    CHECK_NOTHROW(Word::parse("e", 3));
}

TEST_CASE("group operations") {
    Word w = Word::parse("abA", 2);
    CHECK(w.inverse().str() == "aBA");
    CHECK((w * w.inverse()).empty());
    CHECK(Word::parse("bab", 2).exponent_sums() == std::vector<int>{1, 2, 0, 0});
    CHECK(Word::parse("aabAA", 2).cyclically_reduced().str() == "b");
    CHECK(relator(2).str() == "abABcdCD");
    CHECK(partial_relator(2, {false, true}).str() == "cdCD");
    CHECK(Word::parse("c", 2).pairs_used() == std::vector<bool>{false, true});
}

TEST_CASE("commutator detection") {
    CHECK(is_commutator_balanced(Word::parse("abAB", 2)));
    CHECK_FALSE(is_commutator_balanced(Word::parse("ab", 2)));
    auto m = match_single_commutator(Word::parse("bABa", 2));
    CHECK(m.first == 0);
    CHECK(m.second == 1);
    auto inv = match_single_commutator(Word::parse("baBA", 2));
    CHECK(inv.first == 0);
    CHECK(inv.second == -1);
    CHECK(match_single_commutator(Word::parse("cdCD", 2)).first == 1);
    CHECK(match_single_commutator(Word::parse("acAC", 2)).first == -1);
}
