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

#include <json.hpp>

#include <string>

#include "surfacewl/characters.hpp"
#include "surfacewl/exact.hpp"
#include "surfacewl/expansion.hpp"
#include "surfacewl/oracle.hpp"
#include "surfacewl/partitions.hpp"
#include "surfacewl/polynomial.hpp"
#include "surfacewl/weingarten.hpp"

namespace swl {

using json = nlohmann::ordered_json;

// {"num": "...", "den": "..."} with decimal strings.
json
to_json(const Rational& q);
Rational
rational_from_json(const json& j);

// Row lengths, e.g. [2, 1].
json
to_json(const YoungDiagram& d);
YoungDiagram
diagram_from_json(const json& j);

json
to_json(const SkewShape& s);
json
to_json(const RepPair& r);

// {"g": 2, "cycles": [[["a", 1], ["b", 1], ["a", -1], ["b", -1]]]}
json
to_json(const ContractionDiagram& d);
ContractionDiagram
contraction_from_json(const json& j);

json
to_json(const KoikeExpansion& k);
json
to_json(const Polynomial& p);  // coefficient list, constant term first
json
to_json(const RationalFunction& f);
json
to_json(const LaurentExpansion& e);
json
to_json(const McEstimate& m);

// Flattens a JSON value into "path,value" CSV lines under a header.
std::string
to_csv(const json& j);

}  // namespace swl
