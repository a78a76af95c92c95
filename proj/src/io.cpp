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

#include "surfacewl/io.hpp"

#include <sstream>

namespace swl {

json
to_json(const Rational& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational
rational_from_json(const json& j) {
    if (j.is_object()) {
        Rational q(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
        q.canonicalize();
        return q;
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw DomainError("invalid-json", "expected a rational");
}

json
to_json(const YoungDiagram& d) {
    return json(d.rows());
}

YoungDiagram
diagram_from_json(const json& j) {
    if (!j.is_array()) {
        throw DomainError("invalid-json", "a diagram is an array of row lengths");
    }
    return YoungDiagram(j.get<std::vector<int>>());
}

json
to_json(const SkewShape& s) {
    return json{{"outer", to_json(s.outer)}, {"inner", to_json(s.inner)}};
}

json
to_json(const RepPair& r) {
    return json{{"mu", to_json(r.mu)}, {"nu", to_json(r.nu)}};
}

json
to_json(const ContractionDiagram& d) {
    json cycles = json::array();
    for (const auto& c : d.cycles) {
        json cyc = json::array();
        for (const auto& o : c) {
            cyc.push_back(json::array({std::string(1, static_cast<char>('a' + o.letter)), o.exp}));
        }
        cycles.push_back(cyc);
    }
    return json{{"g", d.g}, {"cycles", cycles}};
}

ContractionDiagram
contraction_from_json(const json& j) {
    ContractionDiagram d;
    d.g = j.value("g", 2);
    for (const auto& cyc : j.at("cycles")) {
        std::vector<Occurrence> c;
        for (const auto& o : cyc) {
            std::string name = o.at(0).get<std::string>();
            if (name.size() != 1 || name[0] < 'a' || name[0] > 'z') {
                throw DomainError("invalid-diagram", "letters are single lowercase characters");
            }
            c.push_back({name[0] - 'a', o.at(1).get<int>()});
        }
        d.cycles.push_back(std::move(c));
    }
    d.validate();
    return d;
}

json
to_json(const KoikeExpansion& k) {
    json terms = json::array();
    for (const auto& t : k.terms) {
        terms.push_back(json{{"nu2", to_json(t.nu2)}, {"nu3", to_json(t.nu3)}, {"coeff", t.coeff.get_str()}});
    }
    return json{{"mu", to_json(k.mu)},
                {"nu", to_json(k.nu)},
                {"signed_convention", k.signed_convention},
                {"gate_points", k.gate_points},
                {"terms", terms}};
}

json
to_json(const Polynomial& p) {
    json c = json::array();
    for (const auto& q : p.coeffs()) {
        c.push_back(to_json(q));
    }
    return c;
}

json
to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.str()}};
}

json
to_json(const LaurentExpansion& e) {
    json c = json::array();
    for (size_t i = 0; i < e.coeffs.size(); ++i) {
        json t = to_json(e.coeffs[i]);
        t["index"] = static_cast<int>(i) - 1;
        c.push_back(t);
    }
    return json{{"order", e.order}, {"coefficients", c}};
}

json
to_json(const McEstimate& m) {
    return json{{"mean", {{"re", m.mean.real()}, {"im", m.mean.imag()}}},
                {"stderr", m.std_error},
                {"samples", m.samples},
                {"seed", m.seed},
                {"workers", m.workers}};
}

namespace {

void
flatten(const json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
        }
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], path + "[" + std::to_string(i) + "]", os);
        }
    } else {
        std::string v = j.is_string() ? j.get<std::string>() : j.dump();
        if (v.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : v) {
                q += c == '"' ? std::string("\"\"") : std::string(1, c);
            }
            v = q + "\"";
        }
        os << path << "," << v << "\n";
    }
}

}  // namespace

std::string
to_csv(const json& j) {
    std::ostringstream os;
    os << "key,value\n";
    flatten(j, "", os);
    return os.str();
}

}  // namespace swl
