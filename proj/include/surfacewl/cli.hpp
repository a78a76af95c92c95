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
#include <string>
#include <vector>

#include "surfacewl/io.hpp"

namespace swl::cli {

// Everything a run depends on. Reports echo it verbatim so that a run can be
// replayed from its own output.
struct RunConfig {
    std::string command;
    std::string word;
    int genus = 2;
    long n = 0;
    int B = 1;
    std::string lambda;  // partition text "2,1"; empty string is the empty diagram
    std::string mu;
    std::string nu;
    std::string s = "2";
    std::int64_t max_dim = 0;
    long samples = 200000;
    std::uint64_t seed = 42;
    std::string group = "U";
    long n_from = 0;
    int n_count = 8;
    int order = 4;
    bool auto_extend = true;
    bool stability = true;
    json diagram;         // integrate
    json replay_report;   // replay
    int workers = 1;
    std::string output = "json";
    std::uint64_t budget = 0;  // 0: SURFACEWL_BUDGET or the built-in default
};

json
config_to_json(const RunConfig& c);
RunConfig
config_from_json(const json& j);

struct RunResult {
    int exit_code = 0;
    json report;
};

// Dispatches on config.command: zeta, coeff, expect, bound, mc, expand,
// integrate, check, replay. Never throws for library errors: DomainError
// and parse failures give exit code 1, BudgetError exit code 2, and the
// report then carries an "error" object.
RunResult
run(const RunConfig& config);

// "json" (pretty) or "csv" (flattened key,value lines).
std::string
render(const json& report, const std::string& format);

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

// The quick invariant suite behind the check verb.
std::vector<CheckItem>
invariant_suite(int workers);

}  // namespace swl::cli
