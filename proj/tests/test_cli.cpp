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

#include "surfacewl/cli.hpp"

using namespace swl;
using swl::cli::RunConfig;

namespace {

RunConfig
cfg(const std::string& command) {
    RunConfig c;
    c.command = command;
    return c;
}

}  // namespace

TEST_CASE("documented examples") {
    RunConfig e = cfg("expect");
    e.n = 5;
    e.B = 1;
    auto r = cli::run(e);
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["value_num"] == "5");
    CHECK(r.report["result"]["value_den"] == "1");
    CHECK(r.report["result"]["value"]["num"] == "5");
    CHECK(r.report["result"].contains("tail_note"));

    RunConfig c = cfg("coeff");
    c.word = "abAB";
    c.n = 4;
    r = cli::run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["value_num"] == "1");
    CHECK(r.report["result"]["value_den"] == "4");

    RunConfig z = cfg("zeta");
    z.n = 2;
    z.B = 10;
    r = cli::run(z);
    CHECK(r.exit_code == 0);
    Rational want = 0;
    for (long k = 1; k <= 201; ++k) {
        want += Rational(1, k * k);
    }
    CHECK(rational_from_json(r.report["result"]["value"]) == want);
}

TEST_CASE("reports echo the configuration and version") {
    RunConfig c = cfg("bound");
    c.word = "abAB";
    c.lambda = "2";
    c.n = 5;
    auto r = cli::run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.report["version"] == SURFACEWL_VERSION);
    CHECK(r.report["config"]["lambda"] == "2");
    CHECK(cli::config_to_json(cli::config_from_json(r.report["config"])) == r.report["config"]);
}

TEST_CASE("exit codes") {
    RunConfig bad = cfg("coeff");
    bad.word = "ab!";
    bad.n = 3;
    auto r = cli::run(bad);
    CHECK(r.exit_code == 1);
    CHECK(r.report["error"]["name"] == "parse-error");

    RunConfig dom = cfg("zeta");
    dom.s = "1";
    dom.n = 2;
    CHECK(cli::run(dom).exit_code == 1);

    RunConfig budget = cfg("integrate");
    budget.n = 3;
    budget.budget = 10;
    budget.diagram = json::parse(R"({"g":2,"cycles":[[["a",1],["a",1],["a",1]],[["a",-1],["a",-1],["a",-1]]]})");
    r = cli::run(budget);
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["kind"] == "budget");

    CHECK(cli::run(cfg("nonsense")).exit_code == 1);
}

TEST_CASE("integrate reads diagrams") {
    RunConfig c = cfg("integrate");
    c.n = 3;
    c.diagram = json::parse(R"({"g":2,"cycles":[[["a",1],["b",1],["a",-1],["b",-1]]]})");
    auto r = cli::run(c);
    CHECK(r.exit_code == 0);
    CHECK(rational_from_json(r.report["result"]["value"]) == Rational(1, 3));
}

TEST_CASE("replay reproduces exact and Monte Carlo results") {
    RunConfig c = cfg("coeff");
    c.word = "abAB";
    c.mu = "1";
    c.nu = "1";
    c.n = 3;
    auto first = cli::run(c);
    RunConfig rp = cfg("replay");
    rp.replay_report = json::parse(first.report.dump());
    auto again = cli::run(rp);
    CHECK(again.exit_code == 0);
    CHECK(again.report["result"]["identical"] == true);

    RunConfig m = cfg("mc");
    m.word = "abAB";
    m.lambda = "1";
    m.n = 3;
    m.samples = 2000;
    m.workers = 2;
    first = cli::run(m);
    rp.replay_report = json::parse(first.report.dump());
    CHECK(cli::run(rp).exit_code == 0);

    rp.replay_report["result"]["value_num"] = "2";
    rp.replay_report["config"] = cli::config_to_json(c);
    auto mismatch = cli::run(rp);
    CHECK(mismatch.exit_code == 1);
    CHECK(mismatch.report["error"]["name"] == "replay-mismatch");
}

TEST_CASE("csv rendering") {
    RunConfig c = cfg("coeff");
    c.word = "abAB";
    c.lambda = "1";
    c.n = 3;
    std::string csv = cli::render(cli::run(c).report, "csv");
    CHECK(csv.rfind("key,value\n", 0) == 0);
    CHECK(csv.find("result.value_den,8\n") != std::string::npos);
    CHECK(csv.find("result.rep.mu[0],1\n") != std::string::npos);
}

TEST_CASE("expand reports ranges") {
    RunConfig c = cfg("expand");
    c.word = "";
    c.B = 1;
    c.n_from = 4;
    c.n_count = 6;
    c.order = 3;
    auto r = cli::run(c);
    REQUIRE(r.exit_code == 0);
    CHECK(r.report["result"]["coefficients"][0]["num"] == "1");
    CHECK(r.report["result"]["diagnostics"]["requested_range"] == json::array({4, 9}));
    CHECK(r.report["result"]["stability"]["all_agree"] == true);
}

TEST_CASE("check suite passes") {
    auto r = cli::run(cfg("check"));
    INFO(r.report.dump(2));
    CHECK(r.exit_code == 0);
    CHECK(r.report["result"]["all_ok"] == true);
}
