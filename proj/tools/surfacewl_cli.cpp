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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "surfacewl/cli.hpp"

namespace {

swl::json
read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw swl::DomainError("io-error", "cannot open " + path);
    }
    return swl::json::parse(in);
}

}  // namespace

int
main(int argc, char** argv) {
    CLI::App app{"surfacewl: exact Wilson-loop expectations for surface groups over U(n) and SU(n)"};
    app.footer(
        "Words: [a-zA-Z]*, lowercase = generator (a=a1, b=b1, c=a2, d=b2, ...), uppercase = its inverse,\n"
        "empty string = identity. Shapes: comma-separated rows, e.g. \"2,1\"; \"\" is the empty diagram.\n"
        "SURFACEWL_BUDGET overrides the default engine budget. Exit codes: 0 ok, 1 domain or parse error,\n"
        "2 budget refusal.");
    app.require_subcommand(1);
    app.fallthrough();

    swl::cli::RunConfig c;
    std::string diagram_file;
    std::string report_file;
    app.add_option("--output", c.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--budget", c.budget, "Engine budget in elementary terms (0: default)");

    auto word_opts = [&](CLI::App* s) {
        s->add_option("--word", c.word, "Word in the surface group")->required();
        s->add_option("--genus", c.genus, "Genus g")->check(CLI::Range(1, 13));
    };
    auto rep_opts = [&](CLI::App* s) {
        s->add_option("--lambda", c.lambda, "Polynomial label");
        s->add_option("--mu", c.mu, "Rational label, positive part");
        s->add_option("--nu", c.nu, "Rational label, negative part");
    };

    auto* zeta = app.add_subcommand("zeta", "Partial Witten zeta sum with tail certificate");
    zeta->add_option("--s", c.s, "Exponent (integer)")->required();
    zeta->add_option("--n", c.n, "Rank n of SU(n)")->required();
    zeta->add_option("--B", c.B, "Cutoff parameter");
    zeta->add_option("--max-dim", c.max_dim, "Sum all irreps of dimension <= this instead");

    auto* coeff = app.add_subcommand("coeff", "Exact Fourier coefficient I(w, rho)");
    word_opts(coeff);
    rep_opts(coeff);
    coeff->add_option("--n", c.n, "Rank")->required();

    auto* expect = app.add_subcommand("expect", "Truncated expectation E[tr w]");
    word_opts(expect);
    expect->add_option("--n", c.n, "Rank")->required();
    expect->add_option("--B", c.B, "Cutoff parameter");

    auto* bound = app.add_subcommand("bound", "Single-representation majorant and tail majorant");
    word_opts(bound);
    rep_opts(bound);
    bound->add_option("--n", c.n, "Rank")->required();
    bound->add_option("--B", c.B, "Cutoff parameter for the tail majorant");

    auto* mc = app.add_subcommand("mc", "Monte Carlo Haar estimate of I(w, rho)");
    word_opts(mc);
    rep_opts(mc);
    mc->add_option("--n", c.n, "Rank")->required();
    mc->add_option("--samples", c.samples, "Sample count");
    mc->add_option("--seed", c.seed, "Seed");
    mc->add_option("--group", c.group, "U or SU")->check(CLI::IsMember({"U", "SU"}));

    auto* expand = app.add_subcommand("expand", "Laurent coefficients in 1/n by rational interpolation");
    word_opts(expand);
    expand->add_option("--B", c.B, "Cutoff parameter");
    expand->add_option("--n-from", c.n_from, "First n (default: the validity threshold)");
    expand->add_option("--n-count", c.n_count, "Number of n values requested");
    expand->add_option("--order", c.order, "Number of coefficients a_{-1}, a_0, ...");
    expand->add_flag("!--no-extend", c.auto_extend, "Fail instead of appending n values");
    expand->add_flag("!--no-stability", c.stability, "Skip the B + 1 rerun");

    auto* integrate = app.add_subcommand("integrate", "Exact integral of a contraction diagram");
    integrate->add_option("--diagram", diagram_file, "Diagram JSON file")->required()->check(CLI::ExistingFile);
    integrate->add_option("--n", c.n, "Rank")->required();

    app.add_subcommand("check", "Run the invariant suite");

    auto* replay = app.add_subcommand("replay", "Re-run a saved report and compare");
    replay->add_option("--report", report_file, "Report JSON file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        if (!diagram_file.empty()) {
            c.diagram = read_json_file(diagram_file);
        }
        if (!report_file.empty()) {
            c.replay_report = read_json_file(report_file);
        }
    } catch (const std::exception& e) {
        std::cerr << "parse-error: " << e.what() << "\n";
        return 1;
    }

    swl::cli::RunResult r = swl::cli::run(c);
    std::cout << swl::cli::render(r.report, c.output);
    if (r.report.contains("error")) {
        std::cerr << r.report["error"]["message"].get<std::string>() << "\n";
    }
    return r.exit_code;
}
