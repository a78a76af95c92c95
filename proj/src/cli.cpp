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

#include "surfacewl/cli.hpp"

#include <cmath>
#include <sstream>

#include "surfacewl/bounds.hpp"
#include "surfacewl/characters.hpp"
#include "surfacewl/expansion.hpp"
#include "surfacewl/kernels.hpp"
#include "surfacewl/oracle.hpp"
#include "surfacewl/surface.hpp"
#include "surfacewl/weingarten.hpp"
#include "surfacewl/word.hpp"

#ifndef SURFACEWL_VERSION
#define SURFACEWL_VERSION "dev"
#endif

namespace swl::cli {

namespace {

json
number_or_text(long double x) {
    if (std::isfinite(static_cast<double>(x))) {
        return static_cast<double>(x);
    }
    return std::isnan(static_cast<double>(x)) ? "nan" : (x > 0 ? "inf" : "-inf");
}

// The value in both spellings: nested {"num","den"} and flat strings.
void
put_value(json& out, const Rational& v) {
    out["value"] = to_json(v);
    out["value_num"] = v.get_num().get_str();
    out["value_den"] = v.get_den().get_str();
    out["approx"] = to_double(v);
}

void
require(bool ok, const std::string& name, const std::string& what) {
    if (!ok) {
        throw DomainError(name, what);
    }
}

FourierOptions
fourier_options(const RunConfig& c) {
    FourierOptions o;
    o.workers = c.workers;
    o.budget = c.budget;
    return o;
}

Word
config_word(const RunConfig& c) {
    require(c.genus >= 1 && c.genus <= 13, "invalid-genus", "genus must be in 1..13");
    return Word::parse(c.word, c.genus);
}

RepPair
config_rep(const RunConfig& c) {
    if (!c.mu.empty() || !c.nu.empty()) {
        return RepPair{YoungDiagram::parse(c.mu), YoungDiagram::parse(c.nu)};
    }
    return RepPair{YoungDiagram::parse(c.lambda), YoungDiagram()};
}

json
run_zeta(const RunConfig& c) {
    CutoffSpec spec{c.B, c.max_dim};
    ZetaPartial z = witten_zeta_partial(parse_rational(c.s), c.n, spec);
    json r;
    r["s"] = to_json(z.s);
    r["n"] = z.n;
    r["cutoff"] = z.cutoff;
    r["terms"] = z.terms;
    put_value(r, z.partial_sum);
    r["tail_certificate"] = number_or_text(z.tail_certificate);
    r["tail_note"] = "exact partial sum; the omitted irreps contribute at most tail_certificate";
    return r;
}

json
run_coeff(const RunConfig& c) {
    Word w = config_word(c);
    RepPair rep = config_rep(c);
    require(c.n >= 1, "invalid-n", "n must be positive");
    FourierCoefficient f = rep.nu.empty() ? fourier_coefficient_poly(w, rep.mu, c.n, fourier_options(c))
                                          : fourier_coefficient_rational(w, rep.mu, rep.nu, c.n, fourier_options(c));
    json r;
    r["word"] = w.str();
    r["rep"] = to_json(f.rep);
    r["n"] = f.n;
    r["route"] = f.route;
    put_value(r, f.value);
    r["tail_note"] = "exact; a single Fourier coefficient has no truncation";
    return r;
}

json
run_expect(const RunConfig& c) {
    Word w = config_word(c);
    require(c.n >= 2, "invalid-n", "n must be at least 2");
    ExpectedTrace e = expected_trace(w, c.n, CutoffSpec{c.B, 0}, fourier_options(c));
    json r;
    r["word"] = w.str();
    r["n"] = c.n;
    r["B"] = c.B;
    r["genus"] = c.genus;
    put_value(r, e.value);
    r["numerator"] = to_json(e.numerator);
    r["denominator"] = to_json(e.denominator);
    r["terms"] = e.terms;
    r["threshold"] = e.threshold;
    r["rational_regime"] = e.rational_regime;
    r["denominator_tail"] = number_or_text(e.denominator_tail);
    r["tail_note"] = e.tail_note;
    return r;
}

json
run_bound(const RunConfig& c) {
    Word w = config_word(c);
    RepPair rep = config_rep(c);
    BoundReport b = single_lambda_majorant(w, rep, c.n);
    json r;
    r["word"] = w.str();
    r["rep"] = to_json(rep);
    r["lambda"] = to_json(b.lambda);
    r["n"] = b.n;
    r["C"] = b.C;
    put_value(r, b.majorant);
    json terms = json::array();
    for (const auto& t : b.per_orbit_terms) {
        terms.push_back(to_json(t));
    }
    r["per_orbit_terms"] = terms;
    r["simplified_log10"] = b.simplified_log10;
    r["simplified_label"] = b.simplified_label;
    TailMajorant t = tail_majorant(w, CutoffSpec{c.B, 0}, c.n);
    r["tail_majorant"] = json{{"applicable", t.applicable},
                              {"value", number_or_text(t.value)},
                              {"log10_value", t.log10_value},
                              {"label", t.label},
                              {"note", t.note}};
    r["tail_note"] = "value is an exact upper bound for |I(w, lambda)|";
    return r;
}

json
run_mc(const RunConfig& c) {
    Word w = config_word(c);
    RepPair rep = config_rep(c);
    require(c.n >= 1 && c.n <= 64, "invalid-n", "mc needs 1 <= n <= 64");
    require(c.samples >= 2, "invalid-samples", "need at least 2 samples");
    McEstimate m = mc_integral(w, rep, static_cast<int>(c.n), parse_group(c.group), c.samples, c.seed, c.workers);
    json r = to_json(m);
    r["word"] = w.str();
    r["rep"] = to_json(rep);
    r["n"] = c.n;
    r["group"] = group_name(parse_group(c.group));
    return r;
}

json
run_json(const PipelineRun& run) {
    json r;
    r["B"] = run.B;
    r["threshold"] = run.threshold;
    r["requested_range"] = json::array({run.requested_from, run.requested_from + run.requested_count - 1});
    r["used_range"] = json::array({run.used_from, run.used_from + run.used_count - 1});
    r["extended"] = run.extended;
    r["fit"] = json{{"deg_num", run.fit.deg_num},
                    {"deg_den", run.fit.deg_den},
                    {"fit_points", run.fit.fit_points},
                    {"function", to_json(run.fit.f)}};
    json res = json::array();
    for (const auto& q : run.fit.held_out_residuals) {
        res.push_back(to_json(q));
    }
    r["held_out_residuals"] = res;
    r["expansion"] = to_json(run.expansion);
    return r;
}

json
run_expand(const RunConfig& c) {
    Word w = config_word(c);
    PipelineOptions o;
    o.fourier = fourier_options(c);
    o.workers = c.workers;
    o.auto_extend = c.auto_extend;
    o.stability = c.stability;
    long from = c.n_from > 0 ? c.n_from : w.length() + 2L * c.B * c.B * c.B;
    PipelineResult p = expansion_pipeline(w, CutoffSpec{c.B, 0}, from, c.n_count, c.order, o);
    json r;
    r["word"] = w.str();
    json coeffs = json::array();
    for (int i = -1; i + 1 < static_cast<int>(p.run.expansion.coeffs.size()); ++i) {
        json t = to_json(p.run.expansion.a(i));
        t["index"] = i;
        coeffs.push_back(t);
    }
    r["coefficients"] = coeffs;
    r["diagnostics"] = run_json(p.run);
    if (p.stability) {
        json agree = json::array();
        for (bool b : p.stability->agree) {
            agree.push_back(b);
        }
        r["stability"] = json{{"run", run_json(p.stability->next)},
                              {"agree", agree},
                              {"all_agree", p.stability->all_agree},
                              {"tail_note", p.stability->tail_note}};
    }
    return r;
}

json
run_integrate(const RunConfig& c) {
    require(!c.diagram.is_null(), "missing-diagram", "integrate needs a diagram");
    ContractionDiagram d = contraction_from_json(c.diagram);
    EngineOptions o;
    o.workers = c.workers;
    o.budget = c.budget;
    Rational v = word_power_integral(d, c.n, o);
    json r;
    r["diagram"] = to_json(d);
    r["n"] = c.n;
    put_value(r, v);
    r["tail_note"] = "exact";
    return r;
}

json
run_check(const RunConfig& c) {
    json items = json::array();
    bool all = true;
    for (const auto& it : invariant_suite(c.workers)) {
        items.push_back(json{{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
        all = all && it.ok;
    }
    return json{{"all_ok", all}, {"checks", items}};
}

json
dispatch(const RunConfig& c);

json
run_replay(const RunConfig& c) {
    require(c.replay_report.is_object() && c.replay_report.contains("config"), "invalid-report",
            "replay needs a report with a config echo");
    RunConfig inner = config_from_json(c.replay_report.at("config"));
    require(inner.command != "replay", "invalid-report", "cannot replay a replay");
    json fresh = dispatch(inner);
    bool same = c.replay_report.contains("result") && c.replay_report.at("result") == fresh;
    if (!same) {
        throw DomainError("replay-mismatch", "re-running the echoed config gave a different result");
    }
    return json{{"identical", true}, {"command", inner.command}};
}

json
dispatch(const RunConfig& c) {
    if (c.command == "zeta") {
        return run_zeta(c);
    }
    if (c.command == "coeff") {
        return run_coeff(c);
    }
    if (c.command == "expect") {
        return run_expect(c);
    }
    if (c.command == "bound") {
        return run_bound(c);
    }
    if (c.command == "mc") {
        return run_mc(c);
    }
    if (c.command == "expand") {
        return run_expand(c);
    }
    if (c.command == "integrate") {
        return run_integrate(c);
    }
    if (c.command == "check") {
        return run_check(c);
    }
    if (c.command == "replay") {
        return run_replay(c);
    }
    throw DomainError("unknown-command", "unknown command '" + c.command + "'");
}

}  // namespace

json
config_to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["word"] = c.word;
    j["genus"] = c.genus;
    j["n"] = c.n;
    j["B"] = c.B;
    j["lambda"] = c.lambda;
    j["mu"] = c.mu;
    j["nu"] = c.nu;
    j["s"] = c.s;
    j["max_dim"] = c.max_dim;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["group"] = c.group;
    j["n_from"] = c.n_from;
    j["n_count"] = c.n_count;
    j["order"] = c.order;
    j["auto_extend"] = c.auto_extend;
    j["stability"] = c.stability;
    j["diagram"] = c.diagram;
    j["workers"] = c.workers;
    j["output"] = c.output;
    j["budget"] = c.budget;
    return j;
}

RunConfig
config_from_json(const json& j) {
    RunConfig c;
    c.command = j.value("command", c.command);
    c.word = j.value("word", c.word);
    c.genus = j.value("genus", c.genus);
    c.n = j.value("n", c.n);
    c.B = j.value("B", c.B);
    c.lambda = j.value("lambda", c.lambda);
    c.mu = j.value("mu", c.mu);
    c.nu = j.value("nu", c.nu);
    c.s = j.value("s", c.s);
    c.max_dim = j.value("max_dim", c.max_dim);
    c.samples = j.value("samples", c.samples);
    c.seed = j.value("seed", c.seed);
    c.group = j.value("group", c.group);
    c.n_from = j.value("n_from", c.n_from);
    c.n_count = j.value("n_count", c.n_count);
    c.order = j.value("order", c.order);
    c.auto_extend = j.value("auto_extend", c.auto_extend);
    c.stability = j.value("stability", c.stability);
    if (j.contains("diagram")) {
        c.diagram = j.at("diagram");
    }
    c.workers = j.value("workers", c.workers);
    c.output = j.value("output", c.output);
    c.budget = j.value("budget", c.budget);
    return c;
}

RunResult
run(const RunConfig& config) {
    RunResult out;
    out.report["tool"] = "surfacewl";
    out.report["version"] = SURFACEWL_VERSION;
    out.report["command"] = config.command;
    out.report["config"] = config_to_json(config);
    try {
        if (config.workers < 1) {
            throw DomainError("invalid-workers", "workers must be at least 1");
        }
        out.report["result"] = dispatch(config);
        if (config.command == "check" && !out.report["result"]["all_ok"].get<bool>()) {
            out.exit_code = 1;
        }
    } catch (const DomainError& e) {
        out.exit_code = 1;
        out.report["error"] = json{{"kind", "domain"}, {"name", e.name()}, {"message", e.what()}};
    } catch (const BudgetError& e) {
        out.exit_code = 2;
        out.report["error"] = json{{"kind", "budget"}, {"name", "budget-exceeded"}, {"message", e.what()}};
    } catch (const json::exception& e) {
        out.exit_code = 1;
        out.report["error"] = json{{"kind", "domain"}, {"name", "parse-error"}, {"message", e.what()}};
    }
    return out;
}

std::string
render(const json& report, const std::string& format) {
    if (format == "csv") {
        return to_csv(report);
    }
    return report.dump(2) + "\n";
}

std::vector<CheckItem>
invariant_suite(int workers) {
    std::vector<CheckItem> out;
    auto add = [&](const std::string& name, auto&& body) {
        CheckItem it;
        it.name = name;
        try {
            it.ok = body(it.detail);
        } catch (const std::exception& e) {
            it.ok = false;
            it.detail = e.what();
        }
        out.push_back(std::move(it));
    };

    add("partition-counts", [](std::string&) {
        const long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
        for (int k = 0; k <= 15; ++k) {
            if (static_cast<long>(enumerate_partitions(k).size()) != p[k]) {
                return false;
            }
        }
        return true;
    });
    add("sum-of-squared-dimensions", [](std::string&) {
        for (int k = 1; k <= 7; ++k) {
            Integer s = 0;
            for (const auto& l : enumerate_partitions(k)) {
                s += dim_sk(l) * dim_sk(l);
            }
            if (s != factorial(k)) {
                return false;
            }
        }
        return true;
    });
    add("frobenius-empty-word", [&](std::string& d) {
        FourierOptions o;
        o.workers = workers;
        o.integrate_unused_pairs = false;
        o.commutator_closed_form = false;
        for (long n : {2L, 3L}) {
            for (const YoungDiagram& l : {YoungDiagram{1}, YoungDiagram{2}, YoungDiagram{1, 1}}) {
                Rational D(dim_un(l, n));
                Rational want = Rational(n) / (D * D * D);
                Rational got = fourier_coefficient_poly(Word::parse("", 2), l, n, o).value;
                if (got != want) {
                    d = l.str() + " n=" + std::to_string(n) + ": " + to_string(got);
                    return false;
                }
            }
        }
        return true;
    });
    add("witten-zeta-su2", [](std::string&) {
        ZetaPartial z = witten_zeta_partial(Rational(2), 2, CutoffSpec{1, 100});
        Rational want = 0;
        for (long k = 1; k <= 100; ++k) {
            want += Rational(1, k * k);
        }
        return z.partial_sum == want && z.terms == 100;
    });
    add("identity-expectation", [&](std::string&) {
        FourierOptions o;
        o.workers = workers;
        for (long n = 4; n <= 6; ++n) {
            if (expected_trace(Word::parse("", 2), n, CutoffSpec{1, 0}, o).value != Rational(n)) {
                return false;
            }
        }
        return true;
    });
    add("zero-law", [&](std::string&) {
        for (const char* w : {"a", "ab", "aaB"}) {
            Word word = Word::parse(w, 2);
            for (long n : {3L, 4L}) {
                if (fourier_coefficient_poly(word, YoungDiagram{1}, n).value != 0) {
                    return false;
                }
                if (expected_trace(word, n, CutoffSpec{1, 0}).value != 0) {
                    return false;
                }
            }
        }
        return true;
    });
    add("commutator-closed-form", [&](std::string& d) {
        FourierOptions engine;
        engine.workers = workers;
        engine.commutator_closed_form = false;
        Word w = Word::parse("abAB", 2);
        Rational a = fourier_coefficient_poly(w, YoungDiagram{1}, 3).value;
        Rational b = fourier_coefficient_poly(w, YoungDiagram{1}, 3, engine).value;
        d = to_string(a) + " vs " + to_string(b);
        return a == b && a == Rational(1, 8);
    });
    add("koike-gate", [](std::string&) {
        for (const YoungDiagram& mu : {YoungDiagram{}, YoungDiagram{1}, YoungDiagram{2}, YoungDiagram{1, 1}}) {
            for (const YoungDiagram& nu : {YoungDiagram{}, YoungDiagram{1}}) {
                KoikeExpansion k = koike_expand(mu, nu);
                for (long n = 4; n <= 8; ++n) {
                    if (koike_dimension(k.terms, n) != dim_rational(mu, nu, n)) {
                        return false;
                    }
                }
            }
        }
        return true;
    });
    add("glm-lower-bound", [](std::string& d) {
        for (int k = 0; k <= 4; ++k) {
            for (const auto& l : enumerate_partitions(k)) {
                for (long n = std::max(2, l.length() + 1); n <= 6; ++n) {
                    if (glm_lower_bound(l, n) > dim_un(l, n).get_d()) {
                        d = l.str() + " n=" + std::to_string(n);
                        return false;
                    }
                }
            }
        }
        return true;
    });
    add("majorant-dominance", [](std::string&) {
        Word w = Word::parse("abAB", 2);
        Rational v = fourier_coefficient_poly(w, YoungDiagram{1}, 3).value;
        return abs(v) <= single_lambda_majorant(w, YoungDiagram{1}, 3).majorant;
    });
    add("simd-kernel-equivalence", [](std::string& d) {
        d = kernels::isa_name(kernels::active_isa());
        const int n = 7;
        std::vector<kernels::cplx> a(n * n), b(n * n), c1(n * n), c2(n * n);
        for (int i = 0; i < n * n; ++i) {
            a[i] = {std::sin(i + 1.0), std::cos(2.0 * i)};
            b[i] = {std::cos(i + 0.5), std::sin(3.0 * i)};
        }
        kernels::matmul_scalar(a.data(), b.data(), c1.data(), n);
        kernels::matmul(a.data(), b.data(), c2.data(), n);
        for (int i = 0; i < n * n; ++i) {
            if (std::abs(c1[i] - c2[i]) > 1e-12) {
                return false;
            }
        }
        return std::abs(kernels::trace_product_scalar(a.data(), b.data(), n) -
                        kernels::trace_product(a.data(), b.data(), n)) < 1e-12;
    });
    add("mc-determinism", [&](std::string&) {
        Word w = Word::parse("abAB", 2);
        RepPair rep{YoungDiagram{1}, YoungDiagram()};
        McEstimate x = mc_integral(w, rep, 3, Group::kU, 2000, 7, workers);
        McEstimate y = mc_integral(w, rep, 3, Group::kU, 2000, 7, workers);
        return x.mean == y.mean && x.std_error == y.std_error;
    });
    return out;
}

}  // namespace swl::cli
