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

#include "surfacewl/surface.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "surfacewl/bounds.hpp"
#include "surfacewl/characters.hpp"

namespace swl {

namespace {

std::vector<Occurrence>
occurrences(const Word& w) {
    std::vector<Occurrence> out;
    for (const auto& l : w.letters()) {
        out.push_back({l.gen, l.exp});
    }
    return out;
}

std::vector<Occurrence>
repeated(const std::vector<Occurrence>& base, int times) {
    std::vector<Occurrence> out;
    for (int i = 0; i < times; ++i) {
        out.insert(out.end(), base.begin(), base.end());
    }
    return out;
}

std::string
diagram_key(const ContractionDiagram& d) {
    std::string key;
    for (const auto& c : d.cycles) {
        for (const auto& o : c) {
            key += static_cast<char>('A' + o.letter);
            key += o.exp > 0 ? '+' : '-';
        }
        key += '|';
    }
    return key;
}

// Returns true if the zero law settles the value (which is then 0).
bool
zero_law_applies(const Word& w, long n) {
    if (is_commutator_balanced(w)) {
        return false;
    }
    for (int e : w.exponent_sums()) {
        if (e % n != 0) {
            return true;
        }
    }
    throw DomainError("zero-law-threshold", "unbalanced word " + w.str() + " with every exponent sum divisible by n = " +
                                                std::to_string(n) + "; the SU(n) value is not forced to vanish");
}

// conj(s_{[mu,nu]}(R)) = sum c s_{nu2}(R^{-1}) s_{nu3}(R), each factor
// expanded into power sums; one engine call per product of power sums.
Rational
engine_route(const Word& w, const std::vector<KoikeTerm>& terms, long n, const std::vector<bool>& used,
             const FourierOptions& opts) {
    const int g = w.genus();
    Word rel = partial_relator(g, used);
    std::vector<Occurrence> r = occurrences(rel);
    std::vector<Occurrence> rinv = occurrences(rel.inverse());
    std::vector<Occurrence> wocc = occurrences(w);
    EngineOptions eo;
    eo.workers = opts.workers;
    eo.budget = opts.budget;

    std::map<std::string, Rational> memo;
    Rational total = 0;
    for (const auto& t : terms) {
        auto left = schur_expand_power_sums(t.nu2, kEngineMaxWeingartenK);
        auto right = schur_expand_power_sums(t.nu3, kEngineMaxWeingartenK);
        for (const auto& a : left) {
            for (const auto& b : right) {
                ContractionDiagram d;
                d.g = g;
                if (!wocc.empty()) {
                    d.cycles.push_back(wocc);
                }
                for (int k : a.kappa.rows()) {
                    d.cycles.push_back(repeated(rinv, k));
                }
                for (int k : b.kappa.rows()) {
                    d.cycles.push_back(repeated(r, k));
                }
                ContractionDiagram nd = d.normalized();
                std::string key = diagram_key(nd);
                auto it = memo.find(key);
                if (it == memo.end()) {
                    it = memo.emplace(key, word_power_integral(nd, n, eo)).first;
                }
                total += Rational(t.coeff) * a.coeff * b.coeff * it->second;
            }
        }
    }
    if (wocc.empty()) {
        total *= n;  // tr(Id)
    }
    return total;
}

FourierCoefficient
fourier_impl(const Word& w, const YoungDiagram& mu, const YoungDiagram& nu, long n, const FourierOptions& opts) {
    if (n < 1) {
        throw DomainError("invalid-n", "n must be positive");
    }
    FourierCoefficient out;
    out.rep = {mu, nu};
    out.n = n;
    out.w = w;
    if (nu.empty() && mu.length() > n) {
        out.value = 0;
        out.route = kRouteVanishing;
        return out;
    }
    if (mu.length() + nu.length() > n) {
        throw DomainError("rank-too-small", "[" + mu.str() + "," + nu.str() + "] needs n >= " +
                                                std::to_string(mu.length() + nu.length()));
    }
    if (zero_law_applies(w, n)) {
        out.value = 0;
        out.route = kRouteZeroLaw;
        return out;
    }
    const int g = w.genus();
    Integer D = dim_rational(mu, nu, n);

    std::vector<bool> used(static_cast<size_t>(g), true);
    int unused = 0;
    if (opts.integrate_unused_pairs) {
        used = w.pairs_used();
        unused = static_cast<int>(std::count(used.begin(), used.end(), false));
    }
    Rational factor = Rational(1) / power(Rational(D), 2L * unused);

    if (unused == g) {
        // tr(Id) times chi(e) times one 1/D^2 per pair.
        out.value = Rational(n) * Rational(D) * factor;
        out.route = kRouteFrobenius;
        return out;
    }
    if (opts.integrate_unused_pairs && opts.commutator_closed_form) {
        auto [pair, sign] = match_single_commutator(w);
        if (pair >= 0) {
            out.value = factor * commutator_neighbour_sum(mu, nu, n, sign);
            out.route = kRouteClosedForm;
            return out;
        }
    }
    std::vector<KoikeTerm> terms;
    if (nu.empty()) {
        terms.push_back({mu, YoungDiagram(), Integer(1)});
    } else {
        terms = koike_expand(mu, nu).terms;
    }
    out.value = factor * engine_route(w, terms, n, used, opts);
    out.route = kRouteEngine;
    return out;
}

// Sum over a histogram of dimensions without intermediate reduction.
struct Fraction {
    Integer num;
    Integer den;
};

Fraction
tree_sum(const std::vector<Fraction>& v, size_t lo, size_t hi) {
    if (hi - lo == 1) {
        return v[lo];
    }
    size_t mid = lo + (hi - lo) / 2;
    Fraction a = tree_sum(v, lo, mid);
    Fraction b = tree_sum(v, mid, hi);
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

Rational
sum_inverse_powers(const std::map<Integer, long>& hist, unsigned long s) {
    if (hist.empty()) {
        return 0;
    }
    std::vector<Fraction> v;
    v.reserve(hist.size());
    for (const auto& [d, count] : hist) {
        v.push_back({Integer(count), power(d, s)});
    }
    Fraction f = tree_sum(v, 0, v.size());
    Rational q(f.num, f.den);
    q.canonicalize();
    return q;
}

void
enumerate_small_dims(long n, std::int64_t N, std::vector<int>& x, size_t k, std::map<Integer, long>& hist) {
    std::vector<int> sig(static_cast<size_t>(n), 0);
    auto dim_now = [&]() {
        int acc = 0;
        for (long i = n - 2; i >= 0; --i) {
            acc += x[static_cast<size_t>(i)];
            sig[static_cast<size_t>(i)] = acc;
        }
        sig[static_cast<size_t>(n - 1)] = 0;
        return weyl_dimension(sig);
    };
    if (k == x.size()) {
        hist[dim_now()] += 1;
        return;
    }
    // The dimension increases with every coordinate, and the unset
    // coordinates are still 0, so the first overshoot ends the branch.
    for (x[k] = 0;; ++x[k]) {
        if (dim_now() > N) {
            break;
        }
        enumerate_small_dims(n, N, x, k + 1, hist);
    }
    x[k] = 0;
}

double
min_glm_exponent(long n) {
    double v = std::numeric_limits<double>::infinity();
    for (long j = 1; j <= n / 2; ++j) {
        v = std::min(v, glm_exponent(n, j));
    }
    return v;
}

}  // namespace

Rational
commutator_neighbour_sum(const YoungDiagram& mu, const YoungDiagram& nu, long n, int sign) {
    std::vector<int> f = rational_signature(mu, nu, static_cast<int>(n));
    Rational total = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        std::vector<int> h = f;
        h[i] -= sign;
        bool ok = true;
        if (i > 0 && h[i - 1] < h[i]) {
            ok = false;
        }
        if (i + 1 < h.size() && h[i] < h[i + 1]) {
            ok = false;
        }
        if (ok) {
            total += Rational(1) / Rational(weyl_dimension(h));
        }
    }
    return total;
}

FourierCoefficient
fourier_coefficient_poly(const Word& w, const YoungDiagram& lambda, long n, const FourierOptions& opts) {
    return fourier_impl(w, lambda, YoungDiagram(), n, opts);
}

FourierCoefficient
fourier_coefficient_rational(const Word& w, const YoungDiagram& mu, const YoungDiagram& nu, long n,
                             const FourierOptions& opts) {
    return fourier_impl(w, mu, nu, n, opts);
}

long double
omega_tail_certificate(long double s, long n, int B) {
    if (n < 2) {
        return 0;
    }
    long double lp = log_zeta_product_upper(n, s, 0);
    if (std::isinf(lp)) {
        return lp;
    }
    long double sum = 0;
    for (long j = 1; j <= n - 1; ++j) {
        bool edge = j <= B || j >= n - B;
        if (!edge && j <= n / 2 && s * static_cast<long double>(j) >= 64.0L) {
            // Middle terms left: each is at most 3 * 2^{-s v_j} with v_j >= j,
            // counted once for j and once for n - j.
            sum += 2.0L * 3.0L * std::pow(2.0L, -s * j) / (1.0L - std::pow(2.0L, -s));
            j = n - B - 1;  // jump to the right edge
            continue;
        }
        sum += zeta_tail_upper(s * static_cast<long double>(glm_exponent(n, j)), edge ? B + 2 : 2);
    }
    return std::exp(lp) * sum * std::pow(1.0L - 1e-12L, -s);
}

long double
dimension_tail_certificate(long double s, long n, std::int64_t N) {
    if (n < 2) {
        return 0;
    }
    long double lo = 1.0L / min_glm_exponent(n);
    if (!(s > lo)) {
        return std::numeric_limits<long double>::infinity();
    }
    long double best = std::numeric_limits<long double>::infinity();
    const int steps = 200;
    for (int k = 1; k < steps; ++k) {
        long double sp = lo + (s - lo) * k / steps;
        long double lp = log_zeta_product_upper(n, sp, 0);
        if (std::isinf(lp)) {
            continue;
        }
        // D^{-s} <= N^{-(s - s')} D^{-s'} for D > N.
        long double v = std::exp(lp - (s - sp) * std::log(static_cast<long double>(N))) * std::pow(1.0L - 1e-12L, -sp);
        best = std::min(best, v);
    }
    return best;
}

ZetaPartial
witten_zeta_partial(const Rational& s, long n, const CutoffSpec& spec) {
    if (n < 1) {
        throw DomainError("invalid-n", "n must be positive");
    }
    if (!(s * n > 2)) {
        throw DomainError("divergence", "the series converges only for s > 2/n");
    }
    if (s.get_den() != 1) {
        throw DomainError("non-integer-exponent", "exact partial sums need an integer s");
    }
    if (!s.get_num().fits_ulong_p()) {
        throw DomainError("invalid-exponent", "s too large");
    }
    unsigned long si = s.get_num().get_ui();
    ZetaPartial out;
    out.s = s;
    out.n = n;
    out.spec = spec;
    std::map<Integer, long> hist;
    if (n == 1) {
        hist[Integer(1)] = 1;
        out.cutoff = "SU(1): single irrep";
        out.tail_certificate = 0;
    } else if (spec.max_dim > 0) {
        std::vector<int> x(static_cast<size_t>(n - 1), 0);
        enumerate_small_dims(n, spec.max_dim, x, 0, hist);
        out.cutoff = "all irreps with dimension <= " + std::to_string(spec.max_dim);
        out.tail_certificate = dimension_tail_certificate(static_cast<long double>(si), n, spec.max_dim);
    } else {
        for (const auto& p : omega_family(spec, static_cast<int>(n))) {
            hist[dim_rational(p.mu, p.nu, n)] += 1;
        }
        out.cutoff = "Omega(" + std::to_string(spec.B) + "; " + std::to_string(n) + ")";
        out.tail_certificate = omega_tail_certificate(static_cast<long double>(si), n, spec.B);
    }
    for (const auto& [d, c] : hist) {
        out.terms += static_cast<std::size_t>(c);
    }
    out.partial_sum = sum_inverse_powers(hist, si);
    return out;
}

ExpectedTrace
expected_trace(const Word& w, long n, const CutoffSpec& spec, const FourierOptions& opts) {
    const int g = w.genus();
    if (g < 2) {
        throw DomainError("invalid-genus", "expectations need genus >= 2");
    }
    if (n < 2) {
        throw DomainError("invalid-n", "expectations need n >= 2");
    }
    ExpectedTrace out;
    out.threshold = w.length() + 2L * spec.B * spec.B * spec.B;
    out.rational_regime = n >= out.threshold;

    auto family = omega_family(spec, static_cast<int>(n));
    out.terms = family.size();
    bool zero = zero_law_applies(w, n);

    std::vector<Rational> num(family.size()), den(family.size());
    int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(family.size())));
    FourierOptions inner = opts;
    inner.workers = workers > 1 ? 1 : opts.workers;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    auto job = [&](int id) {
        try {
            for (size_t i = static_cast<size_t>(id); i < family.size(); i += static_cast<size_t>(workers)) {
                const auto& p = family[i];
                Integer D = dim_rational(p.mu, p.nu, n);
                den[i] = Rational(1) / power(Rational(D), 2L * g - 2);
                if (!zero) {
                    num[i] = Rational(D) * fourier_coefficient_rational(w, p.mu, p.nu, n, inner).value;
                }
            }
        } catch (...) {
            errors[static_cast<size_t>(id)] = std::current_exception();
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> threads;
        for (int id = 0; id < workers; ++id) {
            threads.emplace_back(job, id);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    // Fixed summation order, independent of the worker count.
    out.numerator = 0;
    out.denominator = 0;
    for (size_t i = 0; i < family.size(); ++i) {
        out.numerator += num[i];
        out.denominator += den[i];
    }
    out.value = out.numerator / out.denominator;
    out.denominator_tail = omega_tail_certificate(2.0L * g - 2.0L, n, spec.B);

    std::ostringstream note;
    note << "numerator and denominator truncated at Omega(" << spec.B << "; " << n << ")";
    note << "; omitted zeta tail <= " << static_cast<double>(out.denominator_tail);
    note << "; numerator tail is controlled only by the shape-level majorant";
    if (!out.rational_regime) {
        note << "; n below " << out.threshold << ", outside the rational regime";
    }
    out.tail_note = note.str();
    return out;
}

}  // namespace swl
