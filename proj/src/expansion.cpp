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

#include "surfacewl/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <sstream>
#include <thread>

#include "surfacewl/bounds.hpp"

namespace swl {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// 2^61 - 1 and 2^64 - 59.
constexpr u64 kPrimes[] = {2305843009213693951ULL, 18446744073709551557ULL};

u64
mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64
powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64
mod_integer(const Integer& z, u64 p) {
    Integer r;
    Integer pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

// Residues of the fit values; false if a denominator vanishes mod p.
bool
reduce_values(const std::vector<Sample>& pts, size_t count, u64 p, std::vector<u64>& xs, std::vector<u64>& ys) {
    xs.clear();
    ys.clear();
    for (size_t i = 0; i < count; ++i) {
        u64 den = mod_integer(pts[i].second.get_den(), p);
        if (den == 0) {
            return false;
        }
        u64 num = mod_integer(pts[i].second.get_num(), p);
        xs.push_back(mod_integer(Integer(pts[i].first), p));
        ys.push_back(mulmod(num, powmod(den, p - 2, p), p));
    }
    return true;
}

// det of the (dn + dd + 2)-square evaluation matrix vanishes mod p.
bool
singular_mod_p(const std::vector<u64>& xs, const std::vector<u64>& ys, int dn, int dd, u64 p) {
    const int size = dn + dd + 2;
    std::vector<std::vector<u64>> m(static_cast<size_t>(size), std::vector<u64>(static_cast<size_t>(size)));
    for (int i = 0; i < size; ++i) {
        auto& row = m[static_cast<size_t>(i)];
        u64 x = xs[static_cast<size_t>(i)];
        u64 negy = (p - ys[static_cast<size_t>(i)]) % p;
        u64 pw = 1;
        for (int j = 0; j <= std::max(dn, dd); ++j) {
            if (j <= dn) {
                row[static_cast<size_t>(j)] = pw;
            }
            if (j <= dd) {
                row[static_cast<size_t>(dn + 1 + j)] = mulmod(negy, pw, p);
            }
            pw = mulmod(pw, x, p);
        }
    }
    for (int c = 0; c < size; ++c) {
        int piv = -1;
        for (int i = c; i < size; ++i) {
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            return true;
        }
        std::swap(m[static_cast<size_t>(c)], m[static_cast<size_t>(piv)]);
        const auto& pr = m[static_cast<size_t>(c)];
        u64 inv = powmod(pr[static_cast<size_t>(c)], p - 2, p);
        for (int i = c + 1; i < size; ++i) {
            auto& row = m[static_cast<size_t>(i)];
            u64 f = mulmod(row[static_cast<size_t>(c)], inv, p);
            if (f == 0) {
                continue;
            }
            for (int j = c; j < size; ++j) {
                u64 sub = mulmod(f, pr[static_cast<size_t>(j)], p);
                u64 v = row[static_cast<size_t>(j)];
                row[static_cast<size_t>(j)] = v >= sub ? v - sub : v + (p - sub);
            }
        }
    }
    return false;
}

// A nonzero kernel vector by fraction-free elimination; empty if the
// columns are independent.
std::vector<Rational>
kernel_vector(std::vector<std::vector<Integer>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    Integer prev = 1;
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(piv)]);
        const auto& pr = m[static_cast<size_t>(r)];
        const Integer& pv = pr[static_cast<size_t>(c)];
        Integer t;
        for (int i = r + 1; i < rows; ++i) {
            auto& row = m[static_cast<size_t>(i)];
            const Integer lead = row[static_cast<size_t>(c)];
            for (int j = c + 1; j < cols; ++j) {
                Integer& e = row[static_cast<size_t>(j)];
                t = pv * e;
                t -= lead * pr[static_cast<size_t>(j)];
                mpz_divexact(e.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<size_t>(c)] = 0;
        }
        prev = pv;
        pivot_cols.push_back(c);
        ++r;
    }
    int free_col = -1;
    for (int c = 0, k = 0; c < cols; ++c) {
        if (k < static_cast<int>(pivot_cols.size()) && pivot_cols[static_cast<size_t>(k)] == c) {
            ++k;
        } else {
            free_col = c;
            break;
        }
    }
    if (free_col < 0) {
        return {};
    }
    std::vector<Rational> x(static_cast<size_t>(cols), Rational(0));
    x[static_cast<size_t>(free_col)] = 1;
    for (int k = static_cast<int>(pivot_cols.size()) - 1; k >= 0; --k) {
        int pc = pivot_cols[static_cast<size_t>(k)];
        if (pc > free_col) {
            continue;  // other free variables are 0, so these stay 0
        }
        Rational s = 0;
        const auto& row = m[static_cast<size_t>(k)];
        for (int j = pc + 1; j < cols; ++j) {
            if (x[static_cast<size_t>(j)] != 0 && row[static_cast<size_t>(j)] != 0) {
                s += Rational(row[static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
            }
        }
        x[static_cast<size_t>(pc)] = -s / Rational(row[static_cast<size_t>(pc)]);
    }
    return x;
}

// Exact fit on the first dn + dd + 1 points; nullopt if the kernel is
// trivial or the denominator vanishes.
std::optional<RationalFunction>
solve_exact(const std::vector<Sample>& pts, int dn, int dd) {
    const int eqs = dn + dd + 1;
    const int cols = dn + dd + 2;
    std::vector<std::vector<Integer>> m(static_cast<size_t>(eqs), std::vector<Integer>(static_cast<size_t>(cols)));
    for (int i = 0; i < eqs; ++i) {
        const auto& [n, y] = pts[static_cast<size_t>(i)];
        Integer pw = 1;
        auto& row = m[static_cast<size_t>(i)];
        for (int j = 0; j <= std::max(dn, dd); ++j) {
            if (j <= dn) {
                row[static_cast<size_t>(j)] = y.get_den() * pw;
            }
            if (j <= dd) {
                row[static_cast<size_t>(dn + 1 + j)] = -y.get_num() * pw;
            }
            pw *= n;
        }
    }
    std::vector<Rational> k = kernel_vector(std::move(m), cols);
    if (k.empty()) {
        return std::nullopt;
    }
    Polynomial num(std::vector<Rational>(k.begin(), k.begin() + dn + 1));
    Polynomial den(std::vector<Rational>(k.begin() + dn + 1, k.end()));
    if (den.is_zero()) {
        return std::nullopt;
    }
    return RationalFunction(num, den);
}

bool
reproduces(const RationalFunction& f, const std::vector<Sample>& pts, size_t lo, size_t hi,
           std::vector<Rational>* residuals) {
    bool ok = true;
    for (size_t i = lo; i < hi; ++i) {
        Rational x(pts[i].first);
        if (f.den()(x) == 0) {
            if (residuals) {
                residuals->push_back(pts[i].second);  // pole: report the full value
            }
            ok = false;
            continue;
        }
        Rational r = f(x) - pts[i].second;
        if (residuals) {
            residuals->push_back(r);
        }
        if (r != 0) {
            ok = false;
        }
    }
    return ok;
}

std::vector<Sample>
evaluate_points(const Word& w, const CutoffSpec& spec, long from, int count, const PipelineOptions& opts) {
    std::vector<Sample> pts(static_cast<size_t>(count));
    int workers = std::max(1, std::min(opts.workers, count));
    FourierOptions fo = opts.fourier;
    if (workers > 1) {
        fo.workers = 1;
    }
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    auto job = [&](int id) {
        try {
            for (int i = id; i < count; i += workers) {
                long n = from + i;
                pts[static_cast<size_t>(i)] = {n, expected_trace(w, n, spec, fo).value};
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
    return pts;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) {
        throw DomainError("zero-denominator", "rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num, den);
    num_ = Polynomial::divmod(num, g).first;
    den_ = Polynomial::divmod(den, g).first;
    Rational lead = den_.leading();
    num_ *= Rational(1) / lead;
    den_ *= Rational(1) / lead;
}

Rational
RationalFunction::operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d == 0) {
        throw DomainError("pole", "rational function evaluated at a pole");
    }
    return num_(x) / d;
}

std::string
RationalFunction::str(const std::string& var) const {
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalFunction
rational_interpolate(const std::vector<Sample>& points, int deg_num, int deg_den) {
    if (deg_num < 0 || deg_den < 0) {
        throw DomainError("invalid-degree", "degrees must be non-negative");
    }
    if (static_cast<int>(points.size()) < deg_num + deg_den + 2) {
        throw DomainError("too-few-points", "need at least deg_num + deg_den + 2 points");
    }
    auto f = solve_exact(points, deg_num, deg_den);
    if (!f || !reproduces(*f, points, 0, points.size(), nullptr)) {
        throw NoConsistentDegree("no rational function of degrees (" + std::to_string(deg_num) + ", " +
                                     std::to_string(deg_den) + ") fits the points",
                                 deg_num + deg_den);
    }
    return *f;
}

Interpolation
rational_interpolate(const std::vector<Sample>& points, const InterpolationOptions& opts) {
    const int total = static_cast<int>(points.size());
    const int fit = total - opts.held_out;
    if (opts.held_out < 0 || fit < 2) {
        throw DomainError("too-few-points", "need at least 2 fit points besides the held-out ones");
    }
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw DomainError("duplicate-point", "sample points must be distinct");
            }
        }
    }
    // The screen needs T + 2 fit points.
    int t_max = fit - 2;
    if (opts.max_total_degree >= 0) {
        t_max = std::min(t_max, opts.max_total_degree);
    }
    std::vector<u64> xs, ys;
    u64 p = 0;
    for (u64 q : kPrimes) {
        if (reduce_values(points, static_cast<size_t>(fit), q, xs, ys)) {
            p = q;
            break;
        }
    }
    int tried = opts.min_total_degree - 1;
    for (int T = std::max(0, opts.min_total_degree); T <= t_max; ++T) {
        // Splits closest to balanced first.
        std::vector<int> splits;
        for (int dn = 0; dn <= T; ++dn) {
            if (opts.growth_bounded && dn > T - dn + 1) {
                continue;
            }
            splits.push_back(dn);
        }
        std::stable_sort(splits.begin(), splits.end(),
                         [T](int a, int b) { return std::abs(2 * a - T) < std::abs(2 * b - T); });
        for (int dn : splits) {
            int dd = T - dn;
            if (p != 0 && !singular_mod_p(xs, ys, dn, dd, p)) {
                continue;
            }
            auto f = solve_exact(points, dn, dd);
            if (!f || !reproduces(*f, points, 0, static_cast<size_t>(fit), nullptr)) {
                continue;
            }
            Interpolation out;
            out.fit_points = fit;
            if (!reproduces(*f, points, static_cast<size_t>(fit), points.size(), &out.held_out_residuals)) {
                continue;
            }
            out.f = *f;
            out.deg_num = f->num().degree() < 0 ? 0 : f->num().degree();
            out.deg_den = f->den().degree();
            return out;
        }
        tried = T;
    }
    std::ostringstream os;
    os << "no degree pair with total degree <= " << t_max << " reproduces the " << opts.held_out
       << " held-out points (" << total << " points); the sampled range is too short or below the rationality threshold";
    throw NoConsistentDegree(os.str(), tried);
}

long double
LaurentExpansion::evaluate(long double n) const {
    long double s = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        int e = static_cast<int>(i) - 1;
        s += static_cast<long double>(coeffs[i].get_d()) * std::pow(n, static_cast<long double>(-e));
    }
    return s;
}

LaurentExpansion
laurent_coeffs(const RationalFunction& f, int M) {
    if (M < 1) {
        throw DomainError("invalid-order", "order must be positive");
    }
    LaurentExpansion out;
    out.order = M;
    out.coeffs.assign(static_cast<size_t>(M) + 1, Rational(0));
    if (f.num().is_zero()) {
        return out;
    }
    const int dn = f.num().degree();
    const int dd = f.den().degree();
    if (dn > dd + 1) {
        throw DomainError("growth-violation", "numerator degree exceeds denominator degree + 1");
    }
    // f(1/t) = t^e N~(t) / D~(t) with reversed coefficient lists.
    const int e = dd - dn;
    std::vector<Rational> nr(f.num().coeffs().rbegin(), f.num().coeffs().rend());
    std::vector<Rational> dr(f.den().coeffs().rbegin(), f.den().coeffs().rend());
    const int terms = M - e;  // series indices 0 .. M-1-e
    std::vector<Rational> rem(static_cast<size_t>(std::max(terms, 0)) + nr.size(), Rational(0));
    std::copy(nr.begin(), nr.end(), rem.begin());
    for (int k = 0; k < terms; ++k) {
        Rational c = rem[static_cast<size_t>(k)] / dr[0];
        for (size_t j = 0; j < dr.size() && static_cast<size_t>(k) + j < rem.size(); ++j) {
            rem[static_cast<size_t>(k) + j] -= c * dr[j];
        }
        int i = k + e;  // power of t, i.e. a_i
        if (i >= -1 && i <= M - 1) {
            out.coeffs[static_cast<size_t>(i + 1)] = c;
        }
    }
    return out;
}

PipelineRun
expansion_run(const Word& w, const CutoffSpec& spec, long n_from, int n_count, int M, const PipelineOptions& opts) {
    PipelineRun run;
    run.B = spec.B;
    run.threshold = w.length() + 2L * spec.B * spec.B * spec.B;
    run.requested_from = n_from;
    run.requested_count = n_count;
    if (n_count < 1) {
        throw DomainError("invalid-range", "n-count must be positive");
    }
    if (n_from < run.threshold) {
        throw DomainError("below-threshold", "n-from = " + std::to_string(n_from) + " is below |w| + 2B^3 = " +
                                                 std::to_string(run.threshold));
    }
    run.points = evaluate_points(w, spec, n_from, n_count, opts);
    InterpolationOptions io;
    io.held_out = opts.held_out;
    io.growth_bounded = true;
    for (;;) {
        try {
            run.fit = rational_interpolate(run.points, io);
            break;
        } catch (const NoConsistentDegree& e) {
            if (!opts.auto_extend || static_cast<int>(run.points.size()) >= opts.max_points) {
                throw NoConsistentDegree(std::string(e.what()) + "; n range " + std::to_string(n_from) + ".." +
                                             std::to_string(run.points.back().first),
                                         e.highest_tried());
            }
            // Degrees already screened stay excluded: the first T + 2 fit
            // points do not change when the range grows at its top.
            io.min_total_degree = std::max(io.min_total_degree, e.highest_tried() + 1);
            long next = run.points.back().first + 1;
            FourierOptions fo = opts.fourier;
            run.points.push_back({next, expected_trace(w, next, spec, fo).value});
            run.extended = true;
        }
    }
    run.used_from = run.points.front().first;
    run.used_count = static_cast<int>(run.points.size());
    run.expansion = laurent_coeffs(run.fit.f, M);
    return run;
}

PipelineResult
expansion_pipeline(const Word& w, const CutoffSpec& spec, long n_from, int n_count, int M,
                   const PipelineOptions& opts) {
    PipelineResult out;
    out.run = expansion_run(w, spec, n_from, n_count, M, opts);
    if (opts.stability) {
        CutoffSpec next = spec;
        next.B = spec.B + 1;
        long threshold = w.length() + 2L * next.B * next.B * next.B;
        StabilityReport rep;
        rep.next = expansion_run(w, next, std::max(n_from, threshold), n_count, M, opts);
        rep.all_agree = true;
        for (size_t i = 0; i < out.run.expansion.coeffs.size(); ++i) {
            bool same = out.run.expansion.coeffs[i] == rep.next.expansion.coeffs[i];
            rep.agree.push_back(same);
            rep.all_agree = rep.all_agree && same;
        }
        TailMajorant tm = tail_majorant(w, spec, out.run.used_from);
        rep.tail_note = tm.applicable ? "tail majorant at n = " + std::to_string(out.run.used_from) + ": " +
                                            std::to_string(static_cast<double>(tm.value)) + " (shape-level)"
                                      : "tail majorant " + tm.note;
        out.stability = rep;
    }
    return out;
}

}  // namespace swl
