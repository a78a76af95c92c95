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

#include "surfacewl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "surfacewl/characters.hpp"
#include "surfacewl/kernels.hpp"

namespace swl {

namespace {

// A character as a combination of products of power sums; negative parts
// stand for power sums of the inverse.
struct PowerPoly {
    std::vector<std::pair<double, std::vector<int>>> terms;
    int max_part = 0;
};

PowerPoly
build_power_poly(const YoungDiagram& mu, const YoungDiagram& nu) {
    std::vector<KoikeTerm> kt;
    if (nu.empty()) {
        kt.push_back({mu, YoungDiagram(), Integer(1)});
    } else {
        kt = koike_expand(mu, nu).terms;
    }
    std::map<std::vector<int>, Rational> acc;
    for (const auto& t : kt) {
        for (const auto& a : schur_expand_power_sums(t.nu2)) {
            for (const auto& b : schur_expand_power_sums(t.nu3)) {
                std::vector<int> parts = a.kappa.rows();
                for (int k : b.kappa.rows()) {
                    parts.push_back(-k);
                }
                std::sort(parts.begin(), parts.end());
                acc[parts] += Rational(t.coeff) * a.coeff * b.coeff;
            }
        }
    }
    PowerPoly p;
    for (const auto& [parts, c] : acc) {
        if (c == 0) {
            continue;
        }
        for (int k : parts) {
            p.max_part = std::max(p.max_part, std::abs(k));
        }
        p.terms.emplace_back(c.get_d(), parts);
    }
    return p;
}

cplx
evaluate_power_poly(const PowerPoly& p, const std::vector<cplx>& eig) {
    // p_{-k} = conj(p_k) on the unit circle.
    std::vector<cplx> ps(static_cast<size_t>(p.max_part) + 1);
    for (int k = 1; k <= p.max_part; ++k) {
        ps[static_cast<size_t>(k)] = power_sum(eig, k);
    }
    cplx total = 0;
    for (const auto& [c, parts] : p.terms) {
        cplx term = c;
        for (int k : parts) {
            term *= k > 0 ? ps[static_cast<size_t>(k)] : std::conj(ps[static_cast<size_t>(-k)]);
        }
        total += term;
    }
    return total;
}

std::uint64_t
splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct Moments {
    long count = 0;
    cplx mean = 0;
    double m2 = 0;  // sum |x - mean|^2
};

void
push(Moments& m, cplx x) {
    ++m.count;
    cplx d = x - m.mean;
    m.mean += d / static_cast<double>(m.count);
    m.m2 += std::real(std::conj(d) * (x - m.mean));
}

Moments
merge(const Moments& a, const Moments& b) {
    if (a.count == 0) {
        return b;
    }
    if (b.count == 0) {
        return a;
    }
    Moments m;
    m.count = a.count + b.count;
    double na = static_cast<double>(a.count), nb = static_cast<double>(b.count), nt = static_cast<double>(m.count);
    cplx d = b.mean - a.mean;
    m.mean = a.mean + d * (nb / nt);
    m.m2 = a.m2 + b.m2 + std::norm(d) * na * nb / nt;
    return m;
}

}  // namespace

const char*
group_name(Group g) {
    return g == Group::kU ? "U" : "SU";
}

Group
parse_group(const std::string& text) {
    if (text == "U" || text == "u") {
        return Group::kU;
    }
    if (text == "SU" || text == "su") {
        return Group::kSU;
    }
    throw DomainError("invalid-group", "group must be U or SU, got '" + text + "'");
}

Eigen::MatrixXcd
sample_haar_matrix(int n, Group group, std::mt19937_64& rng) {
    if (n < 1) {
        throw DomainError("invalid-n", "n must be positive");
    }
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd z(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double re = gauss(rng);
            double im = gauss(rng);
            z(i, j) = cplx(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto& r = qr.matrixQR();
    for (int i = 0; i < n; ++i) {
        cplx d = r(i, i);
        double a = std::abs(d);
        if (a > 0) {
            q.col(i) *= d / a;
        }
    }
    if (group == Group::kSU) {
        cplx det = q.determinant();
        std::uniform_int_distribution<int> branch(0, n - 1);
        double theta = (std::arg(det) + 2.0 * M_PI * branch(rng)) / n;
        q *= std::polar(1.0, -theta);
        cplx d2 = q.determinant();
        if (std::abs(d2 - 1.0) > kHaarTolerance) {
            throw std::logic_error("sample_haar: |det - 1| exceeds tolerance");
        }
    }
    Eigen::MatrixXcd e = q * q.adjoint() - Eigen::MatrixXcd::Identity(n, n);
    if (e.cwiseAbs().maxCoeff() > kHaarTolerance) {
        throw std::logic_error("sample_haar: unitarity defect exceeds tolerance");
    }
    return q;
}

HaarSample
sample_haar(int n, int count, Group group, std::mt19937_64& rng) {
    HaarSample s;
    s.n = n;
    s.group = group;
    for (int i = 0; i < count; ++i) {
        s.matrices.push_back(sample_haar_matrix(n, group, rng));
    }
    return s;
}

Eigen::MatrixXcd
word_matrix(const Word& w, const std::vector<Eigen::MatrixXcd>& m) {
    if (m.empty()) {
        throw DomainError("invalid-sample", "no matrices");
    }
    const int n = static_cast<int>(m[0].rows());
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd tmp(n, n);
    for (const auto& l : w.letters()) {
        const Eigen::MatrixXcd& x = m.at(static_cast<size_t>(l.gen));
        if (l.exp > 0) {
            kernels::matmul(acc.data(), x.data(), tmp.data(), n);
        } else {
            Eigen::MatrixXcd xi = x.adjoint();
            kernels::matmul(acc.data(), xi.data(), tmp.data(), n);
        }
        acc.swap(tmp);
    }
    return acc;
}

cplx
evaluate_word(const Word& w, const HaarSample& sample) {
    if (w.empty()) {
        return static_cast<double>(sample.n);
    }
    const auto& letters = w.letters();
    Word head(w.genus(), std::vector<Letter>(letters.begin(), letters.end() - 1));
    Eigen::MatrixXcd p = word_matrix(head, sample.matrices);
    const Letter& last = letters.back();
    const Eigen::MatrixXcd& x = sample.matrices.at(static_cast<size_t>(last.gen));
    if (last.exp > 0) {
        return kernels::trace_product(p.data(), x.data(), sample.n);
    }
    Eigen::MatrixXcd xi = x.adjoint();
    return kernels::trace_product(p.data(), xi.data(), sample.n);
}

std::vector<cplx>
unit_eigenvalues(const Eigen::MatrixXcd& u) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u, false);
    if (es.info() != Eigen::Success) {
        throw std::logic_error("unit_eigenvalues: eigensolver failed");
    }
    std::vector<cplx> out;
    for (int i = 0; i < u.rows(); ++i) {
        cplx l = es.eigenvalues()(i);
        double a = std::abs(l);
        if (std::abs(a - 1.0) > kHaarTolerance) {
            throw std::logic_error("unit_eigenvalues: eigenvalue off the unit circle");
        }
        out.push_back(l / a);
    }
    return out;
}

cplx
power_sum(const std::vector<cplx>& eig, int k) {
    cplx s = 0;
    for (cplx l : eig) {
        s += k >= 0 ? std::pow(l, k) : std::conj(std::pow(l, -k));
    }
    return s;
}

cplx
evaluate_schur(const YoungDiagram& lambda, const std::vector<cplx>& eig) {
    return evaluate_power_poly(build_power_poly(lambda, YoungDiagram()), eig);
}

cplx
evaluate_schur(const YoungDiagram& lambda, const Eigen::MatrixXcd& u) {
    return evaluate_schur(lambda, unit_eigenvalues(u));
}

cplx
evaluate_rational(const YoungDiagram& mu, const YoungDiagram& nu, const std::vector<cplx>& eig) {
    return evaluate_power_poly(build_power_poly(mu, nu), eig);
}

cplx
evaluate_rational(const YoungDiagram& mu, const YoungDiagram& nu, const Eigen::MatrixXcd& u) {
    return evaluate_rational(mu, nu, unit_eigenvalues(u));
}

double
McEstimate::deviation(cplx exact) const {
    double d = std::abs(exact - mean);
    if (std_error == 0) {
        return d <= 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return d / std_error;
}

bool
McEstimate::within(cplx exact, double k) const {
    return deviation(exact) <= k;
}

std::uint64_t
worker_seed(std::uint64_t seed, int worker) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(worker + 1));
}

McEstimate
mc_estimate(const std::function<cplx(const HaarSample&)>& f, int n, int count, Group group, long samples,
            std::uint64_t seed, int workers) {
    workers = std::max(1, workers);
    std::vector<Moments> parts(static_cast<size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    auto job = [&](int id) {
        try {
            long begin = samples * id / workers;
            long end = samples * (id + 1) / workers;
            std::mt19937_64 rng(worker_seed(seed, id));
            Moments m;
            for (long s = begin; s < end; ++s) {
                push(m, f(sample_haar(n, count, group, rng)));
            }
            parts[static_cast<size_t>(id)] = m;
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
    Moments total;
    for (const auto& p : parts) {
        total = merge(total, p);
    }
    McEstimate est;
    est.mean = total.mean;
    est.samples = total.count;
    est.seed = seed;
    est.workers = workers;
    if (total.count > 1) {
        double var = total.m2 / static_cast<double>(total.count - 1);
        est.std_error = std::sqrt(var / static_cast<double>(total.count));
    }
    return est;
}

McEstimate
mc_integral(const Word& w, const RepPair& rep, int n, Group group, long samples, std::uint64_t seed, int workers) {
    PowerPoly chi = build_power_poly(rep.mu, rep.nu);
    Word rel = relator(w.genus());
    auto f = [&](const HaarSample& s) {
        cplx tw = evaluate_word(w, s);
        if (chi.terms.size() == 1 && chi.max_part == 0) {
            return tw * chi.terms[0].first;  // trivial character
        }
        Eigen::MatrixXcd r = word_matrix(rel, s.matrices);
        return tw * std::conj(evaluate_power_poly(chi, unit_eigenvalues(r)));
    };
    return mc_estimate(f, n, 2 * w.genus(), group, samples, seed, workers);
}

McEstimate
mc_orthonormality(const YoungDiagram& mu, const YoungDiagram& nu, int n, long samples, std::uint64_t seed,
                  int workers) {
    if (n < mu.length() + nu.length()) {
        throw DomainError("rank-too-small", "mc_orthonormality needs n >= l(mu) + l(nu)");
    }
    PowerPoly chi = build_power_poly(mu, nu);
    auto f = [&](const HaarSample& s) {
        if (chi.max_part == 0) {
            return cplx(chi.terms.empty() ? 0.0 : chi.terms[0].first * chi.terms[0].first);
        }
        cplx v = evaluate_power_poly(chi, unit_eigenvalues(s.matrices[0]));
        return cplx(std::norm(v), 0.0);
    };
    return mc_estimate(f, n, 1, Group::kU, samples, seed, workers);
}

}  // namespace swl
