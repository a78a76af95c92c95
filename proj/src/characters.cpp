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

#include "surfacewl/characters.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace swl {

namespace {

// Internal tables (LR coefficients, Koike inner terms) may go past the
// user-facing default maximum.
constexpr int kInternalMaxK = 20;

using MnMemo = std::map<std::vector<int>, long long>;

long long
mn_rec(const std::vector<int>& rows, const std::vector<int>& parts, size_t idx, MnMemo& memo) {
    if (idx == parts.size()) {
        return rows.empty() ? 1 : 0;
    }
    std::vector<int> key = rows;
    key.push_back(-1);
    key.insert(key.end(), parts.begin() + static_cast<long>(idx), parts.end());
    auto it = memo.find(key);
    if (it != memo.end()) {
        return it->second;
    }
    int r = parts[idx];
    int len = static_cast<int>(rows.size());
    // Beta-set, strictly decreasing.
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        beta[static_cast<size_t>(i)] = rows[static_cast<size_t>(i)] + (len - 1 - i);
    }
    long long total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int target = b - r;
        if (target < 0) {
            continue;
        }
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        int between = 0;
        for (int v : beta) {
            if (v > target && v < b) {
                ++between;
            }
        }
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> nrows;
        for (int t = 0; t < len; ++t) {
            int v = nb[static_cast<size_t>(t)] - (len - 1 - t);
            if (v > 0) {
                nrows.push_back(v);
            }
        }
        long long sub = mn_rec(nrows, parts, idx + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

Integer
hook_product(const YoungDiagram& lambda) {
    YoungDiagram t = lambda.transpose();
    Integer prod = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            prod *= (lambda[i] - j - 1) + (t[j] - i - 1) + 1;
        }
    }
    return prod;
}

std::string
pair_key(const YoungDiagram& a, const YoungDiagram& b) {
    return a.str() + "|" + b.str();
}

}  // namespace

Integer
z_value(const YoungDiagram& kappa) {
    Integer z = 1;
    std::map<int, int> mult;
    for (int p : kappa.rows()) {
        ++mult[p];
        z *= p;
    }
    for (const auto& [part, m] : mult) {
        z *= factorial(m);
    }
    return z;
}

YoungDiagram
cycle_union(const YoungDiagram& a, const YoungDiagram& b) {
    std::vector<int> r = a.rows();
    r.insert(r.end(), b.rows().begin(), b.rows().end());
    std::sort(r.begin(), r.end(), std::greater<>());
    return YoungDiagram(std::move(r));
}

long long
mn_character(const YoungDiagram& lambda, const YoungDiagram& kappa) {
    if (lambda.size() != kappa.size()) {
        throw DomainError("size-mismatch", "character needs |lambda| = |kappa|");
    }
    thread_local MnMemo memo;
    return mn_rec(lambda.rows(), kappa.rows(), 0, memo);
}

CharacterTable::CharacterTable(int k) : k_(k) {
    shapes_ = enumerate_partitions(k);
    Integer kf = factorial(k);
    for (size_t i = 0; i < shapes_.size(); ++i) {
        classes_.push_back({shapes_[i], kf / z_value(shapes_[i])});
        index_.emplace(shapes_[i].rows(), i);
    }
    values_.assign(shapes_.size(), std::vector<long long>(shapes_.size(), 0));
    for (size_t i = 0; i < shapes_.size(); ++i) {
        for (size_t j = 0; j < shapes_.size(); ++j) {
            values_[i][j] = mn_character(shapes_[i], shapes_[j]);
        }
    }
}

size_t
CharacterTable::index_of(const YoungDiagram& p) const {
    auto it = index_.find(p.rows());
    if (it == index_.end()) {
        throw DomainError("size-mismatch", "partition (" + p.str() + ") is not of " + std::to_string(k_));
    }
    return it->second;
}

long long
CharacterTable::value(const YoungDiagram& lambda, const YoungDiagram& kappa) const {
    return values_[index_of(lambda)][index_of(kappa)];
}

std::string
CharacterTable::to_csv() const {
    std::ostringstream os;
    os << "lambda";
    for (const auto& c : classes_) {
        os << ",\"(" << c.partition.str() << ")\"";
    }
    os << "\n";
    for (size_t i = 0; i < shapes_.size(); ++i) {
        os << "\"(" << shapes_[i].str() << ")\"";
        for (size_t j = 0; j < classes_.size(); ++j) {
            os << "," << values_[i][j];
        }
        os << "\n";
    }
    return os.str();
}

std::shared_ptr<const CharacterTable>
char_table(int k, int max_k) {
    if (k < 0) {
        throw DomainError("invalid-size", "k must be non-negative");
    }
    if (k > max_k) {
        throw SizeLimitError("char_table: k=" + std::to_string(k) + " exceeds maximum " +
                             std::to_string(max_k));
    }
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) {
            return it->second;
        }
    }
    auto table = std::make_shared<const CharacterTable>(k);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(k, table).first->second;
}

Integer
dim_sk(const YoungDiagram& lambda) {
    return factorial(lambda.size()) / hook_product(lambda);
}

Integer
dim_un(const YoungDiagram& lambda, long n) {
    if (lambda.length() > n) {
        return 0;
    }
    Integer num = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            num *= Integer(n + j - i);
        }
    }
    return num / hook_product(lambda);
}

Polynomial
dim_un_poly(const YoungDiagram& lambda) {
    Polynomial p(1);
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            p *= Polynomial::linear(Rational(j - i));
        }
    }
    p *= Rational(Integer(1), hook_product(lambda));
    return p;
}

Integer
lr_coeff(const YoungDiagram& mu, const YoungDiagram& nu, const YoungDiagram& lambda) {
    if (mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu)) {
        return 0;
    }
    if (mu.empty()) {
        return nu == lambda ? 1 : 0;
    }
    if (nu.empty()) {
        return mu == lambda ? 1 : 0;
    }
    static std::mutex memo_mu;
    static std::map<std::string, Integer> memo;
    std::string key = mu.str() + "|" + nu.str() + "|" + lambda.str();
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
    }
    auto ta = char_table(mu.size(), kInternalMaxK);
    auto tb = char_table(nu.size(), kInternalMaxK);
    auto tl = char_table(lambda.size(), kInternalMaxK);
    size_t im = ta->index_of(mu);
    size_t in = tb->index_of(nu);
    size_t il = tl->index_of(lambda);
    Rational acc = 0;
    for (size_t i = 0; i < ta->classes().size(); ++i) {
        long long cm = ta->at(im, i);
        if (cm == 0) {
            continue;
        }
        const auto& ki = ta->classes()[i].partition;
        Integer zi = z_value(ki);
        for (size_t j = 0; j < tb->classes().size(); ++j) {
            long long cn = tb->at(in, j);
            if (cn == 0) {
                continue;
            }
            const auto& kj = tb->classes()[j].partition;
            long long cl = tl->at(il, tl->index_of(cycle_union(ki, kj)));
            if (cl == 0) {
                continue;
            }
            acc += Rational(Integer(static_cast<long>(cm)) * static_cast<long>(cn) * static_cast<long>(cl), zi * z_value(kj));
        }
    }
    acc.canonicalize();
    if (acc.get_den() != 1) {
        throw DomainError("internal", "non-integral LR coefficient");
    }
    Integer result = acc.get_num();
    std::lock_guard<std::mutex> lock(memo_mu);
    memo.emplace(key, result);
    return result;
}

Integer
weyl_dimension(const std::vector<int>& f) {
    Integer num = 1, den = 1;
    size_t n = f.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (f[i] == f[j]) {
                continue;
            }
            long gap = static_cast<long>(j - i);
            num *= Integer(f[i] - f[j] + gap);
            den *= Integer(gap);
        }
    }
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) {
        throw DomainError("invalid-signature", "signature is not non-increasing");
    }
    return q;
}

Integer
dim_rational(const YoungDiagram& mu, const YoungDiagram& nu, long n) {
    if (n < mu.length() + nu.length()) {
        throw DomainError("rank-too-small", "dim_rational needs n >= l(mu) + l(nu)");
    }
    return weyl_dimension(rational_signature(mu, nu, static_cast<int>(n)));
}

Polynomial
dim_rational_poly(const YoungDiagram& mu, const YoungDiagram& nu) {
    static std::mutex mu_lock;
    static std::map<std::string, Polynomial> cache;
    std::string key = pair_key(mu, nu);
    {
        std::lock_guard<std::mutex> lock(mu_lock);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    long base = std::max(1, mu.length() + nu.length());
    int deg = mu.size() + nu.size();
    std::vector<Rational> xs, ys;
    for (long n = base; n <= base + deg; ++n) {
        xs.emplace_back(n);
        ys.emplace_back(dim_rational(mu, nu, n));
    }
    Polynomial p = Polynomial::interpolate(xs, ys);
    std::lock_guard<std::mutex> lock(mu_lock);
    return cache.emplace(key, p).first->second;
}

std::vector<KoikeTerm>
koike_terms(const YoungDiagram& mu, const YoungDiagram& nu, bool signed_convention) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> agg;
    int jmax = std::min(mu.size(), nu.size());
    for (int j = 0; j <= jmax; ++j) {
        for (const auto& nu1 : enumerate_partitions(j)) {
            if (!mu.contains(nu1)) {
                continue;
            }
            YoungDiagram nu1t = nu1.transpose();
            if (!nu.contains(nu1t)) {
                continue;
            }
            int sign = (signed_convention && (j % 2 == 1)) ? -1 : 1;
            for (const auto& nu2 : enumerate_partitions(mu.size() - j)) {
                Integer a = lr_coeff(nu1, nu2, mu);
                if (a == 0) {
                    continue;
                }
                for (const auto& nu3 : enumerate_partitions(nu.size() - j)) {
                    Integer c = lr_coeff(nu1t, nu3, nu);
                    if (c == 0) {
                        continue;
                    }
                    agg[{nu2.rows(), nu3.rows()}] += sign * a * c;
                }
            }
        }
    }
    std::vector<KoikeTerm> terms;
    for (auto& [key, coeff] : agg) {
        if (coeff != 0) {
            terms.push_back({YoungDiagram(key.first), YoungDiagram(key.second), coeff});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const KoikeTerm& a, const KoikeTerm& b) {
        int sa = a.nu2.size() + a.nu3.size();
        int sb = b.nu2.size() + b.nu3.size();
        if (sa != sb) {
            return sa > sb;
        }
        if (a.nu2 != b.nu2) {
            return a.nu2 > b.nu2;
        }
        return a.nu3 > b.nu3;
    });
    return terms;
}

Integer
koike_dimension(const std::vector<KoikeTerm>& terms, long n) {
    Integer total = 0;
    for (const auto& t : terms) {
        total += t.coeff * dim_un(t.nu2, n) * dim_un(t.nu3, n);
    }
    return total;
}

KoikeExpansion
koike_expand(const YoungDiagram& mu, const YoungDiagram& nu, int max_size) {
    if (mu.size() > max_size || nu.size() > max_size) {
        throw SizeLimitError("koike_expand: |mu| or |nu| exceeds " + std::to_string(max_size));
    }
    static std::mutex lock_mu;
    static std::map<std::string, KoikeExpansion> cache;
    std::string key = pair_key(mu, nu);
    {
        std::lock_guard<std::mutex> lock(lock_mu);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    long base = std::max(1, mu.length() + nu.length());
    std::vector<long> points;
    for (long n = base; n < base + 5; ++n) {
        points.push_back(n);
    }
    for (bool sgn : {true, false}) {
        auto terms = koike_terms(mu, nu, sgn);
        bool ok = true;
        for (long n : points) {
            if (koike_dimension(terms, n) != dim_rational(mu, nu, n)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            KoikeExpansion e{mu, nu, std::move(terms), sgn, points};
            std::lock_guard<std::mutex> lock(lock_mu);
            return cache.emplace(key, e).first->second;
        }
    }
    throw DomainError("koike-gate", "no sign convention reproduces the Weyl dimension for " +
                                        RepPair{mu, nu}.str());
}

std::vector<PowerSumTerm>
schur_expand_power_sums(const YoungDiagram& lambda, int max_k) {
    auto table = char_table(lambda.size(), max_k);
    size_t row = table->index_of(lambda);
    std::vector<PowerSumTerm> out;
    for (size_t j = 0; j < table->classes().size(); ++j) {
        long long chi = table->at(row, j);
        if (chi == 0) {
            continue;
        }
        const auto& kappa = table->classes()[j].partition;
        out.push_back({kappa, make_rational(Integer(static_cast<long>(chi)), z_value(kappa))});
    }
    return out;
}

IdentityReport
branching_and_induction_checks(const YoungDiagram& lambda, const YoungDiagram& mu, long n, int b) {
    IdentityReport rep;
    rep.branching_lhs = dim_un(lambda, n);
    rep.branching_rhs = 0;
    for (const auto& m : enumerate_r_strip_inner(lambda, 1)) {
        if (m.length() <= n - 1) {
            rep.branching_rhs += dim_un(m, n - 1);
        }
    }
    rep.branching_ok = rep.branching_lhs == rep.branching_rhs;

    int l = mu.size();
    rep.induction_lhs = 0;
    for (const auto& lam : enumerate_partitions(l + b)) {
        if (lam.contains(mu)) {
            rep.induction_lhs += count_standard_skew(lam, mu) * dim_sk(lam);
        }
    }
    rep.induction_rhs = factorial(l + b) / factorial(l) * dim_sk(mu);
    rep.induction_ok = rep.induction_lhs == rep.induction_rhs;

    if (!rep.branching_ok) {
        throw IdentityViolation("branching identity fails for lambda=(" + lambda.str() + "), n=" +
                                    std::to_string(n),
                                rep);
    }
    if (!rep.induction_ok) {
        throw IdentityViolation("induction identity fails for mu=(" + mu.str() + "), b=" +
                                    std::to_string(b),
                                rep);
    }
    return rep;
}

}  // namespace swl
