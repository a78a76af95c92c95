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

#include "surfacewl/weingarten.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "surfacewl/characters.hpp"

namespace swl {

const Rational&
WeingartenTable::value(const YoungDiagram& kappa) const {
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i] == kappa) {
            return values[i];
        }
    }
    throw DomainError("size-mismatch", "cycle type (" + kappa.str() + ") is not of " + std::to_string(k));
}

std::shared_ptr<const WeingartenTable>
weingarten_table(long n, int k, int max_k) {
    if (n < 1) {
        throw DomainError("invalid-rank", "weingarten_table needs n >= 1");
    }
    if (k < 0) {
        throw DomainError("invalid-size", "k must be non-negative");
    }
    if (k > max_k) {
        throw SizeLimitError("weingarten_table: k=" + std::to_string(k) + " exceeds maximum " +
                             std::to_string(max_k));
    }
    static std::mutex mu;
    static std::map<std::pair<long, int>, std::shared_ptr<const WeingartenTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, k});
        if (it != cache.end()) {
            return it->second;
        }
    }
    auto chars = char_table(k, std::max(k, kDefaultMaxCharacterK));
    auto table = std::make_shared<WeingartenTable>();
    table->n = n;
    table->k = k;
    Integer kf = factorial(k);
    Rational norm = make_rational(1, kf * kf);
    for (size_t j = 0; j < chars->classes().size(); ++j) {
        table->classes.push_back(chars->classes()[j].partition);
        Rational acc = 0;
        for (size_t i = 0; i < chars->shapes().size(); ++i) {
            const auto& lam = chars->shapes()[i];
            if (lam.length() > n) {
                continue;
            }
            Integer d = dim_sk(lam);
            acc += Rational(d * d * static_cast<long>(chars->at(i, j)), dim_un(lam, n));
        }
        acc.canonicalize();
        table->values.push_back(acc * norm);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(n, k), std::move(table)).first->second;
}

namespace {

std::vector<std::vector<std::uint8_t>>
all_permutations(int k) {
    std::vector<std::uint8_t> p(static_cast<size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::uint8_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

YoungDiagram
cycle_type(const std::vector<std::uint8_t>& p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        int len = 0;
        for (size_t t = s; !seen[t]; t = p[t]) {
            seen[t] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return YoungDiagram(std::move(lens));
}

// Permutations of one size with their inverses and class indices.
struct PermSet {
    int k = 0;
    std::vector<std::vector<std::uint8_t>> perms;
    std::vector<std::vector<std::uint8_t>> inverses;
    std::vector<int> class_of;
};

const PermSet&
perm_set(int k) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PermSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[k];
    if (!slot) {
        auto ps = std::make_unique<PermSet>();
        ps->k = k;
        ps->perms = all_permutations(k);
        auto chars = char_table(k, std::max(k, kDefaultMaxCharacterK));
        for (const auto& p : ps->perms) {
            std::vector<std::uint8_t> inv(p.size());
            for (size_t t = 0; t < p.size(); ++t) {
                inv[p[t]] = static_cast<std::uint8_t>(t);
            }
            ps->inverses.push_back(std::move(inv));
            ps->class_of.push_back(static_cast<int>(chars->index_of(cycle_type(p))));
        }
        slot = std::move(ps);
    }
    return *slot;
}

// Union-find with undo; no path compression so that undo is exact.
class RollbackUnionFind {
 public:
    explicit RollbackUnionFind(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1), comps_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int
    find(int x) const {
        while (parent_[static_cast<size_t>(x)] != x) {
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    void
    unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) {
            std::swap(a, b);
        }
        parent_[static_cast<size_t>(b)] = a;
        size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
        --comps_;
        history_.push_back(b);
    }
    size_t
    mark() const {
        return history_.size();
    }
    void
    rollback(size_t m) {
        while (history_.size() > m) {
            int b = history_.back();
            history_.pop_back();
            int a = parent_[static_cast<size_t>(b)];
            size_[static_cast<size_t>(a)] -= size_[static_cast<size_t>(b)];
            parent_[static_cast<size_t>(b)] = b;
            ++comps_;
        }
    }
    int
    components() const {
        return comps_;
    }

 private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
    int comps_;
};

struct LetterSlots {
    int k = 0;
    std::vector<int> ur, uc;  // unconjugated factor row/col nodes
    std::vector<int> cr, cc;  // conjugated factor row/col nodes
    const PermSet* perms = nullptr;
    int num_classes = 0;
    long stride = 1;          // histogram stride of this letter's class index
};

class Enumerator {
 public:
    Enumerator(const std::vector<LetterSlots>& letters, int nodes, long combos)
        : letters_(letters), uf_(nodes), combos_(combos),
          hist_(static_cast<size_t>(combos) * static_cast<size_t>(nodes + 1), 0) {}

    // Processes outer-grid indices [begin, end) of the first letter.
    void
    run_outer(std::uint64_t begin, std::uint64_t end) {
        const auto& L0 = letters_[0];
        std::uint64_t m = L0.perms->perms.size();
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            size_t si = static_cast<size_t>(idx / m);
            size_t pi = static_cast<size_t>(idx % m);
            size_t mark = uf_.mark();
            apply(L0, si, pi);
            descend(1, L0.perms->class_of[pi] * L0.stride);
            uf_.rollback(mark);
        }
    }

    const std::vector<std::uint64_t>&
    histogram() const {
        return hist_;
    }

 private:
    void
    apply(const LetterSlots& L, size_t si, size_t pi) {
        const auto& sigma = L.perms->perms[si];
        const auto& pinv = L.perms->inverses[pi];
        for (int t = 0; t < L.k; ++t) {
            uf_.unite(L.ur[static_cast<size_t>(t)], L.cr[sigma[static_cast<size_t>(t)]]);
            // tau = pi^{-1} sigma, so that sigma tau^{-1} = pi.
            uf_.unite(L.uc[static_cast<size_t>(t)], L.cc[pinv[sigma[static_cast<size_t>(t)]]]);
        }
    }

    void
    descend(size_t depth, long combo) {
        if (depth == letters_.size()) {
            ++hist_[static_cast<size_t>(uf_.components()) * static_cast<size_t>(combos_) +
                    static_cast<size_t>(combo)];
            return;
        }
        const auto& L = letters_[depth];
        const auto& ps = *L.perms;
        for (size_t si = 0; si < ps.perms.size(); ++si) {
            const auto& sigma = ps.perms[si];
            size_t m1 = uf_.mark();
            for (int t = 0; t < L.k; ++t) {
                uf_.unite(L.ur[static_cast<size_t>(t)], L.cr[sigma[static_cast<size_t>(t)]]);
            }
            for (size_t pi = 0; pi < ps.perms.size(); ++pi) {
                const auto& pinv = ps.inverses[pi];
                size_t m2 = uf_.mark();
                for (int t = 0; t < L.k; ++t) {
                    uf_.unite(L.uc[static_cast<size_t>(t)], L.cc[pinv[sigma[static_cast<size_t>(t)]]]);
                }
                descend(depth + 1, combo + ps.class_of[pi] * L.stride);
                uf_.rollback(m2);
            }
            uf_.rollback(m1);
        }
    }

    const std::vector<LetterSlots>& letters_;
    RollbackUnionFind uf_;
    long combos_;
    std::vector<std::uint64_t> hist_;
};

}  // namespace

Rational
haar_moment(long n, const std::vector<MatrixEntry>& unconj, const std::vector<MatrixEntry>& conj) {
    if (unconj.size() != conj.size()) {
        return 0;
    }
    int k = static_cast<int>(unconj.size());
    if (k == 0) {
        return 1;
    }
    auto wg = weingarten_table(n, k, kEngineMaxWeingartenK);
    const auto& ps = perm_set(k);
    Rational total = 0;
    for (size_t si = 0; si < ps.perms.size(); ++si) {
        const auto& sigma = ps.perms[si];
        bool rows_ok = true;
        for (int t = 0; t < k && rows_ok; ++t) {
            rows_ok = unconj[static_cast<size_t>(t)].row == conj[sigma[static_cast<size_t>(t)]].row;
        }
        if (!rows_ok) {
            continue;
        }
        for (size_t pi = 0; pi < ps.perms.size(); ++pi) {
            const auto& pinv = ps.inverses[pi];
            bool cols_ok = true;
            for (int t = 0; t < k && cols_ok; ++t) {
                cols_ok = unconj[static_cast<size_t>(t)].col == conj[pinv[sigma[static_cast<size_t>(t)]]].col;
            }
            if (cols_ok) {
                total += wg->values[static_cast<size_t>(ps.class_of[pi])];
            }
        }
    }
    return total;
}

Rational
haar_moment(long n, const std::vector<std::pair<MatrixEntry, MatrixEntry>>& pairs) {
    std::vector<MatrixEntry> u, c;
    for (const auto& [a, b] : pairs) {
        u.push_back(a);
        c.push_back(b);
    }
    return haar_moment(n, u, c);
}

std::vector<int>
ContractionDiagram::plus_counts() const {
    std::vector<int> c(static_cast<size_t>(num_letters()), 0);
    for (const auto& cyc : cycles) {
        for (const auto& o : cyc) {
            if (o.exp > 0) {
                ++c[static_cast<size_t>(o.letter)];
            }
        }
    }
    return c;
}

std::vector<int>
ContractionDiagram::minus_counts() const {
    std::vector<int> c(static_cast<size_t>(num_letters()), 0);
    for (const auto& cyc : cycles) {
        for (const auto& o : cyc) {
            if (o.exp < 0) {
                ++c[static_cast<size_t>(o.letter)];
            }
        }
    }
    return c;
}

bool
ContractionDiagram::balanced() const {
    return plus_counts() == minus_counts();
}

void
ContractionDiagram::validate() const {
    if (g < 1) {
        throw DomainError("invalid-diagram", "genus must be positive");
    }
    for (const auto& cyc : cycles) {
        if (cyc.empty()) {
            throw DomainError("invalid-diagram", "empty trace-cycle");
        }
        for (const auto& o : cyc) {
            if (o.letter < 0 || o.letter >= num_letters()) {
                throw DomainError("invalid-diagram", "letter index out of range");
            }
            if (o.exp != 1 && o.exp != -1) {
                throw DomainError("invalid-diagram", "exponent must be +1 or -1");
            }
        }
    }
}

ContractionDiagram
ContractionDiagram::normalized() const {
    ContractionDiagram d = *this;
    for (auto& cyc : d.cycles) {
        auto best = cyc;
        auto rot = cyc;
        for (size_t s = 1; s < cyc.size(); ++s) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) {
                best = rot;
            }
        }
        cyc = std::move(best);
    }
    std::sort(d.cycles.begin(), d.cycles.end());
    return d;
}

std::uint64_t
default_engine_budget() {
    if (const char* env = std::getenv("SURFACEWL_BUDGET")) {
        try {
            long double v = std::stold(env);
            if (v >= 1) {
                return static_cast<std::uint64_t>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return kDefaultEngineBudget;
}

long double
engine_cost(const ContractionDiagram& d) {
    long double cost = 1;
    for (int k : d.plus_counts()) {
        long double f = 1;
        for (int i = 2; i <= k; ++i) {
            f *= i;
        }
        cost *= f * f;
    }
    return cost;
}

Rational
word_power_integral(const ContractionDiagram& d, long n, const EngineOptions& opts) {
    d.validate();
    if (n < 1) {
        throw DomainError("invalid-rank", "n must be positive");
    }
    if (d.cycles.empty()) {
        return 1;
    }
    auto plus = d.plus_counts();
    auto minus = d.minus_counts();
    if (plus != minus) {
        return 0;
    }
    std::uint64_t budget = opts.budget ? opts.budget : default_engine_budget();
    long double cost = engine_cost(d);
    if (cost > static_cast<long double>(budget)) {
        std::ostringstream os;
        os << "word_power_integral: per-letter counts (";
        for (size_t i = 0; i < plus.size(); ++i) {
            os << (i ? "," : "") << plus[i];
        }
        os << ") need " << static_cast<double>(cost) << " terms, budget " << budget;
        throw BudgetError(os.str());
    }

    // Index nodes: one per position of every cycle. Occurrence t of a
    // cycle maps node t to node t+1.
    int nodes = 0;
    std::vector<LetterSlots> slots(static_cast<size_t>(d.num_letters()));
    for (const auto& cyc : d.cycles) {
        int m = static_cast<int>(cyc.size());
        for (int t = 0; t < m; ++t) {
            int here = nodes + t;
            int next = nodes + (t + 1) % m;
            auto& s = slots[static_cast<size_t>(cyc[static_cast<size_t>(t)].letter)];
            if (cyc[static_cast<size_t>(t)].exp > 0) {
                s.ur.push_back(here);
                s.uc.push_back(next);
            } else {
                s.cr.push_back(next);
                s.cc.push_back(here);
            }
        }
        nodes += m;
    }
    std::vector<LetterSlots> letters;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i].ur.empty()) {
            slots[i].k = static_cast<int>(slots[i].ur.size());
            letters.push_back(slots[i]);
        }
    }
    if (letters.empty()) {
        return 1;
    }
    // Largest letter outermost; it is also the parallel axis.
    std::vector<size_t> order(letters.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return letters[a].k > letters[b].k; });
    std::vector<LetterSlots> sorted;
    for (size_t i : order) {
        sorted.push_back(letters[i]);
    }
    long combos = 1;
    for (auto& L : sorted) {
        L.perms = &perm_set(L.k);
        L.num_classes = static_cast<int>(enumerate_partitions(L.k).size());
        L.stride = combos;
        combos *= L.num_classes;
    }

    std::uint64_t outer = static_cast<std::uint64_t>(sorted[0].perms->perms.size());
    outer *= outer;
    int workers = std::max(1, opts.workers);
    if (static_cast<std::uint64_t>(workers) > outer) {
        workers = static_cast<int>(outer);
    }
    std::vector<std::vector<std::uint64_t>> partial(static_cast<size_t>(workers));
    auto job = [&](int w) {
        std::uint64_t begin = outer * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        std::uint64_t end = outer * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
        Enumerator e(sorted, nodes, combos);
        e.run_outer(begin, end);
        partial[static_cast<size_t>(w)] = e.histogram();
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back(job, w);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    // Integer histograms merge exactly; the order is fixed anyway.
    std::vector<std::uint64_t> hist = partial[0];
    for (size_t w = 1; w < partial.size(); ++w) {
        for (size_t i = 0; i < hist.size(); ++i) {
            hist[i] += partial[w][i];
        }
    }

    std::vector<std::shared_ptr<const WeingartenTable>> wg;
    for (const auto& L : sorted) {
        wg.push_back(weingarten_table(n, L.k, kEngineMaxWeingartenK));
    }
    std::vector<Integer> npow(static_cast<size_t>(nodes) + 1);
    npow[0] = 1;
    for (int i = 1; i <= nodes; ++i) {
        npow[static_cast<size_t>(i)] = npow[static_cast<size_t>(i - 1)] * n;
    }
    Rational total = 0;
    for (long combo = 0; combo < combos; ++combo) {
        Integer loops = 0;
        for (int l = 0; l <= nodes; ++l) {
            std::uint64_t c = hist[static_cast<size_t>(l) * static_cast<size_t>(combos) + static_cast<size_t>(combo)];
            if (c) {
                Integer cz;
                mpz_import(cz.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
                loops += cz * npow[static_cast<size_t>(l)];
            }
        }
        if (loops == 0) {
            continue;
        }
        Rational term = loops;
        long rest = combo;
        for (size_t li = 0; li < sorted.size(); ++li) {
            long cls = rest % sorted[li].num_classes;
            rest /= sorted[li].num_classes;
            term *= wg[li]->values[static_cast<size_t>(cls)];
        }
        total += term;
    }
    return total;
}

}  // namespace swl
