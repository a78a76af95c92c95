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

#include "surfacewl/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace swl {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) {
            throw DomainError("invalid-diagram", "rows must be positive");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw DomainError("invalid-diagram", "rows must be non-increasing");
        }
        size_ += rows_[i];
    }
}

YoungDiagram
YoungDiagram::from_padded(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) {
        rows.pop_back();
    }
    return YoungDiagram(std::move(rows));
}

YoungDiagram
YoungDiagram::parse(const std::string& text) {
    std::string t;
    for (char ch : text) {
        if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') {
            t.push_back(ch);
        }
    }
    if (t.empty() || t == "-" || t == "0" || t == "e") {
        return YoungDiagram();
    }
    std::vector<int> rows;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            rows.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("parse-error", "bad partition text '" + text + "'");
        }
    }
    return from_padded(std::move(rows));
}

YoungDiagram
YoungDiagram::transpose() const {
    std::vector<int> cols(static_cast<size_t>(first_row()), 0);
    for (int r : rows_) {
        for (int j = 0; j < r; ++j) {
            ++cols[static_cast<size_t>(j)];
        }
    }
    return YoungDiagram(std::move(cols));
}

bool
YoungDiagram::contains(const YoungDiagram& mu) const {
    if (mu.length() > length()) {
        return false;
    }
    for (int i = 0; i < mu.length(); ++i) {
        if (mu[i] > (*this)[i]) {
            return false;
        }
    }
    return true;
}

std::string
YoungDiagram::str() const {
    std::string s;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(rows_[i]);
    }
    return s;
}

namespace {

void
partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
               std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) {
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // Prune: the rest must fit in (max_len - 1) rows of width p.
        if (static_cast<long>(p) * max_len < remaining) {
            break;
        }
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

bool
canonical_less(const YoungDiagram& a, const YoungDiagram& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a > b;
}

}  // namespace

std::vector<YoungDiagram>
enumerate_partitions(int k) {
    return enumerate_partitions_bounded(k, k, k);
}

std::vector<YoungDiagram>
enumerate_partitions_bounded(int k, int max_len, int max_part) {
    std::vector<YoungDiagram> out;
    if (k < 0) {
        return out;
    }
    std::vector<int> cur;
    partitions_rec(k, max_part, max_len, cur, out);
    return out;
}

std::vector<YoungDiagram>
enumerate_partitions_in_box(int max_len, int max_part) {
    std::vector<YoungDiagram> out;
    for (int k = 0; k <= max_len * max_part; ++k) {
        auto part = enumerate_partitions_bounded(k, max_len, max_part);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<YoungDiagram>
enumerate_subdiagrams(const YoungDiagram& lambda) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
        if (i == lambda.length()) {
            out.push_back(YoungDiagram::from_padded(cur));
            return;
        }
        int cap = lambda[i];
        if (i > 0) {
            cap = std::min(cap, cur.back());
        }
        for (int v = cap; v >= 0; --v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

SkewShape::SkewShape(YoungDiagram outer_shape, YoungDiagram inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
    if (!outer.contains(inner)) {
        throw DomainError("invalid-skew-shape", "inner diagram not contained in outer");
    }
}

int
max_column_height(const YoungDiagram& mu, const YoungDiagram& lambda) {
    if (!lambda.contains(mu)) {
        return -1;
    }
    YoungDiagram lt = lambda.transpose();
    YoungDiagram mt = mu.transpose();
    int h = 0;
    for (int j = 0; j < lt.length(); ++j) {
        h = std::max(h, lt[j] - mt[j]);
    }
    return h;
}

bool
is_horizontal_strip(const YoungDiagram& mu, const YoungDiagram& lambda) {
    return is_r_strip(mu, lambda, 1);
}

bool
is_r_strip(const YoungDiagram& mu, const YoungDiagram& lambda, int r) {
    int h = max_column_height(mu, lambda);
    return h >= 0 && h <= r;
}

SkewRelation
skew_relation(const YoungDiagram& mu, const YoungDiagram& lambda, int r) {
    SkewRelation rel;
    rel.k = lambda.size() - mu.size();
    rel.holds_subset_k = lambda.contains(mu);
    rel.holds_horizontal_r = is_r_strip(mu, lambda, r);
    return rel;
}

std::vector<YoungDiagram>
enumerate_r_strip_inner(const YoungDiagram& lambda, int r) {
    std::vector<YoungDiagram> out;
    for (auto& mu : enumerate_subdiagrams(lambda)) {
        if (is_r_strip(mu, lambda, r)) {
            out.push_back(std::move(mu));
        }
    }
    return out;
}

namespace {

// Column-major depth-first filling shared by the list and count variants.
class SsytWalker {
 public:
    SsytWalker(const SkewShape& shape, int lo, int hi) : shape_(shape), lo_(lo), hi_(hi) {
        const auto& outer = shape.outer;
        const auto& inner = shape.inner;
        fill_.resize(static_cast<size_t>(outer.length()));
        for (int i = 0; i < outer.length(); ++i) {
            fill_[static_cast<size_t>(i)].assign(static_cast<size_t>(outer[i]), 0);
        }
        YoungDiagram ot = outer.transpose();
        YoungDiagram it = inner.transpose();
        for (int j = 0; j < outer.first_row(); ++j) {
            for (int i = it[j]; i < ot[j]; ++i) {
                boxes_.push_back({i, j, ot[j] - 1 - i});
            }
        }
    }

    template <typename Visit>
    void
    run(Visit&& visit) {
        rec(0, visit);
    }

    Tableau
    snapshot() const {
        Tableau t;
        for (int i = 0; i < shape_.outer.length(); ++i) {
            const auto& row = fill_[static_cast<size_t>(i)];
            t.rows.emplace_back(row.begin() + shape_.inner[i], row.end());
        }
        return t;
    }

 private:
    struct Box {
        int i, j, below;
    };

    template <typename Visit>
    void
    rec(size_t idx, Visit& visit) {
        if (idx == boxes_.size()) {
            visit();
            return;
        }
        const Box& b = boxes_[idx];
        int low = lo_;
        if (b.j - 1 >= shape_.inner[b.i]) {
            low = std::max(low, fill_[static_cast<size_t>(b.i)][static_cast<size_t>(b.j - 1)]);
        }
        if (b.i > 0 && b.j >= shape_.inner[b.i - 1]) {
            low = std::max(low, fill_[static_cast<size_t>(b.i - 1)][static_cast<size_t>(b.j)] + 1);
        }
        int high = hi_ - b.below;
        for (int v = low; v <= high; ++v) {
            fill_[static_cast<size_t>(b.i)][static_cast<size_t>(b.j)] = v;
            rec(idx + 1, visit);
        }
    }

    const SkewShape& shape_;
    int lo_, hi_;
    std::vector<std::vector<int>> fill_;
    std::vector<Box> boxes_;
};

}  // namespace

std::vector<Tableau>
enumerate_ssyt(const SkewShape& shape, int lo, int hi) {
    std::vector<Tableau> out;
    SsytWalker walker(shape, lo, hi);
    walker.run([&]() { out.push_back(walker.snapshot()); });
    return out;
}

Integer
count_ssyt(const SkewShape& shape, int lo, int hi) {
    std::uint64_t count = 0;
    SsytWalker walker(shape, lo, hi);
    walker.run([&]() { ++count; });
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
    return r;
}

Integer
count_standard_skew(const YoungDiagram& lambda, const YoungDiagram& mu) {
    if (!lambda.contains(mu)) {
        return 0;
    }
    std::map<std::vector<int>, Integer> memo;
    std::function<Integer(std::vector<int>&)> rec = [&](std::vector<int>& cur) -> Integer {
        bool done = true;
        for (int i = 0; i < lambda.length(); ++i) {
            if (cur[static_cast<size_t>(i)] != lambda[i]) {
                done = false;
                break;
            }
        }
        if (done) {
            return 1;
        }
        auto it = memo.find(cur);
        if (it != memo.end()) {
            return it->second;
        }
        Integer total = 0;
        for (int i = 0; i < lambda.length(); ++i) {
            auto& ci = cur[static_cast<size_t>(i)];
            bool room = ci < lambda[i] && (i == 0 || ci < cur[static_cast<size_t>(i - 1)]);
            if (room) {
                ++ci;
                total += rec(cur);
                --ci;
            }
        }
        memo.emplace(cur, total);
        return total;
    };
    std::vector<int> start(static_cast<size_t>(lambda.length()), 0);
    for (int i = 0; i < mu.length(); ++i) {
        start[static_cast<size_t>(i)] = mu[i];
    }
    return rec(start);
}

WeightCoords
weight_coords(const YoungDiagram& lambda, int n) {
    if (n < 1 || lambda.length() > n - 1) {
        throw DomainError("rank-too-small", "weight coordinates need length(lambda) <= n - 1");
    }
    WeightCoords w;
    w.n = n;
    w.x.resize(static_cast<size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) {
        w.x[static_cast<size_t>(i)] = lambda[i] - lambda[i + 1];
    }
    return w;
}

YoungDiagram
from_weight_coords(const WeightCoords& w) {
    if (static_cast<int>(w.x.size()) != w.n - 1) {
        throw DomainError("invalid-weight", "weight coordinates need n - 1 entries");
    }
    std::vector<int> rows(w.x.size(), 0);
    int acc = 0;
    for (size_t i = w.x.size(); i-- > 0;) {
        if (w.x[i] < 0) {
            throw DomainError("invalid-weight", "weight coordinates must be non-negative");
        }
        acc += w.x[i];
        rows[i] = acc;
    }
    return YoungDiagram::from_padded(std::move(rows));
}

std::string
RepPair::str() const {
    return "[(" + mu.str() + "),(" + nu.str() + ")]";
}

std::vector<int>
rational_signature(const YoungDiagram& mu, const YoungDiagram& nu, int n) {
    if (n < mu.length() + nu.length()) {
        throw DomainError("rank-too-small", "n < l(mu) + l(nu)");
    }
    std::vector<int> f(static_cast<size_t>(n), 0);
    for (int i = 0; i < mu.length(); ++i) {
        f[static_cast<size_t>(i)] = mu[i];
    }
    for (int j = 0; j < nu.length(); ++j) {
        f[static_cast<size_t>(n - 1 - j)] = -nu[j];
    }
    return f;
}

YoungDiagram
su_lambda(const YoungDiagram& mu, const YoungDiagram& nu, int n) {
    auto f = rational_signature(mu, nu, n);
    int last = f.back();
    for (auto& v : f) {
        v -= last;
    }
    return YoungDiagram::from_padded(std::move(f));
}

bool
omega_membership(const YoungDiagram& mu, const YoungDiagram& nu, const CutoffSpec& spec, int n) {
    long b2 = static_cast<long>(spec.B) * spec.B;
    return mu.length() <= spec.B && nu.length() <= spec.B && mu.first_row() <= b2 &&
           nu.first_row() <= b2 && n >= mu.length() + nu.length();
}

bool
lambda_membership(const YoungDiagram& lambda, const CutoffSpec& spec, int n) {
    if (lambda.length() > n - 1) {
        throw DomainError("rank-too-small", "Lambda(B;n) needs length(lambda) <= n - 1");
    }
    int b2 = spec.B * spec.B;
    for (int c = lambda.first_row() - b2; c <= b2; ++c) {
        int pos_len = 0, neg_len = 0, pos_max = 0, neg_max = 0;
        for (int i = 0; i < n; ++i) {
            int g = lambda[i] - c;
            if (g > 0) {
                ++pos_len;
                pos_max = std::max(pos_max, g);
            } else if (g < 0) {
                ++neg_len;
                neg_max = std::max(neg_max, -g);
            }
        }
        if (pos_len <= spec.B && neg_len <= spec.B && pos_max <= b2 && neg_max <= b2) {
            return false;
        }
    }
    return true;
}

bool
lambda_weight_condition(const YoungDiagram& lambda, const CutoffSpec& spec, int n) {
    auto w = weight_coords(lambda, n);
    for (int i = 1; i <= n - 1; ++i) {
        int x = w.x[static_cast<size_t>(i - 1)];
        bool edge = i <= spec.B || i >= n - spec.B;
        if (edge && x > spec.B) {
            return true;
        }
        if (!edge && x > 0) {
            return true;
        }
    }
    return false;
}

std::vector<RepPair>
omega_family(const CutoffSpec& spec, int n) {
    if (spec.B < 1) {
        throw DomainError("invalid-cutoff", "B must be positive");
    }
    int rows = std::min(spec.B, n);
    auto shapes = enumerate_partitions_in_box(rows, spec.B * spec.B);
    std::vector<RepPair> pairs;
    for (const auto& mu : shapes) {
        for (const auto& nu : shapes) {
            if (mu.length() + nu.length() <= n) {
                pairs.push_back({mu, nu});
            }
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const RepPair& a, const RepPair& b) {
        int sa = a.mu.size() + a.nu.size();
        int sb = b.mu.size() + b.nu.size();
        if (sa != sb) {
            return sa < sb;
        }
        if (a.mu != b.mu) {
            return a.mu > b.mu;
        }
        return a.nu > b.nu;
    });
    std::set<std::vector<int>> seen;
    std::vector<RepPair> out;
    for (auto& p : pairs) {
        if (seen.insert(su_lambda(p.mu, p.nu, n).rows()).second) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace swl
