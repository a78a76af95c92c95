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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "surfacewl/exact.hpp"
#include "surfacewl/partitions.hpp"
#include "surfacewl/polynomial.hpp"

namespace swl {

inline constexpr int kDefaultMaxCharacterK = 10;
inline constexpr int kDefaultMaxKoikeSize = 8;

struct CycleType {
    YoungDiagram partition;
    Integer class_size;  // k! / z_kappa
};

// z_kappa = prod_i i^{m_i} m_i!
Integer
z_value(const YoungDiagram& kappa);

// Cycle type of the concatenation kappa1 ∪ kappa2.
YoungDiagram
cycle_union(const YoungDiagram& a, const YoungDiagram& b);

class CharacterTable {
 public:
    CharacterTable() = default;
    explicit CharacterTable(int k);

    int
    k() const {
        return k_;
    }
    // Row labels and column labels share the canonical partition order.
    const std::vector<YoungDiagram>&
    shapes() const {
        return shapes_;
    }
    const std::vector<CycleType>&
    classes() const {
        return classes_;
    }
    long long
    at(size_t shape_idx, size_t class_idx) const {
        return values_[shape_idx][class_idx];
    }
    long long
    value(const YoungDiagram& lambda, const YoungDiagram& kappa) const;

    size_t
    index_of(const YoungDiagram& p) const;

    // rows = shapes, columns = cycle types
    std::string
    to_csv() const;

 private:
    int k_ = 0;
    std::vector<YoungDiagram> shapes_;
    std::vector<CycleType> classes_;
    std::vector<std::vector<long long>> values_;
    std::map<std::vector<int>, size_t> index_;
};

// Throws SizeLimitError when k exceeds max_k. Tables are cached.
std::shared_ptr<const CharacterTable>
char_table(int k, int max_k = kDefaultMaxCharacterK);

// Murnaghan-Nakayama value chi_lambda(kappa), memoized on beta-sets.
long long
mn_character(const YoungDiagram& lambda, const YoungDiagram& kappa);

// Hook-length formula d_lambda.
Integer
dim_sk(const YoungDiagram& lambda);

// Hook-content formula D_lambda(n); 0 when length(lambda) > n.
Integer
dim_un(const YoungDiagram& lambda, long n);

Polynomial
dim_un_poly(const YoungDiagram& lambda);

// Character inner product over S_|mu| x S_|nu| inside S_|lambda|.
Integer
lr_coeff(const YoungDiagram& mu, const YoungDiagram& nu, const YoungDiagram& lambda);

// Weyl dimension of the U(n) irrep with non-increasing signature f.
Integer
weyl_dimension(const std::vector<int>& f);

// D_{[mu,nu]}(n) via the Weyl product over the signature.
Integer
dim_rational(const YoungDiagram& mu, const YoungDiagram& nu, long n);

// The polynomial interpolating the Weyl values; degree |mu| + |nu|.
Polynomial
dim_rational_poly(const YoungDiagram& mu, const YoungDiagram& nu);

struct KoikeTerm {
    YoungDiagram nu2;
    YoungDiagram nu3;
    Integer coeff;
};

// s_{[mu,nu]}(g) = sum coeff * s_{nu2}(g) * s_{nu3}(g^{-1}).
struct KoikeExpansion {
    YoungDiagram mu;
    YoungDiagram nu;
    std::vector<KoikeTerm> terms;
    bool signed_convention = true;     // sign (-1)^{|nu1|} on inner terms
    std::vector<long> gate_points;     // n values used by the dimension gate
};

// Builds the expansion and runs the dimension consistency gate against
// dim_rational at five values of n. The signed convention is tried first;
// the unsigned one only if the signed one fails. Throws DomainError
// ("koike-gate") if neither passes. Results are cached.
KoikeExpansion
koike_expand(const YoungDiagram& mu, const YoungDiagram& nu, int max_size = kDefaultMaxKoikeSize);

// Raw expansion without the gate, for either sign convention.
std::vector<KoikeTerm>
koike_terms(const YoungDiagram& mu, const YoungDiagram& nu, bool signed_convention);

// Sum of coeff * D_{nu2}(n) * D_{nu3}(n).
Integer
koike_dimension(const std::vector<KoikeTerm>& terms, long n);

struct PowerSumTerm {
    YoungDiagram kappa;
    Rational coeff;
};

// s_lambda = sum_kappa (chi_lambda(kappa) / z_kappa) p_kappa; zero
// coefficients are dropped.
std::vector<PowerSumTerm>
schur_expand_power_sums(const YoungDiagram& lambda, int max_k = kDefaultMaxCharacterK);

struct IdentityReport {
    bool branching_ok = false;
    Integer branching_lhs;  // D_lambda(n)
    Integer branching_rhs;  // sum over horizontal strips of D_mu(n-1)
    bool induction_ok = false;
    Integer induction_lhs;  // sum d_{lambda/mu} d_lambda
    Integer induction_rhs;  // (l+b)!/l! d_mu
};

class IdentityViolation : public DomainError {
 public:
    IdentityViolation(const std::string& what, IdentityReport report)
        : DomainError("identity-violation", what), report_(std::move(report)) {}
    const IdentityReport&
    report() const {
        return report_;
    }

 private:
    IdentityReport report_;
};

// Verifies D_lambda(n) = sum_{mu ⊂^1 lambda, l(mu) <= n-1} D_mu(n-1) and
// sum_{lambda ⊃ mu, |lambda/mu| = b} d_{lambda/mu} d_lambda = (l+b)!/l! d_mu.
// Throws IdentityViolation with the counterexample on failure.
IdentityReport
branching_and_induction_checks(const YoungDiagram& lambda, const YoungDiagram& mu, long n, int b);

}  // namespace swl
