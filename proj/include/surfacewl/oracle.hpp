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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "surfacewl/partitions.hpp"
#include "surfacewl/word.hpp"

namespace swl {

using cplx = std::complex<double>;

enum class Group { kU, kSU };

const char*
group_name(Group g);
Group
parse_group(const std::string& text);

// Unitarity and determinant tolerance enforced on every sample.
inline constexpr double kHaarTolerance = 1e-10;

struct HaarSample {
    int n = 1;
    Group group = Group::kU;
    std::vector<Eigen::MatrixXcd> matrices;
};

// Ginibre matrix, Householder QR, then the phases of diag(R) moved into Q;
// for SU(n) the result is divided by a uniformly chosen n-th root of its
// determinant. Throws std::logic_error if a tolerance check fails.
Eigen::MatrixXcd
sample_haar_matrix(int n, Group group, std::mt19937_64& rng);

HaarSample
sample_haar(int n, int count, Group group, std::mt19937_64& rng);

// w evaluated on the matrices (letter i uses matrices[i]).
Eigen::MatrixXcd
word_matrix(const Word& w, const std::vector<Eigen::MatrixXcd>& m);

// tr(w(x)); n for the empty word.
cplx
evaluate_word(const Word& w, const HaarSample& sample);

// Eigenvalues of a unitary, checked against the unit circle and projected
// onto it.
std::vector<cplx>
unit_eigenvalues(const Eigen::MatrixXcd& u);

// p_k = sum of k-th powers (k may be negative).
cplx
power_sum(const std::vector<cplx>& eig, int k);

// s_lambda from eigenvalue power sums.
cplx
evaluate_schur(const YoungDiagram& lambda, const std::vector<cplx>& eig);
cplx
evaluate_schur(const YoungDiagram& lambda, const Eigen::MatrixXcd& u);

// Rational character through the gated Koike expansion.
cplx
evaluate_rational(const YoungDiagram& mu, const YoungDiagram& nu, const std::vector<cplx>& eig);
cplx
evaluate_rational(const YoungDiagram& mu, const YoungDiagram& nu, const Eigen::MatrixXcd& u);

struct McEstimate {
    cplx mean;
    double std_error = 0;  // sample standard deviation / sqrt(samples)
    long samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;

    // |exact - mean| measured in standard errors (real and imaginary parts
    // combined).
    double
    deviation(cplx exact) const;
    bool
    within(cplx exact, double k) const;
};

// Stream i starts from splitmix64(seed + 0x9E3779B97F4A7C15 * (i + 1)).
std::uint64_t
worker_seed(std::uint64_t seed, int worker);

// Mean of f over Haar samples of `count` matrices. Worker i takes the
// samples [i N / W, (i+1) N / W); partial moments are merged in worker
// order.
McEstimate
mc_estimate(const std::function<cplx(const HaarSample&)>& f, int n, int count, Group group, long samples,
            std::uint64_t seed, int workers = 1);

// tr(w(x)) conj(chi_rep(R_g(x))).
McEstimate
mc_integral(const Word& w, const RepPair& rep, int n, Group group, long samples, std::uint64_t seed,
            int workers = 1);

// |s_{[mu,nu]}(u)|^2 over Haar U(n).
McEstimate
mc_orthonormality(const YoungDiagram& mu, const YoungDiagram& nu, int n, long samples, std::uint64_t seed,
                  int workers = 1);

}  // namespace swl
