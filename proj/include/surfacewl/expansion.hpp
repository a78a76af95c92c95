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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfacewl/exact.hpp"
#include "surfacewl/partitions.hpp"
#include "surfacewl/polynomial.hpp"
#include "surfacewl/surface.hpp"
#include "surfacewl/word.hpp"

namespace swl {

// num / den with gcd 1 and monic den; the zero function is 0 / 1.
class RationalFunction {
 public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial&
    num() const {
        return num_;
    }
    const Polynomial&
    den() const {
        return den_;
    }
    // Throws DomainError at a pole.
    Rational
    operator()(const Rational& x) const;
    bool
    operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::string
    str(const std::string& var = "n") const;

 private:
    Polynomial num_;
    Polynomial den_;
};

using Sample = std::pair<long, Rational>;

struct InterpolationOptions {
    int held_out = 3;
    int min_total_degree = 0;   // skip total degrees already excluded
    int max_total_degree = -1;  // -1: as many as the points allow
    bool growth_bounded = false;  // only deg num <= deg den + 1
};

struct Interpolation {
    RationalFunction f;
    int deg_num = 0;
    int deg_den = 0;
    int fit_points = 0;
    std::vector<Rational> held_out_residuals;  // all exactly zero on success
};

// Raised when no degree pair reproduces the held-out points.
class NoConsistentDegree : public DomainError {
 public:
    NoConsistentDegree(const std::string& what, int highest_tried)
        : DomainError("no-consistent-degree", what), highest_tried_(highest_tried) {}
    int
    highest_tried() const {
        return highest_tried_;
    }

 private:
    int highest_tried_;
};

// Fixed degrees: the nullspace of the evaluation matrix on the first
// deg_num + deg_den + 1 points, checked exactly on the rest. Needs
// deg_num + deg_den + 2 points.
RationalFunction
rational_interpolate(const std::vector<Sample>& points, int deg_num, int deg_den);

// Degree sweep. The last held_out points never enter the fit. Total degree
// T rises one step at a time; for each T the splits are screened by a
// determinant test modulo a 61-bit prime on T + 2 fit points, and a
// surviving split is solved exactly and accepted only if it reproduces
// every fit and held-out point.
Interpolation
rational_interpolate(const std::vector<Sample>& points, const InterpolationOptions& opts = {});

// a_{-1}, a_0, ..., a_{M-1} with f(n) = sum a_i n^{-i} at infinity.
struct LaurentExpansion {
    std::vector<Rational> coeffs;  // coeffs[i + 1] = a_i
    int order = 0;

    const Rational&
    a(int i) const {
        return coeffs.at(static_cast<size_t>(i + 1));
    }
    long double
    evaluate(long double n) const;
};

// Series division in t = 1/n. Throws DomainError "growth-violation" when
// deg num > deg den + 1.
LaurentExpansion
laurent_coeffs(const RationalFunction& f, int M);

struct PipelineOptions {
    FourierOptions fourier;
    int workers = 1;
    bool auto_extend = true;   // append n values until a fit validates
    int max_points = 200;
    int held_out = 3;
    bool stability = true;     // rerun with B + 1 and compare
};

struct PipelineRun {
    int B = 1;
    long threshold = 0;
    long requested_from = 0;
    int requested_count = 0;
    long used_from = 0;
    int used_count = 0;
    bool extended = false;
    std::vector<Sample> points;
    Interpolation fit;
    LaurentExpansion expansion;
};

struct StabilityReport {
    PipelineRun next;              // the run at B + 1
    std::vector<bool> agree;       // per order, a_{-1} first
    bool all_agree = false;
    std::string tail_note;
};

struct PipelineResult {
    PipelineRun run;
    std::optional<StabilityReport> stability;
};

// Exact expected_trace over n_from, n_from + 1, ..., then fit and expand.
// Every n must satisfy n >= |w| + 2 B^3. With auto_extend the range grows
// at its upper end, one n at a time, until the sweep validates. The B + 1
// run starts at max(n_from, its own threshold).
PipelineResult
expansion_pipeline(const Word& w, const CutoffSpec& spec, long n_from, int n_count, int M,
                   const PipelineOptions& opts = {});

// One cutoff only (no stability rerun).
PipelineRun
expansion_run(const Word& w, const CutoffSpec& spec, long n_from, int n_count, int M, const PipelineOptions& opts);

}  // namespace swl
